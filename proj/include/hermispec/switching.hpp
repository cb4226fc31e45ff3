#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hermispec/cycles.hpp"
#include "hermispec/error.hpp"
#include "hermispec/gaussian.hpp"
#include "hermispec/mixed_graph.hpp"

namespace hermispec {

/// theta : V -> {1, -1, i, -i}, applied as H' = D(theta) H D(theta)^-1.
struct SwitchingFunction {
  std::vector<GaussianUnit> theta;

  static SwitchingFunction identity(int n) { return {std::vector<GaussianUnit>(static_cast<std::size_t>(n))}; }
  int size() const { return static_cast<int>(theta.size()); }
  GaussianUnit operator()(int v) const { return theta[static_cast<std::size_t>(v)]; }
  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

/// Composition: (b after a)(v) = b(v) a(v).
inline SwitchingFunction compose(const SwitchingFunction& b, const SwitchingFunction& a) {
  SwitchingFunction c = a;
  for (std::size_t v = 0; v < c.theta.size(); ++v) c.theta[v] = b.theta[v] * a.theta[v];
  return c;
}

/// Hermitian matrix with entries in {0, 1, i, -1, -i}: a Z4-gain graph.
/// Mixed graphs are the gain graphs without -1 entries.
class GainGraph {
 public:
  explicit GainGraph(int n = 0) : n_(n), e_(static_cast<std::size_t>(n) * n, kNone) {}
  explicit GainGraph(const MixedGraph& g) : GainGraph(g.order()) {
    for (auto [u, v] : g.edges()) set(u, v, g.entry(u, v)->exponent());
  }

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return e_[idx(u, v)] != kNone; }
  /// Exponent k with H(u,v) = i^k, or -1 when not adjacent.
  int exponent(int u, int v) const { return e_[idx(u, v)]; }
  void set(int u, int v, int k) {
    k = ((k % 4) + 4) % 4;
    e_[idx(u, v)] = static_cast<std::int8_t>(k);
    e_[idx(v, u)] = static_cast<std::int8_t>((4 - k) % 4);
  }
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  GainGraph switched(const SwitchingFunction& t) const {
    if (t.size() != n_) throw InvalidArgument("switching function size does not match graph order");
    GainGraph r(n_);
    for (auto [u, v] : edges()) r.set(u, v, t(u).exponent() + exponent(u, v) - t(v).exponent());
    return r;
  }

  bool is_mixed() const {
    return std::none_of(e_.begin(), e_.end(), [](std::int8_t k) { return k == 2; });
  }
  bool is_real() const {
    return std::none_of(e_.begin(), e_.end(), [](std::int8_t k) { return k == 1 || k == 3; });
  }

  MixedGraph to_mixed() const {
    MixedGraphBuilder b(n_);
    for (auto [u, v] : edges()) {
      if (exponent(u, v) == 2)
        throw InvalidGraph("switching yields entry -1 on {" + std::to_string(u) + "," + std::to_string(v) +
                           "}, which is not a mixed-graph entry");
      b.set(u, v, exponent(u, v));
    }
    return std::move(b).build();
  }

  friend bool operator==(const GainGraph&, const GainGraph&) = default;

 private:
  static constexpr std::int8_t kNone = -1;
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  int n_;
  std::vector<std::int8_t> e_;
};

/// H(g') = D H(g) D^-1. Throws InvalidGraph when an entry would become -1.
inline MixedGraph apply_switching(const MixedGraph& g, const SwitchingFunction& t) {
  return GainGraph(g).switched(t).to_mixed();
}

inline bool is_admissible(const MixedGraph& g, const SwitchingFunction& t) {
  return GainGraph(g).switched(t).is_mixed();
}

/// Spanning forest found by BFS from the smallest vertex of each component.
struct SpanningForest {
  std::vector<int> order;   // BFS visiting order
  std::vector<int> parent;  // -1 for roots
  std::vector<Edge> tree;   // (parent, child)
  std::vector<Edge> chords; // (u,v), u<v
};

inline SpanningForest spanning_forest(const GainGraph& g) {
  const int n = g.order();
  SpanningForest f;
  f.parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int a = q.front();
      q.pop_front();
      f.order.push_back(a);
      for (int b = 0; b < n; ++b) {
        if (!g.adjacent(a, b) || seen[b]) continue;
        seen[b] = true;
        f.parent[b] = a;
        f.tree.emplace_back(a, b);
        q.push_back(b);
      }
    }
  }
  for (auto [u, v] : g.edges())
    if (f.parent[v] != u && f.parent[u] != v) f.chords.emplace_back(u, v);
  return f;
}

/// theta with g1 switched by theta equal to g2, if one exists. Both must share the underlying graph.
inline std::optional<SwitchingFunction> switching_witness(const GainGraph& g1, const GainGraph& g2) {
  if (g1.order() != g2.order() || g1.edges() != g2.edges())
    throw InvalidArgument("switching comparison needs identical underlying graphs");
  const auto f = spanning_forest(g1);
  SwitchingFunction t = SwitchingFunction::identity(g1.order());
  for (auto [a, b] : f.tree)
    t.theta[b] = GaussianUnit::from_exponent(t(a).exponent() + g1.exponent(a, b) - g2.exponent(a, b));
  if (g1.switched(t) != g2) return std::nullopt;
  return t;
}

inline std::optional<SwitchingFunction> switching_witness(const MixedGraph& g1, const MixedGraph& g2) {
  return switching_witness(GainGraph(g1), GainGraph(g2));
}

/// Decision at fixed labels. Throws InvalidArgument when the underlying graphs differ.
inline bool switching_equivalent(const MixedGraph& g1, const MixedGraph& g2) {
  return switching_witness(g1, g2).has_value();
}

/// Spanning-forest normal form: tree edges switched to 1, chords carry the residual gains.
struct ForestNormalForm {
  SpanningForest forest;
  SwitchingFunction theta;
  GainGraph normalized;
  std::vector<int> chord_gains;  // exponents, aligned with forest.chords
};

inline ForestNormalForm forest_normal_form(const GainGraph& g) {
  ForestNormalForm r{spanning_forest(g), SwitchingFunction::identity(g.order()), GainGraph(g.order()), {}};
  for (auto [a, b] : r.forest.tree)
    r.theta.theta[b] = GaussianUnit::from_exponent(r.theta(a).exponent() + g.exponent(a, b));
  r.normalized = g.switched(r.theta);
  for (auto [u, v] : r.forest.chords) r.chord_gains.push_back(r.normalized.exponent(u, v));
  return r;
}

/// theta that makes every arc of a mixed forest undirected.
inline SwitchingFunction normalize_forest(const MixedGraph& g) {
  if (structure(g).corank != 0) throw InvalidArgument("normalize_forest: graph has a cycle");
  return forest_normal_form(GainGraph(g)).theta;
}

enum class CycleTag { Type0 = 0, Type1 = 1, Type2 = 2 };

struct CycleType {
  CycleTag tag = CycleTag::Type0;
  int order = 0;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

inline CycleTag tag_of_value(GaussianUnit v) {
  if (v == GaussianUnit::one()) return CycleTag::Type0;
  if (v == GaussianUnit::minus_one()) return CycleTag::Type2;
  return CycleTag::Type1;
}

inline std::string to_string(CycleTag t) { return "Type" + std::to_string(static_cast<int>(t)); }

struct CanonicalResult {
  CycleType type;
  SwitchingFunction theta;
  MixedGraph representative;
  GaussianUnit value;  // cycle value along the canonical traversal
};

namespace detail {

/// Canonical cycle on a traversal w0 w1 ... : Type1 has one arc on (w0,w1), Type2 arcs (w0,w1),(w1,w2).
/// Value -i at fixed labels puts the single arc as (w1,w0).
inline void place_canonical_cycle(MixedGraphBuilder& b, const std::vector<int>& w, GaussianUnit value) {
  const int l = static_cast<int>(w.size());
  for (int k = 0; k < l; ++k) b.set(w[k], w[(k + 1) % l], 0);
  switch (value.exponent()) {
    case 1: b.set(w[0], w[1], 1); break;
    case 3: b.set(w[0], w[1], 3); break;
    case 2:
      b.set(w[0], w[1], 1);
      b.set(w[1], w[2], 1);
      break;
    default: break;
  }
}

inline CanonicalResult canonicalize_with_cycle(const MixedGraph& g, const Cycle& c) {
  const auto& w = c.vertices;  // starts at its smallest vertex, w[1] < w.back()
  const GaussianUnit value = cycle_value(g, w);
  MixedGraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.set(u, v, 0);
  place_canonical_cycle(b, w, value);
  MixedGraph rep = std::move(b).build();
  auto t = switching_witness(g, rep);
  if (!t) throw ConsistencyError("no switching to the canonical representative");
  return {{tag_of_value(value), c.length()}, *t, std::move(rep), value};
}

}  // namespace detail

inline bool is_cycle_graph(const MixedGraph& g) {
  if (g.order() < 3 || !g.simple().is_connected()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

/// Type and a switching onto the canonical representative. For a cycle labeled 0..n-1 in order
/// the representative of value i is cycle(n, 1); value -i cycles get the arc (1,0).
inline CanonicalResult canonicalize_cycle(const MixedGraph& g) {
  if (!is_cycle_graph(g)) throw InvalidArgument("canonicalize_cycle: underlying graph is not a cycle");
  const auto cs = all_cycles(g);
  return detail::canonicalize_with_cycle(g, cs.front());
}

/// Connected, corank 1. Tree edges of the representative are undirected.
inline CanonicalResult canonicalize_unicyclic(const MixedGraph& g) {
  const auto s = structure(g);
  if (s.components.size() != 1 || s.corank != 1) throw InvalidArgument("canonicalize_unicyclic: not unicyclic");
  const auto cs = all_cycles(g);
  return detail::canonicalize_with_cycle(g, cs.front());
}

/// Signed graph switching-equivalent to g (every cycle of g must be real).
/// Spanning-forest edges become positive; chords of value -1 become negative.
inline SignedGraph to_signed(const MixedGraph& g) {
  const auto nf = forest_normal_form(GainGraph(g));
  if (!nf.normalized.is_real()) throw InvalidArgument("to_signed: graph has a non-real cycle");
  std::vector<Edge> negative;
  for (std::size_t k = 0; k < nf.forest.chords.size(); ++k)
    if (nf.chord_gains[k] == 2) negative.push_back(nf.forest.chords[k]);
  return SignedGraph(underlying_graph(g), negative);
}

/// The local rewrites on a degree-2 center v with neighbors u, w.
/// 1: (u,v),(v,w) -> (v,u),(w,v). 2: (u,v),(w,v) -> undirected. 3: (v,u),(v,w) -> undirected.
/// 4: arc (u,v) and edge vw -> edge uv and arc (v,w).
inline MixedGraph sw_move(const MixedGraph& g, int which, int v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("sw_move: center out of range");
  if (which < 1 || which > 4) throw InvalidArgument("sw_move: move must be 1..4");
  const auto nb = g.neighbors(v);
  if (nb.size() != 2) throw InvalidArgument("sw_move: center must have degree 2");
  static constexpr std::array<int, 5> theta_exp{0, 2, 1, 3, 1};
  for (int swap = 0; swap < 2; ++swap) {
    const int u = nb[swap];
    const int w = nb[1 - swap];
    bool match = false;
    switch (which) {
      case 1: match = g.is_arc(u, v) && g.is_arc(v, w); break;
      case 2: match = g.is_arc(u, v) && g.is_arc(w, v); break;
      case 3: match = g.is_arc(v, u) && g.is_arc(v, w); break;
      case 4: match = g.is_arc(u, v) && g.is_undirected(v, w); break;
    }
    if (!match) continue;
    SwitchingFunction t = SwitchingFunction::identity(g.order());
    t.theta[v] = GaussianUnit::from_exponent(theta_exp[which]);
    return apply_switching(g, t);
  }
  throw InvalidArgument("sw_move: pattern for move " + std::to_string(which) + " not present at vertex " + std::to_string(v));
}

namespace detail {

/// Backtracking over theta exponents in BFS order; edge constraint t_u + h_uv - t_v != 2.
template <class Choose>
std::optional<SwitchingFunction> search_admissible(const GainGraph& g, Choose&& order_for) {
  const auto f = spanning_forest(g);
  const int n = g.order();
  std::vector<int> t(static_cast<std::size_t>(n), -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == f.order.size()) return true;
    const int v = f.order[k];
    const std::vector<int> choices = order_for(v, f.parent[v] < 0);
    for (int e : choices) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        if (g.adjacent(u, v) && t[u] >= 0 && ((t[u] + g.exponent(u, v) - e) % 4 + 4) % 4 == 2) ok = false;
      if (!ok) continue;
      t[v] = e;
      if (rec(k + 1)) return true;
      t[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  SwitchingFunction s = SwitchingFunction::identity(n);
  for (int v = 0; v < n; ++v) s.theta[v] = GaussianUnit::from_exponent(t[v]);
  return s;
}

}  // namespace detail

/// Some theta making the gain graph a mixed graph (no -1 entries). Roots are fixed to 1.
inline std::optional<SwitchingFunction> find_admissible_switching(const GainGraph& g) {
  return detail::search_admissible(g, [](int, bool is_root) {
    return is_root ? std::vector<int>{0} : std::vector<int>{0, 1, 3, 2};
  });
}

/// Uniformly shuffled backtracking: a random admissible theta for a mixed graph.
template <class Rng>
SwitchingFunction random_admissible_switching(const MixedGraph& g, Rng& rng) {
  auto s = detail::search_admissible(GainGraph(g), [&](int, bool) {
    std::vector<int> c{0, 1, 2, 3};
    std::shuffle(c.begin(), c.end(), rng);
    return c;
  });
  if (!s) throw ConsistencyError("identity switching should always be admissible");
  return *s;
}

}  // namespace hermispec
