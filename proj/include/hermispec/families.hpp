#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermispec/charpoly.hpp"
#include "hermispec/error.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/spectra.hpp"
#include "hermispec/switching.hpp"

namespace hermispec::families {

/// P_n: 0 - 1 - ... - n-1.
inline MixedGraph path(int n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return MixedGraph::build(n, e, {});
}

/// Cycle 0 - 1 - ... - n-1 - 0. Type 1 turns {0,1} into the arc (0,1);
/// type 2 turns {0,1},{1,2} into the arcs (0,1),(1,2).
inline MixedGraph cycle(int n, int type = 0) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  if (type < 0 || type > 2) throw InvalidArgument("cycle type must be 0, 1 or 2");
  std::vector<Edge> e;
  std::vector<Edge> a;
  for (int v = 0; v < n; ++v) {
    const int w = (v + 1) % n;
    (v < type ? a : e).emplace_back(v, w);
  }
  return MixedGraph::build(n, e, a);
}

/// Three internally disjoint paths with p, q, r vertices between 0 and 1.
/// Internal vertices are numbered 2, 3, ... path after path, each path walked from 0 to 1.
/// P_2 is the edge {0,1}. Pairs listed in `arcs` become arcs in the given direction.
inline MixedGraph theta(int p, int q, int r, const std::vector<Edge>& arcs = {}) {
  if (p < 2 || q < 2 || r < 2) throw InvalidArgument("theta needs p, q, r >= 2");
  if ((p == 2) + (q == 2) + (r == 2) > 1) throw InvalidArgument("theta: at most one of p, q, r can be 2");
  std::vector<Edge> e;
  int next = 2;
  for (int len : {p, q, r}) {
    int prev = 0;
    for (int k = 0; k < len - 2; ++k) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  for (auto [u, v] : arcs) {
    bool found = false;
    for (auto it = e.begin(); it != e.end(); ++it)
      if ((it->first == u && it->second == v) || (it->first == v && it->second == u)) {
        e.erase(it);
        found = true;
        break;
      }
    if (!found) throw InvalidArgument("theta: arc (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  return MixedGraph::build(next, e, arcs);
}

/// G_t: C2_4 on 0..3 (arcs (0,1),(1,2)) with P_t = 4 - 5 - ... - t+3 joined to 0 at vertex 4.
inline MixedGraph g_t(int t) {
  if (t < 0) throw InvalidArgument("G_t needs t >= 0");
  MixedGraphBuilder b(4 + t);
  b.set(0, 1, 1).set(1, 2, 1).set(2, 3, 0).set(3, 0, 0);
  for (int k = 0; k < t; ++k) b.set(k == 0 ? 0 : 3 + k, 4 + k, 0);
  return std::move(b).build();
}

/// G_t^{t+m}: C2_4 on 0..3, P_t joined to 0 (vertices 4..t+3), P_{t+m} joined to 2 (the rest).
inline MixedGraph g_t_tm(int t, int tm) {
  if (t < 0 || tm < t) throw InvalidArgument("G_t^{t+m} needs 0 <= t <= t+m");
  MixedGraphBuilder b(4 + t + tm);
  b.set(0, 1, 1).set(1, 2, 1).set(2, 3, 0).set(3, 0, 0);
  for (int k = 0; k < t; ++k) b.set(k == 0 ? 0 : 3 + k, 4 + k, 0);
  const int base = 4 + t;
  for (int k = 0; k < tm; ++k) b.set(k == 0 ? 2 : base + k - 1, base + k, 0);
  return std::move(b).build();
}

/// D_n: path 0 - 1 - ... - n-2 with leaf n-1 joined to 1. D_3 is P_3.
inline MixedGraph d_n(int n) {
  if (n < 3) throw InvalidArgument("D_n needs n >= 3");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n - 1; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(1, n - 1);
  return MixedGraph::build(n, e, {});
}

inline MixedGraph complete(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return MixedGraph::build(n, e, {});
}

/// (C_n, -): negative edge {n-1, 0}.
inline SignedGraph signed_cycle_minus(int n) {
  return SignedGraph(cycle(n, 0), {{0, n - 1}});
}

/// On theta(3,3,r): a = 0, b = 1, x = 2, y = 3, long path 0 - 4 - ... - r+1 - 1.
/// Y1 has arcs (a,x) and (b, r+1).
inline MixedGraph y1(int r) {
  if (r < 3) throw InvalidArgument("Y1 needs r >= 3");
  return theta(3, 3, r, {{0, 2}, {1, r + 1}});
}

/// Y2 has arcs (a,x), (x,b) and (b, r+1).
inline MixedGraph y2(int r) {
  if (r < 3) throw InvalidArgument("Y2 needs r >= 3");
  return theta(3, 3, r, {{0, 2}, {2, 1}, {1, r + 1}});
}

/// Every switching class on `underlying` realizable as a mixed graph, one representative each,
/// in increasing order of the chord-gain vector of the spanning-forest normal form.
inline std::vector<MixedGraph> realizable_classes(const MixedGraph& underlying) {
  const GainGraph base(underlying_graph(underlying));
  const auto f = spanning_forest(base);
  const std::size_t c = f.chords.size();
  if (c > 12) throw GuardExceeded("too many chords to enumerate gain classes");
  std::vector<MixedGraph> out;
  std::vector<int> gains(c, 0);
  for (std::size_t code = 0; code < (std::size_t{1} << (2 * c)); ++code) {
    GainGraph g = base;
    for (std::size_t k = 0; k < c; ++k) g.set(f.chords[k].first, f.chords[k].second, static_cast<int>((code >> (2 * k)) & 3U));
    if (auto t = find_admissible_switching(g)) out.push_back(g.switched(*t).to_mixed());
  }
  return out;
}

/// E_s on theta(3,3,s): the orientation class with Spec(P_s u E_s) = Spec(C_{2s+2}).
inline MixedGraph e_r(int s) {
  if (s < 2) throw InvalidArgument("E_r needs r >= 2");
  const auto target = char_poly_exact(cycle(2 * s + 2, 0));
  const auto ps = char_poly_exact(path(s));
  for (const auto& g : realizable_classes(theta(3, 3, s)))
    if (ps * char_poly_exact(g) == target) return g;
  throw ConsistencyError("no orientation of theta(3,3," + std::to_string(s) + ") completes P_s to C_2(s+1)");
}

}  // namespace hermispec::families
