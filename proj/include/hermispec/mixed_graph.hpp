#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hermispec/error.hpp"
#include "hermispec/gaussian.hpp"
#include "hermispec/simple_graph.hpp"

namespace hermispec {

using Edge = std::pair<int, int>;

/// Hermitian adjacency matrix with entries in {0, 1, i, -i}.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Validates Hermitian symmetry, zero diagonal and off-diagonal entries in {0,1,i,-i}.
  HermitianMatrix(int n, std::vector<UnitEntry> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw InvalidArgument("HermitianMatrix: entry count does not match dimension");
    for (int r = 0; r < n; ++r) {
      if (at(r, r)) throw InvalidArgument("HermitianMatrix: nonzero diagonal");
      for (int c = r + 1; c < n; ++c) {
        const auto a = at(r, c);
        const auto b = at(c, r);
        if (a.has_value() != b.has_value() || (a && a->conj() != *b))
          throw InvalidArgument("HermitianMatrix: not Hermitian at (" + std::to_string(r) + "," + std::to_string(c) + ")");
        if (a && *a == GaussianUnit::minus_one())
          throw InvalidArgument("HermitianMatrix: entry -1 is not a mixed-graph entry");
      }
    }
  }

  int dim() const { return n_; }
  UnitEntry at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * n_ + c]; }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<UnitEntry> entries_;
};

/// Mixed graph on vertices 0..n-1: undirected edges plus arcs (tail, head).
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(int n) : n_(n), code_(static_cast<std::size_t>(n) * n, kNone) {
    if (n < 0) throw InvalidGraph("negative vertex count");
  }

  /// Validated construction. Rejects loops, out-of-range endpoints and any pair given twice.
  static MixedGraph build(int n, const std::vector<Edge>& undirected, const std::vector<Edge>& arcs) {
    MixedGraph g(n);
    auto check = [&](int u, int v) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidGraph("vertex out of range in pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
      if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
      if (g.adjacent(u, v))
        throw InvalidGraph("conflicting edge {" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + "}");
    };
    for (auto [u, v] : undirected) {
      check(u, v);
      g.set(u, v, 0);
    }
    for (auto [u, v] : arcs) {
      check(u, v);
      g.set(u, v, 1);
    }
    return g;
  }

  /// Graph whose Hermitian adjacency matrix is `h`.
  static MixedGraph from_hermitian(const HermitianMatrix& h) {
    MixedGraph g(h.dim());
    for (int u = 0; u < h.dim(); ++u)
      for (int v = u + 1; v < h.dim(); ++v)
        if (auto e = h.at(u, v)) g.set(u, v, e->exponent());
    return g;
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(undirected().size() + arcs().size()); }

  bool adjacent(int u, int v) const { return code(u, v) != kNone; }
  /// H(u,v) as a unit, or nothing when u and v are not adjacent.
  UnitEntry entry(int u, int v) const {
    const auto c = code(u, v);
    if (c == kNone) return std::nullopt;
    return GaussianUnit::from_exponent(c);
  }
  bool is_arc(int u, int v) const { return code(u, v) == 1; }
  bool is_undirected(int u, int v) const { return code(u, v) == 0; }

  /// Unordered edges {u,v}, u<v, lexicographic.
  std::vector<Edge> undirected() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (code(u, v) == 0) out.emplace_back(u, v);
    return out;
  }
  /// Arcs (tail, head) sorted lexicographically.
  std::vector<Edge> arcs() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (code(u, v) == 1) out.emplace_back(u, v);
    return out;
  }
  /// Every adjacent pair (u,v), u<v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (adjacent(u, v)) out.push_back(v);
    return out;
  }
  int degree(int u) const { return static_cast<int>(neighbors(u).size()); }
  int max_degree() const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
  }

  SimpleGraph simple() const {
    SimpleGraph s(n_);
    for (auto [u, v] : edges()) s.add_edge(u, v);
    return s;
  }

  /// Same graph with every arc reversed; its Hermitian matrix is the entrywise conjugate.
  MixedGraph converse() const {
    MixedGraph g(n_);
    for (auto [u, v] : edges()) g.set(u, v, entry(u, v)->conj().exponent());
    return g;
  }

  /// Vertex v renamed to perm[v].
  MixedGraph relabeled(const std::vector<int>& perm) const {
    MixedGraph g(n_);
    for (auto [u, v] : edges()) g.set(perm[u], perm[v], code(u, v));
    return g;
  }

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  static constexpr std::int8_t kNone = -1;

  std::int8_t code(int u, int v) const { return code_[static_cast<std::size_t>(u) * n_ + v]; }
  /// Sets H(u,v) = i^k and H(v,u) = conj. k = 2 is never stored.
  void set(int u, int v, int k) {
    if (k == 2) throw InvalidGraph("entry -1 is not representable in a mixed graph");
    code_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(k);
    code_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>((4 - k) % 4);
  }

  int n_ = 0;
  std::vector<std::int8_t> code_;

  friend class MixedGraphBuilder;
};

/// Incremental construction by Hermitian entries; used by switching and enumeration.
class MixedGraphBuilder {
 public:
  explicit MixedGraphBuilder(int n) : g_(n) {}
  /// H(u,v) = i^k. Throws for k = 2.
  MixedGraphBuilder& set(int u, int v, int k) {
    g_.set(u, v, ((k % 4) + 4) % 4);
    return *this;
  }
  MixedGraph build() && { return std::move(g_); }

 private:
  MixedGraph g_;
};

inline HermitianMatrix hermitian_matrix(const MixedGraph& g) {
  const int n = g.order();
  std::vector<UnitEntry> e(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) e[static_cast<std::size_t>(u) * n + v] = g.entry(u, v);
  return HermitianMatrix(n, std::move(e));
}

/// Undirected graph with a +1/-1 sign on every edge.
class SignedGraph {
 public:
  SignedGraph() = default;
  /// `negative` lists the edges carrying sign -1; every other edge of `underlying` is positive.
  SignedGraph(MixedGraph underlying, const std::vector<Edge>& negative) : g_(std::move(underlying)) {
    if (!g_.arcs().empty()) throw InvalidGraph("signed graph needs an undirected underlying graph");
    sign_.assign(static_cast<std::size_t>(g_.order()) * g_.order(), 0);
    for (auto [u, v] : g_.edges()) set_sign(u, v, 1);
    for (auto [u, v] : negative) {
      if (!g_.adjacent(u, v)) throw InvalidGraph("negative pair is not an edge");
      set_sign(u, v, -1);
    }
  }

  int order() const { return g_.order(); }
  int size() const { return g_.size(); }
  const MixedGraph& underlying() const { return g_; }
  /// +1, -1, or 0 for non-adjacent pairs.
  int sign(int u, int v) const { return sign_[static_cast<std::size_t>(u) * g_.order() + v]; }
  std::vector<Edge> negative_edges() const {
    std::vector<Edge> out;
    for (auto [u, v] : g_.edges())
      if (sign(u, v) < 0) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  void set_sign(int u, int v, int s) {
    sign_[static_cast<std::size_t>(u) * g_.order() + v] = static_cast<std::int8_t>(s);
    sign_[static_cast<std::size_t>(v) * g_.order() + u] = static_cast<std::int8_t>(s);
  }

  MixedGraph g_;
  std::vector<std::int8_t> sign_;
};

struct WalkSpec {
  std::vector<int> vertices;
};

struct Structure {
  int order = 0;
  int size = 0;
  int max_degree = 0;
  std::vector<std::vector<int>> components;
  int rank = 0;
  int corank = 0;
};

inline Structure structure(const MixedGraph& g) {
  Structure s;
  s.order = g.order();
  s.size = g.size();
  s.max_degree = g.max_degree();
  s.components = g.simple().components();
  const int c = static_cast<int>(s.components.size());
  s.rank = s.order - c;
  s.corank = s.size - s.order + c;
  return s;
}

/// Every arc replaced by an undirected edge.
inline MixedGraph underlying_graph(const MixedGraph& g) { return MixedGraph::build(g.order(), g.edges(), {}); }

/// Subgraph induced on `keep`, renumbered in increasing vertex order.
inline MixedGraph induced_subgraph(const MixedGraph& g, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= g.order()) throw InvalidArgument("induced_subgraph: vertex out of range");
  MixedGraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t c = a + 1; c < keep.size(); ++c)
      if (auto e = g.entry(keep[a], keep[c])) b.set(static_cast<int>(a), static_cast<int>(c), e->exponent());
  return std::move(b).build();
}

/// g minus the listed vertices.
inline MixedGraph delete_vertices(const MixedGraph& g, const std::vector<int>& removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.order()), false);
  for (int v : removed) gone.at(static_cast<std::size_t>(v)) = true;
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

/// g with the edge {u,v} removed (vertices kept).
inline MixedGraph delete_edge(const MixedGraph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw InvalidArgument("delete_edge: not an edge");
  MixedGraphBuilder b(g.order());
  for (auto [a, c] : g.edges())
    if (!((a == u && c == v) || (a == v && c == u))) b.set(a, c, g.entry(a, c)->exponent());
  return std::move(b).build();
}

/// g2's vertices are shifted by g1.order().
inline MixedGraph disjoint_union(const MixedGraph& g1, const MixedGraph& g2) {
  const int off = g1.order();
  MixedGraphBuilder b(g1.order() + g2.order());
  for (auto [u, v] : g1.edges()) b.set(u, v, g1.entry(u, v)->exponent());
  for (auto [u, v] : g2.edges()) b.set(u + off, v + off, g2.entry(u, v)->exponent());
  return std::move(b).build();
}

inline MixedGraph disjoint_union(const std::vector<MixedGraph>& parts) {
  MixedGraph acc(0);
  for (const auto& p : parts) acc = disjoint_union(acc, p);
  return acc;
}

/// Product of Hermitian entries along consecutive vertices of the walk.
inline GaussianUnit walk_value(const MixedGraph& g, const WalkSpec& w) {
  GaussianUnit value = GaussianUnit::one();
  for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k) {
    const int a = w.vertices[k];
    const int b = w.vertices[k + 1];
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order()) throw InvalidArgument("walk vertex out of range");
    const auto e = g.entry(a, b);
    if (!e) throw InvalidArgument("walk steps between non-adjacent vertices " + std::to_string(a) + " and " + std::to_string(b));
    value *= *e;
  }
  return value;
}

/// Value of the closed walk v0 v1 ... v_{l-1} v0.
inline GaussianUnit cycle_value(const MixedGraph& g, const std::vector<int>& cycle) {
  WalkSpec w{cycle};
  if (!cycle.empty()) w.vertices.push_back(cycle.front());
  return walk_value(g, w);
}

}  // namespace hermispec
