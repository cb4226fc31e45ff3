#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hermispec/error.hpp"
#include "hermispec/mixed_graph.hpp"

namespace hermispec {

/// A simple cycle listed as v0 v1 ... v_{l-1}; `value` is h(v0 -> v1 -> ... -> v0).
struct Cycle {
  std::vector<int> vertices;
  GaussianUnit value;
  std::uint64_t mask = 0;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Visits every simple cycle of g exactly once (fixed start at its smallest vertex,
/// direction with vertices[1] < vertices.back()). Throws GuardExceeded past `limit` cycles.
inline std::vector<Cycle> all_cycles(const MixedGraph& g, std::size_t limit = 2'000'000) {
  if (g.order() > 64) throw GuardExceeded("cycle enumeration is limited to 64 vertices");
  std::vector<Cycle> out;
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<int> path;
  std::uint64_t on_path = 0;
  std::function<void(int, int, GaussianUnit)> dfs = [&](int s, int v, GaussianUnit value) {
    for (int w : adj[v]) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        out.push_back({path, value * *g.entry(v, s), on_path});
        if (out.size() > limit) throw GuardExceeded("too many cycles to enumerate");
      }
      if (w <= s || ((on_path >> w) & 1U)) continue;
      path.push_back(w);
      on_path |= std::uint64_t{1} << w;
      dfs(s, w, value * *g.entry(v, w));
      on_path &= ~(std::uint64_t{1} << w);
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path = std::uint64_t{1} << s;
    dfs(s, s, GaussianUnit::one());
  }
  return out;
}

/// Cycles through vertex u, each once.
inline std::vector<Cycle> cycles_through(const MixedGraph& g, int u) {
  std::vector<Cycle> out;
  for (auto& c : all_cycles(g))
    if ((c.mask >> u) & 1U) out.push_back(std::move(c));
  return out;
}

/// Cycles containing the edge {u,v}, each once.
inline std::vector<Cycle> cycles_containing(const MixedGraph& g, int u, int v) {
  std::vector<Cycle> out;
  for (auto& c : all_cycles(g)) {
    const int l = c.length();
    for (int k = 0; k < l; ++k) {
      const int a = c.vertices[k];
      const int b = c.vertices[(k + 1) % l];
      if ((a == u && b == v) || (a == v && b == u)) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

/// A cycle is induced when its vertex set spans no chord.
inline bool is_induced(const MixedGraph& g, const Cycle& c) {
  int edges = 0;
  for (std::size_t a = 0; a < c.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < c.vertices.size(); ++b)
      if (g.adjacent(c.vertices[a], c.vertices[b])) ++edges;
  return edges == c.length();
}

}  // namespace hermispec
