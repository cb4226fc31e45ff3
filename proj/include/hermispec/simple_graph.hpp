#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "hermispec/error.hpp"

namespace hermispec {

/// Undirected simple graph on at most 64 vertices, stored as adjacency bit rows.
class SimpleGraph {
 public:
  static constexpr int kMaxOrder = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n) : rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxOrder) throw InvalidArgument("SimpleGraph supports at most 64 vertices");
  }

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
  }

  void add_edge(int u, int v) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(int u) const { return rows_[u]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  int degree(int u) const { return std::popcount(rows_[u]); }

  int max_degree() const {
    int d = 0;
    for (int u = 0; u < order(); ++u) d = std::max(d, degree(u));
    return d;
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for (auto r = rows_[u]; r != 0; r &= r - 1) out.push_back(std::countr_zero(r));
    return out;
  }

  /// Edges (u,v) with u<v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (auto r = rows_[u] >> (u + 1); r != 0; r &= r - 1) out.emplace_back(u, u + 1 + std::countr_zero(r));
    return out;
  }

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < order(); ++s) {
      if ((seen >> s) & 1U) continue;
      std::uint64_t comp = std::uint64_t{1} << s;
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (auto f = frontier; f != 0; f &= f - 1) next |= rows_[std::countr_zero(f)];
        frontier = next & ~comp;
        comp |= next;
      }
      seen |= comp;
      std::vector<int> c;
      for (auto b = comp; b != 0; b &= b - 1) c.push_back(std::countr_zero(b));
      comps.push_back(std::move(c));
    }
    return comps;
  }

  bool is_connected() const { return order() <= 1 || components().size() == 1; }

  /// Graph with vertex v renamed to perm[v].
  SimpleGraph relabeled(const std::vector<int>& perm) const {
    SimpleGraph g(order());
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

}  // namespace hermispec
