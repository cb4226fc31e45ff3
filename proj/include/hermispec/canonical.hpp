#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "hermispec/error.hpp"
#include "hermispec/simple_graph.hpp"

namespace hermispec {

/// labeling[v] is the canonical label of v. Two graphs are isomorphic (color-preserving)
/// iff their certificates are equal. `generators` generate the automorphism group.
struct CanonicalLabeling {
  std::vector<int> labeling;
  std::vector<std::uint64_t> certificate;
  std::vector<std::vector<int>> generators;

  friend bool operator==(const CanonicalLabeling& a, const CanonicalLabeling& b) { return a.certificate == b.certificate; }
};

namespace detail {

/// Rows of g relabeled by `lab`, prefixed by the color of each label position and the order.
inline std::vector<std::uint64_t> relabeled_certificate(const SimpleGraph& g, const std::vector<int>& lab,
                                                        const std::vector<int>& color) {
  const int n = g.order();
  std::vector<std::uint64_t> cert(static_cast<std::size_t>(2 * n) + 1, 0);
  cert[0] = static_cast<std::uint64_t>(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t row = 0;
    for (auto r = g.row(v); r != 0; r &= r - 1) row |= std::uint64_t{1} << lab[std::countr_zero(r)];
    cert[1 + lab[v]] = row;
    cert[1 + n + lab[v]] = static_cast<std::uint64_t>(color[v]);
  }
  return cert;
}

class IndividualizationRefinement {
 public:
  IndividualizationRefinement(const SimpleGraph& g, const std::vector<int>& colors) : g_(g), n_(g.order()) {
    color_ = colors.empty() ? std::vector<int>(static_cast<std::size_t>(n_), 0) : colors;
    if (static_cast<int>(color_.size()) != n_) throw InvalidArgument("canonical_labeling: color vector size mismatch");
  }

  CanonicalLabeling run() {
    // Initial cells ordered by color value.
    std::vector<int> distinct = color_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> part(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      part[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), color_[v]) - distinct.begin());
    search(part, 0);
    CanonicalLabeling out;
    out.labeling = best_lab_;
    out.certificate = best_cert_;
    out.generators = gens_;
    return out;
  }

 private:
  static constexpr int kContinue = 1 << 30;

  /// Splits cells by (cell, neighbor counts per cell) until stable. Cell ids stay contiguous.
  void refine(std::vector<int>& part) const {
    for (;;) {
      const int k = 1 + *std::max_element(part.begin(), part.end());
      if (k == n_) return;
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(static_cast<std::size_t>(k) + 1, 0);
        s[0] = part[v];
        for (auto r = g_.row(v); r != 0; r &= r - 1) ++s[1 + part[std::countr_zero(r)]];
      }
      std::vector<int> idx(static_cast<std::size_t>(n_));
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int id = 0;
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (int t = 0; t < n_; ++t) {
        if (t > 0 && sig[idx[t]] != sig[idx[t - 1]]) ++id;
        next[idx[t]] = id;
      }
      if (id + 1 == k) return;
      part = std::move(next);
    }
  }

  static std::vector<int> individualize(const std::vector<int>& part, int v) {
    std::vector<int> p = part;
    for (std::size_t u = 0; u < p.size(); ++u)
      if (part[u] > part[v] || (part[u] == part[v] && static_cast<int>(u) != v)) ++p[u];
    return p;
  }

  bool fixes_path(const std::vector<int>& gamma) const {
    return std::all_of(path_.begin(), path_.end(), [&](int v) { return gamma[v] == v; });
  }

  /// Union-find of orbits of the subgroup generated by generators fixing the current path.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> uf(static_cast<std::size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (const auto& gamma : gens_) {
      if (!fixes_path(gamma)) continue;
      for (int v = 0; v < n_; ++v) uf[find(v)] = find(gamma[v]);
    }
    for (int v = 0; v < n_; ++v) uf[v] = find(v);
    return uf;
  }

  /// Returns kContinue, or the level to resume at after an automorphism jump.
  int search(std::vector<int> part, int level) {
    refine(part);
    const int cells = 1 + *std::max_element(part.begin(), part.end());
    if (n_ == 0 || cells == n_) return leaf(part);
    int target = -1;
    {
      std::vector<int> size(static_cast<std::size_t>(cells), 0);
      for (int v = 0; v < n_; ++v) ++size[part[v]];
      for (int c = 0; c < cells && target < 0; ++c)
        if (size[c] > 1) target = c;
    }
    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (part[v] != target) continue;
      if (!explored.empty()) {
        const auto orb = stabilizer_orbits();
        if (std::any_of(explored.begin(), explored.end(), [&](int w) { return orb[w] == orb[v]; })) continue;
      }
      path_.push_back(v);
      const int r = search(individualize(part, v), level + 1);
      path_.pop_back();
      explored.push_back(v);
      if (r < level) return r;
    }
    return kContinue;
  }

  int leaf(const std::vector<int>& lab) {
    auto cert = relabeled_certificate(g_, lab, color_);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_path_ = path_;
      first_cert_ = cert;
      best_lab_ = lab;
      best_cert_ = std::move(cert);
      return kContinue;
    }
    if (cert == first_cert_) {
      // gamma = first^-1 o current maps this leaf onto the first one.
      std::vector<int> inv_first(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) inv_first[first_lab_[v]] = v;
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) gamma[v] = inv_first[lab[v]];
      gens_.push_back(std::move(gamma));
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
    return kContinue;
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> path_;
  std::vector<int> first_lab_, first_path_, best_lab_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace detail

/// Canonical labeling by individualization-refinement with automorphism pruning.
/// `colors` (optional) are preserved: isomorphisms must map colors to equal colors.
inline CanonicalLabeling canonical_labeling(const SimpleGraph& g, const std::vector<int>& colors = {}) {
  return detail::IndividualizationRefinement(g, colors).run();
}

inline SimpleGraph canonical_form(const SimpleGraph& g) { return g.relabeled(canonical_labeling(g).labeling); }

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_labeling(a).certificate == canonical_labeling(b).certificate;
}

/// Size of the group generated by permutations on n points; BFS closure, for small groups only.
inline std::size_t group_order(int n, const std::vector<std::vector<int>>& gens, std::size_t limit = 1'000'000) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  auto contains = [&](const std::vector<int>& p) { return std::binary_search(seen.begin(), seen.end(), p); };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> q(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) q[v] = g[p[v]];
        if (contains(q) || std::find(next.begin(), next.end(), q) != next.end()) continue;
        next.push_back(std::move(q));
      }
    for (auto& q : next) seen.push_back(q);
    std::sort(seen.begin(), seen.end());
    if (seen.size() > limit) throw GuardExceeded("group_order: group too large");
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace hermispec
