#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "hermispec/cycles.hpp"
#include "hermispec/error.hpp"
#include "hermispec/gaussian.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/polynomial.hpp"

namespace hermispec {

/// Limits for the exponential routes (elementary subgraphs, cycle sums).
struct EnumerationGuard {
  int max_order = 20;
  int max_corank = 4;

  static EnumerationGuard unlimited() { return {64, 64}; }

  void check(const MixedGraph& g, const char* what) const {
    const auto s = structure(g);
    if (s.order > max_order || s.corank > max_corank)
      throw GuardExceeded(std::string(what) + ": order " + std::to_string(s.order) + ", corank " +
                          std::to_string(s.corank) + " exceeds guard (" + std::to_string(max_order) + ", " +
                          std::to_string(max_corank) + ")");
  }
};

namespace detail {

using SmallGaussian = Gaussian<int>;

template <class Int>
Gaussian<Int> widen(const SmallGaussian& a) {
  return {Int(a.re), Int(a.im)};
}

/// det(xI - A) by fraction-free elimination. Every intermediate is a minor of xI - A.
template <class Int>
Gaussian<Int> bareiss_char_det(int n, const std::vector<SmallGaussian>& a, long x) {
  using G = Gaussian<Int>;
  if (n == 0) return G(Int(1));
  std::vector<G> m(static_cast<std::size_t>(n) * n);
  auto at = [&](int r, int c) -> G& { return m[static_cast<std::size_t>(r) * n + c]; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) at(r, c) = -widen<Int>(a[static_cast<std::size_t>(r) * n + c]);
  for (int r = 0; r < n; ++r) at(r, r) = at(r, r) + G(Int(x));
  G prev(Int(1));
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      int p = k + 1;
      while (p < n && at(p, k).is_zero()) ++p;
      if (p == n) return G(Int(0));
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)).exact_div(prev);
      at(i, k) = G(Int(0));
    }
    prev = at(k, k);
  }
  G d = at(n - 1, n - 1);
  return negate ? -d : d;
}

/// log2 of a Hadamard bound on every minor of xI - A.
inline double hadamard_log2(int n, const std::vector<SmallGaussian>& a, long x) {
  double bits = 0;
  for (int r = 0; r < n; ++r) {
    double s = static_cast<double>(x) * static_cast<double>(x);
    for (int c = 0; c < n; ++c) s += static_cast<double>(a[static_cast<std::size_t>(r) * n + c].norm());
    if (s > 1) bits += 0.5 * std::log2(s);
  }
  return bits;
}

/// __int128 has no BigInt constructor.
inline BigInt to_big(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt b = static_cast<std::uint64_t>(u >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-b) : b;
}

template <class Int>
IntPolynomial newton_interpolate(long x0, const std::vector<Int>& y) {
  const int n = static_cast<int>(y.size()) - 1;
  std::vector<Int> d = y;
  std::vector<Int> a;  // a_k = Delta^k y_0 / k!
  Int fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      fact *= k;
      for (int j = 0; j + k <= n; ++j) d[j] = d[j + 1] - d[j];
    }
    if (d[0] % fact != 0) throw ConsistencyError("interpolation is not exact over the integers");
    a.push_back(d[0] / fact);
  }
  // Horner in the Newton basis: p = a0 + (x-x0)(a1 + (x-x0-1)(a2 + ...)).
  std::vector<Int> acc{a[static_cast<std::size_t>(n)]};
  for (int k = n - 1; k >= 0; --k) {
    const Int shift = Int(x0 + k);
    std::vector<Int> next(acc.size() + 1, Int(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= shift * acc[j];
    }
    next[0] += a[static_cast<std::size_t>(k)];
    acc = std::move(next);
  }
  std::vector<BigInt> c;
  c.reserve(acc.size());
  for (const auto& v : acc) {
    if constexpr (std::is_same_v<Int, BigInt>)
      c.push_back(v);
    else
      c.push_back(to_big(v));
  }
  return IntPolynomial(std::move(c));
}

/// Exact det(xI - A) for a Hermitian Gaussian-integer matrix with small entries.
inline IntPolynomial char_poly_gaussian(int n, const std::vector<SmallGaussian>& a) {
  const long x0 = -static_cast<long>(n / 2);
  double worst = 0;
  for (int j = 0; j <= n; ++j) worst = std::max(worst, hadamard_log2(n, a, x0 + j));
  // Bareiss forms (minor * minor) * conj(minor) before dividing.
  const bool narrow = 3 * worst + 4 < 125;
  if (narrow) {
    std::vector<__int128> y;
    __int128 ymax = 0;
    for (int j = 0; j <= n; ++j) {
      const auto d = bareiss_char_det<__int128>(n, a, x0 + j);
      if (d.im != 0) throw ConsistencyError("characteristic determinant has a nonzero imaginary part");
      y.push_back(d.re);
      ymax = std::max(ymax, d.re < 0 ? -d.re : d.re);
    }
    if (n <= 14 && ymax < (static_cast<__int128>(1) << 45)) return newton_interpolate<__int128>(x0, y);
    std::vector<BigInt> yb;
    for (auto v : y) yb.push_back(to_big(v));
    return newton_interpolate<BigInt>(x0, yb);
  }
  std::vector<BigInt> y;
  for (int j = 0; j <= n; ++j) {
    const auto d = bareiss_char_det<BigInt>(n, a, x0 + j);
    if (d.im != 0) throw ConsistencyError("characteristic determinant has a nonzero imaginary part");
    y.push_back(d.re);
  }
  return newton_interpolate<BigInt>(x0, y);
}

}  // namespace detail

/// det(xI - H) with exact integer coefficients.
inline IntPolynomial char_poly_exact(const HermitianMatrix& h) {
  const int n = h.dim();
  std::vector<detail::SmallGaussian> a(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (auto e = h.at(r, c)) a[static_cast<std::size_t>(r) * n + c] = detail::SmallGaussian(*e);
  auto p = detail::char_poly_gaussian(n, a);
  if (p.degree() != n || !p.is_monic()) throw ConsistencyError("characteristic polynomial is not monic of degree n");
  return p;
}

inline IntPolynomial char_poly_exact(const MixedGraph& g) { return char_poly_exact(hermitian_matrix(g)); }

/// Characteristic polynomial of the signed adjacency matrix.
inline IntPolynomial char_poly_exact(const SignedGraph& s) {
  const int n = s.order();
  std::vector<detail::SmallGaussian> a(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r) * n + c] = detail::SmallGaussian(s.sign(r, c));
  return detail::char_poly_gaussian(n, a);
}

namespace detail {

struct WeightedCycle {
  std::uint64_t mask;
  int length;
  int sign;  // +1 or -1
};

/// Calls visit(k, components, cycles, negative_cycles) for every elementary subgraph.
inline void for_each_elementary(const MixedGraph& g, const std::vector<WeightedCycle>& cycles,
                                const std::function<void(int, int, int, int)>& visit) {
  const int n = g.order();
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n), 0);  // neighbors w > v
  for (auto [u, v] : g.edges()) up[u] |= std::uint64_t{1} << v;
  std::vector<std::vector<const WeightedCycle*>> by_min(static_cast<std::size_t>(n));
  for (const auto& c : cycles) by_min[std::countr_zero(c.mask)].push_back(&c);

  std::function<void(int, std::uint64_t, int, int, int, int)> rec = [&](int v, std::uint64_t used, int k, int comps,
                                                                       int cyc, int neg) {
    while (v < n && ((used >> v) & 1U)) ++v;
    if (v == n) {
      visit(k, comps, cyc, neg);
      return;
    }
    rec(v + 1, used, k, comps, cyc, neg);
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (auto r = up[v] & ~used; r != 0; r &= r - 1) {
      const int w = std::countr_zero(r);
      rec(v + 1, used | bit | (std::uint64_t{1} << w), k + 2, comps + 1, cyc, neg);
    }
    for (const auto* c : by_min[v])
      if ((c->mask & used) == 0) rec(v + 1, used | c->mask, k + c->length, comps + 1, cyc + 1, neg + (c->sign < 0));
  };
  rec(0, 0, 0, 0, 0, 0);
}

inline IntPolynomial assemble(int n, const std::vector<__int128>& a) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = to_big(a[static_cast<std::size_t>(k)]);
  return IntPolynomial(std::move(c));
}

}  // namespace detail

/// Sum over real elementary subgraphs H: (-1)^k c_k = sum (-1)^(r(H)+l(H)) 2^s(H).
inline IntPolynomial char_poly_elementary(const MixedGraph& g, const EnumerationGuard& guard = {}) {
  guard.check(g, "char_poly_elementary");
  std::vector<detail::WeightedCycle> real;
  for (const auto& c : all_cycles(g))
    if (c.value.is_real()) real.push_back({c.mask, c.length(), c.value.real()});
  const int n = g.order();
  std::vector<__int128> a(static_cast<std::size_t>(n) + 1, 0);  // a[k] = c_k
  detail::for_each_elementary(g, real, [&](int k, int comps, int cyc, int neg) {
    const int r = k - comps;
    __int128 term = static_cast<__int128>(1) << cyc;
    if ((r + neg) % 2 != 0) term = -term;
    a[static_cast<std::size_t>(k)] += (k % 2 == 0) ? term : -term;
  });
  return detail::assemble(n, a);
}

/// a_k = sum over elementary U on k vertices of (-1)^|U| 2^t(U) sigma(U),
/// where sigma(U) multiplies the signs of the cycle components.
inline IntPolynomial char_poly_signed(const SignedGraph& s, const EnumerationGuard& guard = {}) {
  const MixedGraph& g = s.underlying();
  guard.check(g, "char_poly_signed");
  std::vector<detail::WeightedCycle> cyc;
  for (const auto& c : all_cycles(g)) {
    int sign = 1;
    for (int k = 0; k < c.length(); ++k) sign *= s.sign(c.vertices[k], c.vertices[(k + 1) % c.length()]);
    cyc.push_back({c.mask, c.length(), sign});
  }
  const int n = g.order();
  std::vector<__int128> a(static_cast<std::size_t>(n) + 1, 0);
  detail::for_each_elementary(g, cyc, [&](int k, int comps, int t, int neg) {
    __int128 term = static_cast<__int128>(1) << t;
    if ((comps + neg) % 2 != 0) term = -term;
    a[static_cast<std::size_t>(k)] += term;
  });
  return detail::assemble(n, a);
}

/// phi(X) = x phi(X-u) - sum_{v~u} phi(X-u-v) - 2 sum_{real Z through u} h(Z) phi(X - V(Z)).
inline IntPolynomial schwenk_vertex(const MixedGraph& g, int u, const EnumerationGuard& guard = {}) {
  if (u < 0 || u >= g.order()) throw InvalidArgument("schwenk_vertex: vertex out of range");
  guard.check(g, "schwenk_vertex");
  IntPolynomial p = IntPolynomial::x() * char_poly_exact(delete_vertices(g, {u}));
  for (int v : g.neighbors(u)) p = p - char_poly_exact(delete_vertices(g, {u, v}));
  for (const auto& z : cycles_through(g, u)) {
    if (!z.value.is_real()) continue;
    p = p - IntPolynomial::constant(BigInt(2 * z.value.real())) * char_poly_exact(delete_vertices(g, z.vertices));
  }
  return p;
}

/// phi(X) = phi(X-e) - phi(X-u-v) - 2 sum_{real Z containing e} h(Z) phi(X - V(Z)).
inline IntPolynomial schwenk_edge(const MixedGraph& g, int u, int v, const EnumerationGuard& guard = {}) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw InvalidArgument("schwenk_edge: not an edge");
  guard.check(g, "schwenk_edge");
  IntPolynomial p = char_poly_exact(delete_edge(g, u, v)) - char_poly_exact(delete_vertices(g, {u, v}));
  for (const auto& z : cycles_containing(g, u, v)) {
    if (!z.value.is_real()) continue;
    p = p - IntPolynomial::constant(BigInt(2 * z.value.real())) * char_poly_exact(delete_vertices(g, z.vertices));
  }
  return p;
}

/// Number of k-element matchings of the underlying graph.
inline BigInt count_k_matchings(const MixedGraph& g, int k) {
  if (k < 0) throw InvalidArgument("count_k_matchings: negative k");
  const SimpleGraph s = g.simple();
  std::function<BigInt(std::uint64_t, int)> rec = [&](std::uint64_t avail, int need) -> BigInt {
    if (need == 0) return 1;
    if (std::popcount(avail) < 2 * need) return 0;
    const int v = std::countr_zero(avail);
    const std::uint64_t rest = avail & ~(std::uint64_t{1} << v);
    BigInt total = rec(rest, need);
    for (auto r = s.row(v) & rest; r != 0; r &= r - 1) total += rec(rest & ~(std::uint64_t{1} << std::countr_zero(r)), need - 1);
    return total;
  };
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
  return rec(all, k);
}

}  // namespace hermispec
