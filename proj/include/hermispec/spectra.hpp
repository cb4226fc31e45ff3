#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermispec/charpoly.hpp"
#include "hermispec/cycles.hpp"
#include "hermispec/error.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/polynomial.hpp"

namespace hermispec {

/// 2cos(p pi / q), kept reduced to 0 <= p <= q.
struct CosTerm {
  int p = 0;
  int q = 1;

  static CosTerm make(long p, long q) {
    if (q <= 0) throw InvalidArgument("CosTerm needs q > 0");
    p %= 2 * q;
    if (p < 0) p += 2 * q;
    if (p > q) p = 2 * q - p;
    return {static_cast<int>(p), static_cast<int>(q)};
  }
  double value() const { return 2.0 * std::cos(std::numbers::pi * p / q); }
  /// Same angle in lowest terms.
  CosTerm reduced() const {
    const int g = std::gcd(p, q);
    return {p / g, q / g};
  }
  friend bool operator==(const CosTerm&, const CosTerm&) = default;
  friend auto operator<=>(const CosTerm&, const CosTerm&) = default;
};

/// Real spectrum sorted descending, optionally with its exact 2cos form.
struct Spectrum {
  std::vector<double> values;
  std::optional<std::vector<CosTerm>> exact;

  int size() const { return static_cast<int>(values.size()); }
  double lambda1() const { return values.empty() ? 0.0 : values.front(); }
  double lambda_min() const { return values.empty() ? 0.0 : values.back(); }
};

inline Spectrum spectrum_from_terms(std::vector<CosTerm> terms) {
  Spectrum s;
  for (auto& t : terms) t = CosTerm::make(t.p, t.q);
  std::sort(terms.begin(), terms.end(), [](const CosTerm& a, const CosTerm& b) { return a.value() > b.value(); });
  for (const auto& t : terms) s.values.push_back(t.value());
  s.exact = std::move(terms);
  return s;
}

/// Eigenvalues of a real symmetric matrix (row-major, dimension d) by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int d, double tol = 1e-12, int max_sweeps = 100) {
  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * d + c]; };
  double scale = 0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0) scale = 1;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int r = 0; r < d; ++r)
      for (int c = r + 1; c < d; ++c) off += at(r, c) * at(r, c);
    if (std::sqrt(off) <= tol * scale) {
      std::vector<double> ev(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) ev[k] = at(k, k);
      std::sort(ev.begin(), ev.end(), std::greater<>());
      return ev;
    }
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < d; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  throw ConvergenceError("Jacobi eigenvalue iteration did not converge");
}

/// H = A + iB through the real embedding [[A, -B], [B, A]]; each eigenvalue appears twice there.
inline Spectrum eigenvalues(const HermitianMatrix& h, double tol = 1e-11) {
  const int n = h.dim();
  const int d = 2 * n;
  std::vector<double> m(static_cast<std::size_t>(d) * d, 0.0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const auto e = h.at(r, c);
      if (!e) continue;
      const double re = e->real();
      const double im = e->imag();
      m[static_cast<std::size_t>(r) * d + c] = re;
      m[static_cast<std::size_t>(r + n) * d + c + n] = re;
      m[static_cast<std::size_t>(r) * d + c + n] = -im;
      m[static_cast<std::size_t>(r + n) * d + c] = im;
    }
  const auto ev = jacobi_eigenvalues(std::move(m), d, tol);
  Spectrum s;
  for (int k = 0; k < d; k += 2) s.values.push_back(0.5 * (ev[k] + ev[k + 1]));
  return s;
}

inline Spectrum eigenvalues(const MixedGraph& g, double tol = 1e-11) { return eigenvalues(hermitian_matrix(g), tol); }

/// Eigenvalues of a signed graph's adjacency matrix.
inline Spectrum eigenvalues(const SignedGraph& s) {
  const int n = s.order();
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r) * n + c] = s.sign(r, c);
  return {jacobi_eigenvalues(std::move(m), n), std::nullopt};
}

// ---- exact forms -------------------------------------------------------------------------

namespace detail {

/// V_0 = 2, V_1 = x, V_{j+1} = x V_j - V_{j-1}; V_j(2cos t) = 2cos(jt).
inline IntPolynomial lucas_v(int j) {
  static std::vector<IntPolynomial> cache{int_poly({2}), int_poly({0, 1})};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= j) {
    const auto k = cache.size();
    cache.push_back(IntPolynomial::x() * cache[k - 1] - cache[k - 2]);
  }
  return cache[static_cast<std::size_t>(j)];
}

inline IntPolynomial cyclotomic(int n) {
  static std::map<int, IntPolynomial> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPolynomial p = IntPolynomial::monomial(1, n) - int_poly({1});
  for (int d = 1; d < n; ++d)
    if (n % d == 0) {
      auto q = exact_quotient(p, cyclotomic(d));
      if (!q) throw ConsistencyError("cyclotomic division is not exact");
      p = *q;
    }
  cache.emplace(n, p);
  return p;
}

}  // namespace detail

/// Minimal polynomial of 2cos(2 pi / N).
inline IntPolynomial cos_minimal_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cos_minimal_polynomial needs N >= 1");
  if (n == 1) return int_poly({-2, 1});
  if (n == 2) return int_poly({2, 1});
  const auto phi = detail::cyclotomic(n);
  const int m = phi.degree() / 2;
  IntPolynomial psi = IntPolynomial::constant(phi.coeff(m));
  for (int j = 1; j <= m; ++j) psi = psi + IntPolynomial::constant(phi.coeff(m + j)) * detail::lucas_v(j);
  return psi;
}

/// Integer polynomial whose roots are exactly the given terms; throws if the
/// multiset is not closed under Galois conjugation.
inline IntPolynomial poly_from_terms(const std::vector<CosTerm>& terms) {
  // 2cos(p pi/q) = 2cos(2 pi a/N) with a/N = p/(2q) in lowest terms.
  std::map<int, std::map<int, int>> by_n;  // N -> a -> count
  for (const auto& t0 : terms) {
    const auto t = CosTerm::make(t0.p, t0.q);
    int a = t.p;
    int n = 2 * t.q;
    const int g = std::gcd(a, n);
    a /= g;
    n /= g;
    ++by_n[n][a];
  }
  IntPolynomial out = int_poly({1});
  for (const auto& [n, counts] : by_n) {
    std::vector<int> conj;
    for (int a = 0; 2 * a <= n; ++a)
      if (std::gcd(a, n) == 1) conj.push_back(a);
    const int mult = counts.begin()->second;
    if (counts.size() != conj.size())
      throw InvalidArgument("exact spectrum is not Galois-closed at denominator " + std::to_string(n));
    for (const auto& [a, c] : counts)
      if (c != mult) throw InvalidArgument("exact spectrum is not Galois-closed at denominator " + std::to_string(n));
    const auto psi = cos_minimal_polynomial(n);
    for (int k = 0; k < mult; ++k) out = out * psi;
  }
  return out;
}

inline IntPolynomial exact_polynomial(const Spectrum& s) {
  if (!s.exact) throw InvalidArgument("spectrum has no exact form");
  return poly_from_terms(*s.exact);
}

namespace detail {

inline std::vector<CosTerm> odd_terms(int count, int q) {
  std::vector<CosTerm> out;
  for (int k = 0; k < count; ++k) out.push_back({2 * k + 1, q});
  return out;
}

inline std::vector<CosTerm> letter_terms(char letter) {
  auto list = [](std::initializer_list<int> ps, int q) {
    std::vector<CosTerm> out;
    for (int p : ps) out.push_back({p, q});
    return out;
  };
  switch (letter) {
    case 'o': return list({1, 2, 4, 5, 7, 8}, 9);
    case 'p': return list({1, 3, 5, 7, 9, 11, 13}, 14);
    case 'q': return list({1, 5, 7, 11, 13, 17, 19, 23}, 24);
    case 'r':
    case 'g': return list({1, 2, 5, 6, 7, 10, 11}, 12);
    case 's': return list({1, 3, 7, 9, 11, 13, 17, 19}, 20);
    case 't': return {{1, 10}, {1, 6}, {3, 10}, {5, 10}, {7, 10}, {5, 6}, {9, 10}};
    case 'u':
    case 'h': return list({1, 2, 4, 7, 8, 11, 13, 14}, 15);
    case 'k': return list({1, 5, 7, 11}, 12);
    case 'v': return list({1, 3, 5, 7, 11, 13, 15, 17}, 18);
    case 'w': return list({1, 5, 7, 9, 11, 13, 17}, 18);
    case 'y': return list({1, 4, 5, 7, 8, 11}, 12);
    case 'z': return list({1, 7, 11, 13, 17, 19, 23, 29}, 30);
    default: throw InvalidArgument(std::string("unknown admissible letter '") + letter + "'");
  }
}

}  // namespace detail

inline const std::string& admissible_letters() {
  static const std::string s = "opqrstuvghkwyz";
  return s;
}

/// Closed-form spectra. family in {C, C1, C2, P, D, Gt, Gttm} or a single admissible letter.
/// Gttm takes (t, t+m).
inline Spectrum closed_form(const std::string& family, const std::vector<int>& params = {}) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw InvalidArgument("closed_form(" + family + ") takes " + std::to_string(k) + " parameter(s)");
  };
  std::vector<CosTerm> t;
  if (family == "C" || family == "C1" || family == "C2") {
    need(1);
    const int n = params[0];
    if (n < 3) throw InvalidArgument("cycle order must be at least 3");
    for (int k = 0; k < n; ++k) {
      if (family == "C") t.push_back({2 * k, n});
      if (family == "C2") t.push_back({2 * k + 1, n});
      if (family == "C1") t.push_back({2 * k + 1, 2 * n});
    }
  } else if (family == "P") {
    need(1);
    const int n = params[0];
    if (n < 1) throw InvalidArgument("path order must be at least 1");
    for (int k = 1; k <= n; ++k) t.push_back({k, n + 1});
  } else if (family == "D") {
    need(1);
    const int n = params[0];
    if (n < 4) throw InvalidArgument("D_n needs n >= 4");
    t = detail::odd_terms(n - 1, 2 * n - 2);
    t.push_back({1, 2});
  } else if (family == "Gt") {
    need(1);
    const int s = params[0];
    if (s < 0) throw InvalidArgument("G_t needs t >= 0");
    t = detail::odd_terms(s + 2, 2 * s + 4);
    t.push_back({1, 4});
    t.push_back({3, 4});
  } else if (family == "Gttm") {
    need(2);
    const int a = params[0];
    const int b = params[1];
    if (a < 0 || b < a) throw InvalidArgument("G_t^{t+m} needs 0 <= t <= t+m");
    t = detail::odd_terms(b + 2, 2 * b + 4);
    const auto rest = detail::odd_terms(a + 2, 2 * a + 4);
    t.insert(t.end(), rest.begin(), rest.end());
  } else if (family.size() == 1 || (family.size() == 3 && family.front() == '(' && family.back() == ')')) {
    need(0);
    t = detail::letter_terms(family.size() == 1 ? family[0] : family[1]);
  } else {
    throw InvalidArgument("unknown spectrum family '" + family + "'");
  }
  return spectrum_from_terms(std::move(t));
}

// ---- decisions ---------------------------------------------------------------------------

/// Exact: equal characteristic polynomials.
inline bool cospectral(const MixedGraph& g1, const MixedGraph& g2) {
  return g1.order() == g2.order() && char_poly_exact(g1) == char_poly_exact(g2);
}

/// Cauchy interlacing of the induced subgraph on S, within tol.
inline bool interlaces(const MixedGraph& g, const std::vector<int>& s, double tol = 1e-9) {
  const auto big = eigenvalues(g).values;
  const auto sub = eigenvalues(induced_subgraph(g, s)).values;
  const int n = static_cast<int>(big.size());
  const int m = static_cast<int>(sub.size());
  for (int i = 0; i < m; ++i)
    if (big[i] < sub[i] - tol || sub[i] < big[i + n - m] - tol) return false;
  return true;
}

/// Some eigenvalue lies outside the open interval (-2, 2). Exact Sturm count.
inline bool is_out(const IntPolynomial& phi) { return count_roots_in(phi, Rational(-2), Rational(2)) < phi.degree(); }
inline bool is_out(const MixedGraph& g) { return is_out(char_poly_exact(g)); }

/// Floating counterpart used as a cross-check.
inline bool is_out_numeric(const MixedGraph& g, double tol = 1e-9) {
  if (g.order() == 0) return false;
  const auto s = eigenvalues(g);
  return s.lambda1() >= 2 - tol || s.lambda_min() <= -2 + tol;
}

/// Multiset equality up to tol after sorting.
inline bool same_values(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  auto x = a;
  auto y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k] - y[k]) > tol) return false;
  return true;
}

/// Spectrum equals its negation, within tol.
inline bool is_symmetric(const Spectrum& s, double tol = 1e-9) {
  std::vector<double> neg;
  for (double v : s.values) neg.push_back(-v);
  return same_values(s.values, neg, tol);
}

/// No odd cycle has real value.
inline bool has_no_real_odd_cycle(const MixedGraph& g) {
  for (const auto& c : all_cycles(g))
    if (c.length() % 2 == 1 && c.value.is_real()) return false;
  return true;
}

}  // namespace hermispec
