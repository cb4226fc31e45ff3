#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hermispec/error.hpp"
#include "hermispec/gaussian.hpp"

namespace hermispec {

using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, coefficients stored constant term first.
/// The zero polynomial has no coefficients and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> c) : c_(std::move(c)) { trim(); }
  Polynomial(std::initializer_list<Coeff> c) : c_(c) { trim(); }

  static Polynomial constant(Coeff a) { return Polynomial(std::vector<Coeff>{std::move(a)}); }
  static Polynomial x() { return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)}); }
  /// a * x^k
  static Polynomial monomial(Coeff a, int k) {
    std::vector<Coeff> c(static_cast<std::size_t>(k) + 1, Coeff(0));
    c.back() = std::move(a);
    return Polynomial(std::move(c));
  }
  /// x - r
  static Polynomial linear(Coeff r) { return Polynomial(std::vector<Coeff>{-r, Coeff(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Coeff coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Coeff(0); }
  Coeff lead() const { return c_.empty() ? Coeff(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Coeff>& coefficients() const { return c_; }

  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Coeff> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> r = a.c_;
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& a) {
    std::vector<Coeff> r = a.c_;
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

  /// Human form, highest degree first, e.g. "x^4 - 4x^2 + 4".
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      Coeff a = c_[k];
      if (a == 0) continue;
      const bool neg = a < 0;
      if (neg) a = -a;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (a != 1 || k == 0) os << a;
      if (k >= 1) os << var;
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline IntPolynomial int_poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (auto x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coefficients()) c.emplace_back(a);
  return RatPolynomial(std::move(c));
}

/// Scales a rational polynomial by a positive constant to a primitive integer polynomial.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  BigInt den = 1;
  for (const auto& a : p.coefficients()) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(a));
  std::vector<BigInt> c;
  BigInt g = 0;
  for (const auto& a : p.coefficients()) {
    BigInt v = boost::multiprecision::numerator(a) * (den / boost::multiprecision::denominator(a));
    g = boost::multiprecision::gcd(g, v);
    c.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

/// Quotient and remainder over Q.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[k] / lb;
    q[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(rem))};
}

/// a / b over Z when b divides a exactly; b must be monic.
inline std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw InvalidArgument("exact_quotient needs a monic divisor");
  const int db = b.degree();
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < db) return std::nullopt;
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1, BigInt(0));
  for (int k = a.degree(); k >= db; --k) {
    const BigInt f = rem[k];
    q[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeff(j);
  }
  for (int k = 0; k < db; ++k)
    if (rem[k] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

inline bool divides(const IntPolynomial& d, const IntPolynomial& a) { return exact_quotient(a, d).has_value(); }

inline RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.lead() * p;
}

inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

inline BigInt eval_at(const IntPolynomial& p, const BigInt& x) { return p.eval(x); }

inline int sign_at(const RatPolynomial& p, const Rational& x) {
  const Rational v = p.eval(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Yun's algorithm: returns f_1, f_2, ... (monic, pairwise coprime, square-free) with p = lead * prod f_i^i.
inline std::vector<RatPolynomial> square_free_decomposition(const RatPolynomial& p) {
  std::vector<RatPolynomial> out;
  if (p.degree() <= 0) return out;
  RatPolynomial a = make_monic(p);
  RatPolynomial b = a.derivative();
  RatPolynomial c = gcd(a, b);
  RatPolynomial w = divmod(a, c).first;
  RatPolynomial y = divmod(b, c).first;
  RatPolynomial z = y - w.derivative();
  while (w.degree() > 0) {
    RatPolynomial g = gcd(w, z);
    out.push_back(g);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

inline RatPolynomial square_free_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return p;
  return make_monic(divmod(p, gcd(p, p.derivative())).first);
}

/// Number of times (x - r) divides p.
inline int root_multiplicity(const IntPolynomial& p, const Rational& r) {
  if (p.is_zero()) throw InvalidArgument("root_multiplicity of the zero polynomial");
  RatPolynomial q = to_rational(p);
  const RatPolynomial lin = RatPolynomial::linear(r);
  int m = 0;
  for (;;) {
    auto [quo, rem] = divmod(q, lin);
    if (!rem.is_zero()) return m;
    q = std::move(quo);
    ++m;
  }
}

/// Sturm chain of a square-free polynomial; remainders scaled by positive constants.
inline std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(to_rational(primitive_part(p)));
  RatPolynomial d = chain.back().derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    RatPolynomial r = divmod(a, b).second;
    if (r.is_zero()) break;
    r = -r;
    // primitive_part only rescales by a positive constant, so sign sequences are unchanged.
    chain.push_back(to_rational(primitive_part(r)));
  }
  return chain;
}

inline int sign_variations(const std::vector<RatPolynomial>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Distinct real roots of p in the open interval (a, b).
inline int count_distinct_roots_in(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw InvalidArgument("count_roots_in needs a < b");
  if (p.degree() <= 0) return 0;
  RatPolynomial q = square_free_part(to_rational(p));
  // Endpoints must not be roots for the Sturm count.
  for (const Rational& e : {a, b}) {
    if (q.eval(e) == 0) q = divmod(q, RatPolynomial::linear(e)).first;
  }
  if (q.degree() <= 0) return 0;
  const auto chain = sturm_chain(q);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

/// Real roots of p in (a, b) counted with multiplicity.
inline int count_roots_in(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw InvalidArgument("count_roots_in needs a < b");
  const auto parts = square_free_decomposition(to_rational(p));
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    total += static_cast<int>(i + 1) * count_distinct_roots_in(primitive_part(parts[i]), a, b);
  }
  return total;
}

/// Multiset of root multiplicities (e.g. {1,1,2}) taken from the square-free decomposition.
inline std::vector<int> multiplicity_profile(const IntPolynomial& p) {
  std::vector<int> out;
  const auto parts = square_free_decomposition(to_rational(p));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int k = 0; k < parts[i].degree(); ++k) out.push_back(static_cast<int>(i + 1));
  return out;
}

inline bool is_square_free(const IntPolynomial& p) {
  const auto parts = square_free_decomposition(to_rational(p));
  return parts.size() <= 1;
}

}  // namespace hermispec
