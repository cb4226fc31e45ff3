#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermispec {

using BigInt = boost::multiprecision::cpp_int;

/// A fourth root of unity i^k, k in {0,1,2,3}.
class GaussianUnit {
 public:
  constexpr GaussianUnit() = default;
  static constexpr GaussianUnit from_exponent(int k) { return GaussianUnit(k); }
  static constexpr GaussianUnit one() { return GaussianUnit(0); }
  static constexpr GaussianUnit i() { return GaussianUnit(1); }
  static constexpr GaussianUnit minus_one() { return GaussianUnit(2); }
  static constexpr GaussianUnit minus_i() { return GaussianUnit(3); }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return (k_ & 1) == 0; }

  constexpr GaussianUnit conj() const { return GaussianUnit(4 - k_); }
  constexpr GaussianUnit inverse() const { return conj(); }

  friend constexpr GaussianUnit operator*(GaussianUnit a, GaussianUnit b) {
    return GaussianUnit(a.k_ + b.k_);
  }
  constexpr GaussianUnit& operator*=(GaussianUnit o) { return *this = *this * o; }
  friend constexpr bool operator==(GaussianUnit, GaussianUnit) = default;
  friend constexpr auto operator<=>(GaussianUnit, GaussianUnit) = default;

  constexpr int real() const { return k_ == 0 ? 1 : (k_ == 2 ? -1 : 0); }
  constexpr int imag() const { return k_ == 1 ? 1 : (k_ == 3 ? -1 : 0); }

  std::string to_string() const {
    switch (k_) {
      case 0: return "1";
      case 1: return "i";
      case 2: return "-1";
      default: return "-i";
    }
  }

  static GaussianUnit parse(std::string_view s) {
    if (s == "1") return one();
    if (s == "i") return i();
    if (s == "-1") return minus_one();
    if (s == "-i") return minus_i();
    throw std::invalid_argument("not a fourth root of unity: '" + std::string(s) + "'");
  }

 private:
  explicit constexpr GaussianUnit(int k) : k_(static_cast<std::uint8_t>(((k % 4) + 4) % 4)) {}
  std::uint8_t k_ = 0;
};

/// Matrix entry: zero or a unit.
using UnitEntry = std::optional<GaussianUnit>;

/// Gaussian integer a + bi over an integral type.
template <class Int>
struct Gaussian {
  Int re{0};
  Int im{0};

  Gaussian() = default;
  Gaussian(Int r, Int i = Int(0)) : re(std::move(r)), im(std::move(i)) {}
  explicit Gaussian(GaussianUnit u) : re(u.real()), im(u.imag()) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }
  Int norm() const { return re * re + im * im; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

  /// Exact quotient; throws if `d` does not divide `*this` in Z[i].
  Gaussian exact_div(const Gaussian& d) const {
    const Int n = d.norm();
    if (n == 0) throw std::domain_error("Gaussian division by zero");
    const Gaussian p = *this * d.conj();
    if (p.re % n != 0 || p.im % n != 0) throw std::logic_error("inexact Gaussian integer division");
    return {p.re / n, p.im / n};
  }
};

}  // namespace hermispec
