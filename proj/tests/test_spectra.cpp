#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "hermispec/hermispec.hpp"

using namespace hermispec;

namespace {

void expect_closed_form(const std::string& family, const std::vector<int>& params, const MixedGraph& g) {
  const auto cf = closed_form(family, params);
  const auto num = eigenvalues(g);
  EXPECT_TRUE(same_values(cf.values, num.values, 1e-9)) << family;
  EXPECT_EQ(exact_polynomial(cf), char_poly_exact(g)) << family;
}

/// prod (x - 2cos(2 pi k / N)) over 0 <= k <= N/2, gcd(k, N) = 1, with rounded coefficients.
std::vector<long long> numeric_cos_product(int n) {
  std::vector<double> c{1.0};
  for (int k = 0; 2 * k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const double r = 2.0 * std::cos(2.0 * std::acos(-1.0) * k / n);
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= r * c[j];
    }
    c = next;
  }
  std::vector<long long> out;
  for (double v : c) out.push_back(std::llround(v));
  return out;
}

}  // namespace

TEST(Spectra, FamilyClosedForms) {
  for (int n = 3; n <= 16; ++n) {
    expect_closed_form("C", {n}, families::cycle(n, 0));
    expect_closed_form("C1", {n}, families::cycle(n, 1));
    expect_closed_form("C2", {n}, families::cycle(n, 2));
  }
  for (int n = 1; n <= 16; ++n) expect_closed_form("P", {n}, families::path(n));
  for (int n = 4; n <= 14; ++n) expect_closed_form("D", {n}, families::d_n(n));
  for (int t = 1; t <= 10; ++t) expect_closed_form("Gt", {t}, families::g_t(t));
  for (int t = 1; t <= 5; ++t)
    for (int tm = t; tm <= 7; ++tm) expect_closed_form("Gttm", {t, tm}, families::g_t_tm(t, tm));
  EXPECT_THROW(closed_form("D", {3}), InvalidArgument);
  EXPECT_THROW(closed_form("X", {3}), InvalidArgument);
}

TEST(Spectra, LetterClosedForms) {
  const auto reg = Registry::load(default_registry_path());
  for (char l : admissible_letters()) {
    const std::string key(1, l);
    const auto g = reg.get(key);
    expect_closed_form(key, {}, g);
    // Every letter lies inside (-2, 2) with simple eigenvalues.
    const auto phi = char_poly_exact(g);
    EXPECT_FALSE(is_out(phi)) << l;
    EXPECT_TRUE(is_square_free(phi)) << l;
  }
}

TEST(Spectra, CosMinimalPolynomial) {
  for (int n = 1; n <= 60; ++n) {
    const auto psi = cos_minimal_polynomial(n);
    const auto want = numeric_cos_product(n);
    ASSERT_EQ(psi.degree() + 1, static_cast<int>(want.size())) << n;
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(psi.coeff(static_cast<int>(k)), want[k]) << n;
  }
  EXPECT_THROW(cos_minimal_polynomial(0), InvalidArgument);
}

TEST(Spectra, PartialConjugacyClassesAreRejected) {
  EXPECT_THROW(poly_from_terms({{1, 5}}), InvalidArgument);
  EXPECT_THROW(poly_from_terms({{1, 5}, {1, 5}, {3, 5}}), InvalidArgument);
  EXPECT_EQ(poly_from_terms({{1, 5}, {3, 5}}), int_poly({-1, -1, 1}));
  EXPECT_EQ(poly_from_terms({{1, 2}}), int_poly({0, 1}));
}

TEST(Spectra, TraceIdentities) {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = random_mixed_graph(rng, 2 + iter % 10, 0.45);
    const auto s = eigenvalues(g).values;
    double p1 = 0, p2 = 0, p3 = 0;
    for (double v : s) {
      p1 += v;
      p2 += v * v;
      p3 += v * v * v;
    }
    long long tri = 0;
    for (const auto& c : all_cycles(g))
      if (c.length() == 3) tri += c.value.real();
    EXPECT_NEAR(p1, 0.0, 1e-9);
    EXPECT_NEAR(p2, 2.0 * g.size(), 1e-8);
    EXPECT_NEAR(p3, 6.0 * tri, 1e-8);
  }
}

TEST(Spectra, OutDecisions) {
  for (int n = 1; n <= 20; ++n) EXPECT_FALSE(is_out(families::path(n)));
  for (int n = 3; n <= 20; ++n) {
    EXPECT_TRUE(is_out(families::cycle(n, 0)));
    EXPECT_FALSE(is_out(families::cycle(n, 1)));
    EXPECT_EQ(is_out(families::cycle(n, 2)), n % 2 == 1);
  }
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    const auto g = random_mixed_graph(rng, 2 + iter % 8, 0.3);
    EXPECT_EQ(is_out(g), is_out_numeric(g)) << graph_to_json(g).dump();
  }
}

TEST(Spectra, NegativeEvenCycleHasDoubleEigenvalues) {
  for (int n = 2; n <= 8; ++n) {
    const auto s = families::signed_cycle_minus(2 * n);
    const auto phi = char_poly_exact(s);
    EXPECT_EQ(multiplicity_profile(phi), std::vector<int>(static_cast<std::size_t>(n), 2));
    const auto values = eigenvalues(s).values;
    std::vector<double> want;
    for (int k = 0; k < 2 * n; ++k) want.push_back(2.0 * std::cos(std::acos(-1.0) * (2 * k + 1) / (2 * n)));
    EXPECT_TRUE(same_values(values, want, 1e-9));
    // Switching-equivalent to the mixed cycle of type 2.
    EXPECT_EQ(phi, char_poly_exact(families::cycle(2 * n, 2)));
  }
}

TEST(Spectra, Interlacing) {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 3 + iter % 8;
    const auto g = random_mixed_graph(rng, n, 0.5);
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) keep.push_back(v);
    if (keep.empty()) keep.push_back(0);
    EXPECT_TRUE(interlaces(g, keep));
  }
}

TEST(Spectra, SymmetryWithoutRealOddCycles) {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const auto g = random_mixed_graph(rng, 2 + iter % 9, 0.35);
    if (!has_no_real_odd_cycle(g)) continue;
    ++checked;
    EXPECT_TRUE(is_symmetric(eigenvalues(g))) << graph_to_json(g).dump();
    const auto phi = char_poly_exact(g);
    for (int k = phi.degree() - 1; k >= 0; k -= 2) EXPECT_EQ(phi.coeff(k), 0);
  }
  EXPECT_GT(checked, 50);
  EXPECT_FALSE(is_symmetric(eigenvalues(families::cycle(3, 0))));
}
