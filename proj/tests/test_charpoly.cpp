#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hermispec/hermispec.hpp"

using namespace hermispec;

namespace {

using G = Gaussian<long long>;

/// det(xI - H) by the permutation expansion.
G leibniz_char_det(const MixedGraph& g, long long x) {
  const int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  G total(0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inversions += p[a] > p[b];
    G term(inversions % 2 ? -1 : 1);
    for (int r = 0; r < n && !term.is_zero(); ++r) {
      const int c = p[r];
      if (r == c) {
        term = term * G(x);
      } else if (const auto e = g.entry(r, c)) {
        term = term * -G(*e);
      } else {
        term = G(0);
      }
    }
    total = total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Monic degree-n polynomial agreeing with the oracle at n+1 points.
void expect_matches_oracle(const IntPolynomial& phi, const MixedGraph& g) {
  ASSERT_EQ(phi.degree(), g.order());
  ASSERT_EQ(phi.coeff(g.order()), 1);
  for (long long x = -2; x <= g.order() - 2; ++x) {
    const G d = leibniz_char_det(g, x);
    EXPECT_EQ(d.im, 0);
    EXPECT_EQ(eval_at(phi, BigInt(x)), BigInt(d.re)) << graph_to_json(g).dump() << " at " << x;
  }
}

}  // namespace

TEST(CharPoly, ExactMatchesPermutationExpansion) {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 60; ++iter) {
    const auto g = random_mixed_graph(rng, 1 + iter % 7, 0.5);
    expect_matches_oracle(char_poly_exact(g), g);
  }
  expect_matches_oracle(char_poly_exact(families::complete(6)), families::complete(6));
}

TEST(CharPoly, ElementaryRouteAgrees) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 150; ++iter) {
    const auto g = random_mixed_graph(rng, 2 + iter % 9, 0.35);
    if (structure(g).corank > 4) continue;
    EXPECT_EQ(char_poly_elementary(g), char_poly_exact(g)) << graph_to_json(g).dump();
  }
  const auto k8 = families::complete(8);
  EXPECT_THROW(char_poly_elementary(k8), GuardExceeded);
  EXPECT_EQ(char_poly_elementary(k8, EnumerationGuard::unlimited()), char_poly_exact(k8));
}

TEST(CharPoly, SignedRouteAgrees) {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = underlying_graph(random_mixed_graph(rng, 3 + iter % 7, 0.4));
    std::vector<Edge> neg;
    for (auto e : g.edges())
      if (rng() % 3 == 0) neg.push_back(e);
    const SignedGraph s(g, neg);
    if (structure(g).corank > 4) continue;
    EXPECT_EQ(char_poly_signed(s), char_poly_exact(s));
  }
}

TEST(CharPoly, SchwenkFormulas) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 60; ++iter) {
    const auto g = random_mixed_graph(rng, 3 + iter % 6, 0.5);
    const auto phi = char_poly_exact(g);
    const auto all = EnumerationGuard::unlimited();
    for (int u = 0; u < g.order(); ++u) EXPECT_EQ(schwenk_vertex(g, u, all), phi);
    for (auto [u, v] : g.edges()) EXPECT_EQ(schwenk_edge(g, u, v, all), phi);
  }
  EXPECT_THROW(schwenk_vertex(families::complete(7), 0), GuardExceeded);
  EXPECT_THROW(schwenk_edge(families::path(3), 0, 2), InvalidArgument);
  EXPECT_THROW(schwenk_vertex(families::path(3), 3), InvalidArgument);
}

TEST(CharPoly, MatchingCounts) {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 40; ++iter) {
    const auto g = random_mixed_graph(rng, 2 + iter % 7, 0.5);
    const auto e = g.edges();
    std::vector<BigInt> brute(static_cast<std::size_t>(g.order() / 2 + 1), 0);
    for (unsigned mask = 0; mask < (1U << e.size()); ++mask) {
      unsigned used = 0;
      bool ok = true;
      for (std::size_t k = 0; k < e.size() && ok; ++k)
        if ((mask >> k) & 1U) {
          const unsigned b = (1U << e[k].first) | (1U << e[k].second);
          ok = (used & b) == 0;
          used |= b;
        }
      if (ok) brute[static_cast<std::size_t>(std::popcount(mask))] += 1;
    }
    for (std::size_t k = 0; k < brute.size(); ++k) EXPECT_EQ(count_k_matchings(g, static_cast<int>(k)), brute[k]);
  }
}

TEST(CharPoly, ForestsGiveMatchingPolynomial) {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 2 + iter % 10;
    MixedGraphBuilder b(n);
    for (int v = 1; v < n; ++v)
      if (rng() % 5 != 0) b.set(static_cast<int>(rng() % v), v, static_cast<int>(rng() % 2));
    const auto g = std::move(b).build();
    const auto phi = char_poly_exact(g);
    for (int k = 0; 2 * k <= n; ++k) {
      const BigInt m = count_k_matchings(g, k);
      EXPECT_EQ(phi.coeff(n - 2 * k), k % 2 ? BigInt(-m) : m);
      if (2 * k + 1 <= n) {
        EXPECT_EQ(phi.coeff(n - 2 * k - 1), 0);
      }
    }
  }
}

TEST(CharPoly, LowCoefficients) {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = random_mixed_graph(rng, 3 + iter % 8, 0.5);
    const int n = g.order();
    const auto phi = char_poly_exact(g);
    EXPECT_EQ(phi.coeff(n - 1), 0);
    EXPECT_EQ(phi.coeff(n - 2), -g.size());
    long long re = 0;
    for (const auto& c : all_cycles(g))
      if (c.length() == 3) re += c.value.real();
    EXPECT_EQ(phi.coeff(n - 3), BigInt(-2 * re));
  }
}

TEST(CharPoly, PathRecurrence) {
  IntPolynomial a = int_poly({1});  // P_0
  IntPolynomial b = IntPolynomial::x();
  for (int n = 2; n <= 30; ++n) {
    const auto c = IntPolynomial::x() * b - a;
    a = b;
    b = c;
  }
  EXPECT_EQ(char_poly_exact(families::path(30)), b);
  // D_4 is the star K_{1,3}.
  EXPECT_EQ(char_poly_exact(families::d_n(4)), int_poly({0, 0, -3, 0, 1}));
}

TEST(CharPoly, SwitchingClassesShareCharPoly) {
  // C_n: type 0 gives 2cos(2 pi k/n), type 2 gives 2cos((2k+1) pi/n); both are known closed forms.
  EXPECT_EQ(char_poly_exact(families::cycle(4, 0)), int_poly({0, 0, -4, 0, 1}));
  EXPECT_EQ(char_poly_exact(families::cycle(4, 2)), int_poly({4, 0, -4, 0, 1}));
  EXPECT_EQ(char_poly_exact(families::cycle(4, 1)), int_poly({2, 0, -4, 0, 1}));
}
