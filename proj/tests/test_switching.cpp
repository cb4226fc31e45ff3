#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hermispec/hermispec.hpp"

using namespace hermispec;

namespace {

/// Every orientation of C_n: edge k = {k, k+1 mod n} in state 0 (undirected), 1 (k -> k+1), 2 (k+1 -> k).
MixedGraph cycle_with_states(int n, int code) {
  MixedGraphBuilder b(n);
  for (int k = 0; k < n; ++k, code /= 3) {
    const int s = code % 3;
    b.set(k, (k + 1) % n, s == 0 ? 0 : s == 1 ? 1 : 3);
  }
  return std::move(b).build();
}

int state_code(const MixedGraph& g) {
  int code = 0;
  for (int k = g.order() - 1; k >= 0; --k) {
    const int b = (k + 1) % g.order();
    code = 3 * code + (g.is_arc(k, b) ? 1 : g.is_arc(b, k) ? 2 : 0);
  }
  return code;
}

/// For every orientation of C_n, the fewest arcs over its component under the four local moves.
/// Moves only apply where arcs exist, so components are joined in both directions. Uses no cycle values.
std::vector<int> fewest_arcs_by_moves(int n, int states) {
  std::vector<int> parent(states);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int s = 0; s < states; ++s) {
    const auto x = cycle_with_states(n, s);
    for (int v = 0; v < n; ++v)
      for (int m = 1; m <= 4; ++m) {
        try {
          parent[find(state_code(sw_move(x, m, v)))] = find(s);
        } catch (const InvalidArgument&) {
        }
      }
  }
  std::vector<int> best(states, n);
  for (int s = 0; s < states; ++s)
    best[find(s)] = std::min(best[find(s)], static_cast<int>(cycle_with_states(n, s).arcs().size()));
  std::vector<int> out(states);
  for (int s = 0; s < states; ++s) out[s] = best[find(s)];
  return out;
}

template <class Rng>
SwitchingFunction random_theta(int n, Rng& rng) {
  std::uniform_int_distribution<int> d(0, 3);
  SwitchingFunction t = SwitchingFunction::identity(n);
  for (auto& u : t.theta) u = GaussianUnit::from_exponent(d(rng));
  return t;
}

}  // namespace

TEST(Switching, PreservesCharPoly) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const auto g = random_mixed_graph(rng, 7, 0.4);
    const auto t = random_admissible_switching(g, rng);
    ASSERT_TRUE(is_admissible(g, t));
    EXPECT_EQ(char_poly_exact(apply_switching(g, t)), char_poly_exact(g));
  }
}

TEST(Switching, MinusOneEntryIsRejected) {
  const auto g = families::path(2);
  SwitchingFunction t = SwitchingFunction::identity(2);
  t.theta[0] = GaussianUnit::minus_one();
  EXPECT_FALSE(is_admissible(g, t));
  EXPECT_THROW(apply_switching(g, t), InvalidGraph);
}

TEST(Switching, CompositionMatchesSequentialApplication) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    const GainGraph g(random_mixed_graph(rng, 6, 0.5));
    const auto a = random_theta(6, rng);
    const auto b = random_theta(6, rng);
    EXPECT_EQ(g.switched(a).switched(b), g.switched(compose(b, a)));
  }
}

TEST(Switching, WitnessFindsTheta) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const auto g = random_mixed_graph(rng, 8, 0.35);
    const auto t = random_admissible_switching(g, rng);
    const auto h = apply_switching(g, t);
    const auto w = switching_witness(g, h);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(apply_switching(g, *w), h);
  }
  EXPECT_FALSE(switching_equivalent(families::cycle(5, 1), families::cycle(5, 2)));
  EXPECT_FALSE(switching_equivalent(families::cycle(5, 0), families::cycle(5, 1)));
  EXPECT_THROW(switching_equivalent(families::cycle(5, 0), families::path(5)), InvalidArgument);
}

TEST(Switching, ForestsSwitchToUndirected) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    // Random tree by attaching each vertex to an earlier one.
    const int n = 2 + iter % 9;
    MixedGraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.set(std::uniform_int_distribution<int>(0, v - 1)(rng), v, std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 0 : 1);
    const auto g = std::move(b).build();
    const auto t = normalize_forest(g);
    EXPECT_EQ(apply_switching(g, t), underlying_graph(g));
  }
  EXPECT_THROW(normalize_forest(families::cycle(3)), InvalidArgument);
}

TEST(Switching, ForestNormalFormTreeEdgesAreOne) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    const GainGraph g(random_mixed_graph(rng, 7, 0.5));
    const auto nf = forest_normal_form(g);
    for (auto [a, b] : nf.forest.tree) EXPECT_EQ(nf.normalized.exponent(a, b), 0);
    EXPECT_EQ(g.switched(nf.theta), nf.normalized);
  }
}

TEST(Switching, CycleTypesAgreeWithLocalMoves) {
  for (int n = 3; n <= 7; ++n) {
    int pow3 = 1;
    for (int k = 0; k < n; ++k) pow3 *= 3;
    std::map<CycleTag, int> tally;
    const auto fewest = fewest_arcs_by_moves(n, pow3);
    for (int code = 0; code < pow3; ++code) {
      const auto g = cycle_with_states(n, code);
      ASSERT_EQ(state_code(g), code);
      const int arcs = fewest[code];
      ASSERT_LE(arcs, 2) << "n=" << n << " code=" << code;
      const CycleTag oracle = arcs == 0 ? CycleTag::Type0 : arcs == 1 ? CycleTag::Type1 : CycleTag::Type2;
      const auto c = canonicalize_cycle(g);
      EXPECT_EQ(c.type.tag, oracle) << "n=" << n << " code=" << code;
      EXPECT_EQ(c.type.order, n);
      EXPECT_TRUE(switching_equivalent(g, c.representative));
      EXPECT_EQ(apply_switching(g, c.theta), c.representative);
      ++tally[oracle];
    }
    EXPECT_EQ(tally.size(), 3u);
  }
}

TEST(Switching, CanonicalRepresentativesHaveTheStandardShape) {
  const auto c0 = canonicalize_cycle(families::cycle(6, 0).relabeled({3, 1, 4, 0, 5, 2}));
  EXPECT_TRUE(c0.representative.arcs().empty());
  const auto c1 = canonicalize_cycle(families::cycle(6, 1));
  EXPECT_EQ(c1.representative.arcs().size(), 1u);
  const auto c2 = canonicalize_cycle(families::cycle(6, 2));
  ASSERT_EQ(c2.representative.arcs().size(), 2u);
  const auto a = c2.representative.arcs();
  EXPECT_TRUE(a[0].second == a[1].first || a[1].second == a[0].first);
  // At fixed labels the two orientations of a type-1 cycle stay apart.
  EXPECT_FALSE(switching_equivalent(families::cycle(5, 1), families::cycle(5, 1).converse()));
  EXPECT_THROW(canonicalize_cycle(families::path(4)), InvalidArgument);
}

TEST(Switching, UnicyclicCanonicalization) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 100; ++iter) {
    const int len = 3 + iter % 4;
    const int n = len + 1 + iter % 5;
    MixedGraphBuilder b(n);
    std::uniform_int_distribution<int> st(0, 2);
    auto state = [&] { const int s = st(rng); return s == 0 ? 0 : s == 1 ? 1 : 3; };
    for (int k = 0; k < len; ++k) b.set(k, (k + 1) % len, state());
    for (int v = len; v < n; ++v) b.set(std::uniform_int_distribution<int>(0, v - 1)(rng), v, state());
    const auto g = std::move(b).build();
    const auto c = canonicalize_unicyclic(g);
    EXPECT_EQ(c.type.order, len);
    EXPECT_EQ(apply_switching(g, c.theta), c.representative);
    const auto cyc = all_cycles(g);
    ASSERT_EQ(cyc.size(), 1u);
    EXPECT_EQ(c.type.tag, tag_of_value(cyc[0].value));
    // Tree edges of the representative are undirected.
    EXPECT_LE(c.representative.arcs().size(), 2u);
  }
}

TEST(Switching, MovesAreSwitchings) {
  const auto g = families::cycle(5, 2);  // arcs (0,1), (1,2)
  const auto h = sw_move(g, 1, 1);
  EXPECT_EQ(h.arcs(), (std::vector<Edge>{{1, 0}, {2, 1}}));
  EXPECT_TRUE(switching_equivalent(g, h));
  EXPECT_EQ(char_poly_exact(g), char_poly_exact(h));
  const auto two_in = MixedGraph::build(3, {}, {{0, 1}, {2, 1}});
  EXPECT_TRUE(sw_move(two_in, 2, 1).arcs().empty());
  const auto two_out = MixedGraph::build(3, {}, {{1, 0}, {1, 2}});
  EXPECT_TRUE(sw_move(two_out, 3, 1).arcs().empty());
  const auto shift = MixedGraph::build(3, {{1, 2}}, {{0, 1}});
  EXPECT_EQ(sw_move(shift, 4, 1).arcs(), (std::vector<Edge>{{1, 2}}));
  EXPECT_THROW(sw_move(families::path(3), 1, 1), InvalidArgument);
  EXPECT_THROW(sw_move(families::complete(4), 2, 0), InvalidArgument);
}

TEST(Switching, AdmissibleSwitchingOfGainGraphs) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const auto g = random_mixed_graph(rng, 6, 0.5);
    const GainGraph gg = GainGraph(g).switched(random_theta(6, rng));
    const auto t = find_admissible_switching(gg);
    ASSERT_TRUE(t.has_value());
    const auto back = gg.switched(*t).to_mixed();
    EXPECT_TRUE(switching_equivalent(g, back));
  }
  // A triangle with gains 1, 1, -1 has value -1 but only one chord edge: realizable as two arcs.
  GainGraph tri(3);
  tri.set(0, 1, 0);
  tri.set(1, 2, 0);
  tri.set(0, 2, 2);
  EXPECT_TRUE(find_admissible_switching(tri).has_value());
  // A digon-free gain graph whose value forces a -1 somewhere: K2 with gain -1 is fixable by switching.
  GainGraph k2(2);
  k2.set(0, 1, 2);
  EXPECT_TRUE(find_admissible_switching(k2).has_value());
}

TEST(Switching, RealGraphsBecomeSigned) {
  const auto g = families::cycle(6, 2);
  const auto s = to_signed(g);
  EXPECT_EQ(s.negative_edges().size(), 1u);
  EXPECT_EQ(char_poly_exact(s), char_poly_exact(g));
  EXPECT_THROW(to_signed(families::cycle(5, 1)), InvalidArgument);
}
