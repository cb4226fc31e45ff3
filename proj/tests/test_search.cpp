#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hermispec/hermispec.hpp"

using namespace hermispec;

namespace {

SimpleGraph random_simple(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (const auto& p : all_permutations(a.order()))
    if (a.relabeled(p) == b) return true;
  return false;
}

/// Switching classes on a connected graph counted by union-find over all Z4 gain assignments,
/// joined by single-vertex switchings and automorphisms found by brute force. A class counts when
/// some member has no -1 gain.
std::size_t brute_class_count(const SimpleGraph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.order();
  const std::size_t total = std::size_t{1} << (2 * m);
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto gain = [&](std::size_t code, int e) { return static_cast<int>((code >> (2 * e)) & 3U); };

  std::map<Edge, int> index;
  for (int e = 0; e < m; ++e) index[edges[e]] = e;
  std::vector<std::vector<int>> autos;
  for (const auto& p : all_permutations(n))
    if (g.relabeled(p) == g) autos.push_back(p);

  for (std::size_t code = 0; code < total; ++code) {
    // Multiply theta_v = i at v: the gain of (u, w), u < w, shifts by +1 if v == u and -1 if v == w.
    for (int v = 0; v < n; ++v) {
      std::size_t next = 0;
      for (int e = 0; e < m; ++e) {
        int s = gain(code, e);
        if (edges[e].first == v) s += 1;
        if (edges[e].second == v) s += 3;
        next |= static_cast<std::size_t>(s % 4) << (2 * e);
      }
      join(code, next);
    }
    for (const auto& p : autos) {
      std::size_t next = 0;
      for (int e = 0; e < m; ++e) {
        int a = p[edges[e].first];
        int b = p[edges[e].second];
        int s = gain(code, e);
        if (a > b) {
          std::swap(a, b);
          s = (4 - s) % 4;
        }
        next |= static_cast<std::size_t>(s) << (2 * index.at({a, b}));
      }
      join(code, next);
    }
  }
  std::set<std::size_t> realizable;
  for (std::size_t code = 0; code < total; ++code) {
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) ok = gain(code, e) != 2;
    if (ok) realizable.insert(find(code));
  }
  return realizable.size();
}

SearchConstraints free_order(int n) {
  SearchConstraints c;
  c.order = n;
  return c;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + iter % 9;
    const auto g = random_simple(rng, n, 0.5);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(canonical_labeling(g).certificate, canonical_labeling(g.relabeled(p)).certificate);
    EXPECT_EQ(canonical_form(g), canonical_form(g.relabeled(p)));
  }
}

TEST(Canonical, IsomorphismMatchesBruteForce) {
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 3 + iter % 4;
    const auto a = random_simple(rng, n, 0.5);
    const auto b = random_simple(rng, n, 0.5);
    EXPECT_EQ(isomorphic(a, b), brute_isomorphic(a, b));
  }
}

TEST(Canonical, AutomorphismGroupOrder) {
  std::mt19937_64 rng(83);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 2 + iter % 6;
    const auto g = random_simple(rng, n, 0.5);
    std::size_t brute = 0;
    for (const auto& p : all_permutations(n)) brute += g.relabeled(p) == g;
    const auto lab = canonical_labeling(g);
    for (const auto& gen : lab.generators) EXPECT_EQ(g.relabeled(gen), g);
    EXPECT_EQ(group_order(n, lab.generators), brute);
  }
  EXPECT_EQ(group_order(5, canonical_labeling(families::cycle(5).simple()).generators), 10u);
  EXPECT_EQ(group_order(6, canonical_labeling(families::complete(6).simple()).generators), 720u);
}

TEST(Enumerate, ConnectedGraphCounts) {
  ClassIndex index;
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (int m = n - 1; m <= n * (n - 1) / 2; ++m) total += index.connected(n, m).size();
    EXPECT_EQ(total, connected[n - 1]) << n;
  }
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(index.connected(n, n - 1).size(), trees[n - 1]) << n;
}

TEST(Enumerate, ClassCountsMatchOrbitCount) {
  ClassIndex index;
  for (int n = 2; n <= 6; ++n)
    for (int m = n - 1; m <= std::min(n * (n - 1) / 2, n <= 5 ? 9 : 8); ++m)
      for (const auto& g : index.connected(n, m))
        EXPECT_EQ(index.classes_on(g).size(), brute_class_count(g)) << "n=" << n << " m=" << m;
  std::size_t four = 0;
  std::size_t five = 0;
  for (int m = 3; m <= 6; ++m) four += index.classes(4, m).size();
  for (int m = 4; m <= 10; ++m) five += index.classes(5, m).size();
  EXPECT_EQ(four, 23u);
  EXPECT_EQ(five, 437u);
}

TEST(Enumerate, SmallFamilies) {
  SearchContext ctx;
  auto count = [&](SearchConstraints c) { return enumerate_up_to_switching(ctx, c, [](const MixedGraph&) {}); };
  auto c = free_order(3);
  c.connected = true;
  EXPECT_EQ(count(c), 4u);  // P3 and the triangle with values 1, i, -1
  const std::vector<std::size_t> forests{1, 2, 3, 6, 10, 20, 37, 76};
  for (int n = 1; n <= 8; ++n) {
    auto f = free_order(n);
    f.max_corank = 0;
    EXPECT_EQ(count(f), forests[n - 1]) << n;
  }
  auto u = free_order(4);
  u.size = 4;
  u.connected = true;
  EXPECT_EQ(count(u), 6u);
  auto d = free_order(5);
  d.max_degree = 2;
  d.size = 5;
  EXPECT_EQ(count(d), 3u);  // only C5
}

TEST(Enumerate, VisitedGraphsAreDistinct) {
  SearchContext ctx;
  std::set<GraphKey> keys;
  std::size_t visits = enumerate_up_to_switching(ctx, free_order(5), [&](const MixedGraph& g) {
    EXPECT_EQ(g.order(), 5);
    keys.insert(ctx.index().key_of(g));
  });
  EXPECT_EQ(keys.size(), visits);
}

TEST(Enumerate, ThreadCountDoesNotChangeResults) {
  auto run = [](const char* threads) {
    setenv("HERMISPEC_THREADS", threads, 1);
    ClassIndex index;
    std::vector<ClassKey> keys;
    for (const auto& c : index.classes(6, 8)) keys.push_back(c.key);
    return keys;
  };
  const auto one = run("1");
  const auto three = run("3");
  unsetenv("HERMISPEC_THREADS");
  EXPECT_EQ(one, three);
  EXPECT_FALSE(one.empty());
}

TEST(Search, ReportedMatesAreGenuine) {
  const auto reg = Registry::load(default_registry_path());
  SearchContext ctx(&reg);
  for (const std::string spec : {"P:8", "C:6", "C2:6", "P:7", "C1:9"}) {
    const auto target = parse_graph_spec(spec, &reg);
    const auto rep = find_mates(ctx, target, free_order(target.order()));
    EXPECT_TRUE(rep.exhaustive) << spec;
    EXPECT_FALSE(rep.mates.empty()) << spec;
    for (const auto& m : rep.mates) {
      EXPECT_TRUE(cospectral(target, m.graph)) << spec << " / " << m.name;
      EXPECT_FALSE(ctx.index().equivalent(target, m.graph)) << spec << " / " << m.name;
      EXPECT_FALSE(ctx.index().equivalent(target, m.graph.converse())) << spec << " / " << m.name;
      EXPECT_EQ(m.graph.size(), target.size());
    }
  }
  const auto p8 = find_mates(ctx, families::path(8), free_order(8));
  ASSERT_EQ(p8.mates.size(), 1u);
  EXPECT_EQ(p8.mates[0].name, "P:2 + (o)");
  EXPECT_EQ(find_mates(ctx, families::cycle(6), free_order(6)).mates.size(), 3u);
}

TEST(Search, MateCountsMatchGroupingByCharPoly) {
  SearchContext ctx;
  for (int n = 1; n <= 5; ++n) {
    std::vector<MixedGraph> all;
    enumerate_up_to_switching(ctx, free_order(n), [&](const MixedGraph& g) { all.push_back(g); });
    // Classes with the same polynomial, with a class and its converse counted once.
    std::map<IntPolynomial, std::set<GraphKey>> groups;
    for (const auto& g : all) {
      const auto k = ctx.index().key_of(g);
      const auto kc = ctx.index().key_of(g.converse());
      groups[char_poly_exact(g)].insert(std::min(k, kc));
    }
    for (const auto& g : all) {
      const auto rep = find_mates(ctx, g, free_order(n));
      EXPECT_EQ(rep.mates.size() + 1, groups[char_poly_exact(g)].size()) << graph_to_json(g).dump();
      const auto verdict = is_dhs(ctx, g, free_order(n)).verdict;
      EXPECT_EQ(verdict == Verdict::DHS, groups[char_poly_exact(g)].size() == 1);
    }
  }
}

TEST(Search, FreeModeStopsAtItsCap) {
  SearchContext ctx;
  const auto r = is_dhs(ctx, families::path(11), free_order(11));
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_THROW(find_mates(ctx, families::path(11), free_order(11)), GuardExceeded);
}

TEST(Search, GuidedModeIsNotExhaustive) {
  const auto reg = Registry::load(default_registry_path());
  SearchContext ctx(&reg);
  SearchConstraints c;
  c.mode = SearchMode::Guided;
  c.max_order = SearchConstraints::kGuidedMaxOrder;
  const auto rep = find_mates(ctx, families::path(13), c);
  EXPECT_FALSE(rep.exhaustive);
  EXPECT_TRUE(rep.catalog_complete);
  EXPECT_FALSE(rep.mates.empty());
  for (const auto& m : rep.mates) EXPECT_TRUE(cospectral(families::path(13), m.graph));
  c.whitelist = {"Q"};
  EXPECT_THROW(find_mates(ctx, families::path(13), c), InvalidArgument);
}

TEST(Reconstruct, LetterShapesMatchRegistry) {
  const auto reg = Registry::load(default_registry_path());
  for (char l : admissible_letters()) {
    const auto g = reg.get(std::string(1, l));
    const auto [n, m] = letter_shape(l);
    EXPECT_EQ(g.order(), n) << l;
    EXPECT_EQ(g.size(), m) << l;
    EXPECT_TRUE(letter_structure_ok(l, g)) << l;
  }
}

TEST(Reconstruct, SmallLettersAreUnique) {
  const auto reg = Registry::load(default_registry_path());
  ClassIndex index;
  for (char l : {'k', 'o', 'y'}) {
    const auto r = reconstruct_letter(index, l);
    ASSERT_EQ(r.selected.size(), 1u) << l;
    EXPECT_TRUE(index.equivalent(r.selected[0], reg.get(std::string(1, l)))) << l;
    EXPECT_GE(r.spectral_matches, r.selected.size());
  }
}

TEST(OutCampaign, ThetaFamiliesAreOut) {
  ClassIndex index;
  for (const auto& f : out_campaign_families()) {
    if (f.rfind("theta:", 0) != 0) continue;
    const auto r = replicate_out_campaign(index, f);
    EXPECT_TRUE(r.passed()) << f;
    EXPECT_GT(r.classes, 0u);
  }
  const auto d = replicate_out_campaign(index, "deg4-order5");
  EXPECT_TRUE(d.passed());
  EXPECT_TRUE(replicate_out_campaign(index, "drawn-only").skipped);
  EXPECT_THROW(replicate_out_campaign(index, "nope"), InvalidArgument);
}

TEST(OutCampaign, CompleteGraphOnFourVerticesHasOneInnerClass) {
  ClassIndex index;
  const auto r = replicate_out_campaign(index, "K4");
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.classes, r.out + 1);
  // A vertex joined to a directed triangle: H^2 = 3I.
  const auto witness = MixedGraph::build(4, {{0, 1}, {0, 2}, {0, 3}}, {{1, 2}, {2, 3}, {3, 1}});
  EXPECT_TRUE(index.equivalent(r.counterexamples[0], witness));
  EXPECT_EQ(char_poly_exact(witness), int_poly({9, 0, -6, 0, 1}));
  EXPECT_FALSE(is_out(witness));
}
