#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "kmetric/error.hpp"
#include "kmetric/kmetric.hpp"
#include "kmetric/multicover.hpp"
#include "support/corpus.hpp"

using namespace kmetric;

TEST(WorkedExample, P3HasTwoMetricBasisV1V3) {
  auto dm = all_pairs_distances(make_path(3));
  auto inst = build_instance_full(dm, 2);
  // Rows in pair order (0,1), (0,2), (1,2).
  EXPECT_EQ(inst.rows, (std::vector<std::vector<int>>{{0, 1, 2}, {0, 2}, {0, 1, 2}}));
  auto r = dim_k(make_path(3), 2);
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 2);
  EXPECT_EQ(r.basis, (std::vector<int>{0, 2}));
  EXPECT_TRUE(r.optimal);
}

TEST(Representation, P3) {
  auto dm = all_pairs_distances(make_path(3));
  std::vector<Vertex> s{0, 2};
  EXPECT_EQ(representation(dm, 1, s), (std::vector<int>{1, 1}));
  EXPECT_EQ(representation(dm, 0, s), (std::vector<int>{0, 2}));
}

TEST(Distinguishers, PathAndCycle) {
  auto dp = all_pairs_distances(make_path(3));
  EXPECT_EQ(distinguishers(dp, 0, 2), (std::vector<Vertex>{0, 2}));
  EXPECT_THROW(distinguishers(dp, 1, 1), Error);
  // Antipodal vertices of C_4 are told apart only by themselves.
  auto dc = all_pairs_distances(make_cycle(4));
  EXPECT_EQ(distinguishers(dc, 0, 2), (std::vector<Vertex>{0, 2}));
}

TEST(MaxK, SmallFamilies) {
  EXPECT_EQ(max_k(all_pairs_distances(make_path(3))), 2);
  EXPECT_EQ(max_k(all_pairs_distances(make_complete(4))), 2);
  EXPECT_EQ(max_k(all_pairs_distances(make_path(1))), std::nullopt);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(max_k(all_pairs_distances(make_complete(n))), 2);
}

// max_k equals the minimum distinguisher count, computed here pair by pair.
TEST(MaxK, MatchesPairwiseMinimum) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = corpus::random_connected(rng, 2, 12);
    auto dm = all_pairs_distances(g);
    int best = g.n();
    for (auto [u, v] : all_pairs(g.n()))
      best = std::min(best, static_cast<int>(distinguishers(dm, u, v).size()));
    EXPECT_EQ(max_k(dm), best);
  }
}

TEST(Identities, CompleteGraphs) {
  for (int n = 3; n <= 6; ++n) {
    auto r = dim_k(make_complete(n), 2);
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, n);
    EXPECT_TRUE(dim_k(make_complete(n), 3).infinite());
  }
}

TEST(Identities, Paths) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(dim_k(make_path(n), 2).value, 2) << n;
    EXPECT_EQ(dim_k(make_path(n), 1).value, 1) << n;
    EXPECT_EQ(dim_k_rooted(make_rooted(make_path(n), {0}), 2).value, 0) << n;
    EXPECT_EQ(dim_k_rooted(make_rooted(make_path(n), {n - 1}), 2).value, 0) << n;
  }
}

TEST(Identities, SingleVertexAndInfinity) {
  auto r = dim_k(make_path(1), 1);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.basis.empty());
  EXPECT_TRUE(dim_k(make_complete(4), 3).infinite());
}

TEST(DimK, RejectsBadK) {
  EXPECT_THROW(dim_k(make_path(3), 0), Error);
  EXPECT_THROW(dim_k_rooted(make_rooted(make_path(3), {0}), -1), Error);
}

TEST(Spheres, CycleRootedAtOneVertex) {
  auto rg = make_rooted(make_cycle(6), {0});
  auto dm = all_pairs_distances(rg.graph);
  auto s = spheres(rg, dm);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].members, (std::vector<Vertex>{1, 5}));
  EXPECT_EQ(s[2].members, (std::vector<Vertex>{3}));
  EXPECT_EQ(sphere_pairs(rg, dm), (std::vector<VertexPair>{{1, 5}, {2, 4}}));
}

TEST(Properties, BasisIsGeneratorAndSupersetsAre) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = corpus::random_connected(rng, 2, 9);
    auto dm = all_pairs_distances(g);
    int limit = *max_k(dm);
    for (int k = 1; k <= limit; ++k) {
      auto r = dim_k(g, k);
      ASSERT_TRUE(r.value);
      EXPECT_EQ(static_cast<int>(r.basis.size()), *r.value);
      EXPECT_TRUE(is_k_generator(dm, r.basis, k));
      auto bigger = r.basis;
      for (Vertex v = 0; v < g.n(); ++v)
        if (std::find(bigger.begin(), bigger.end(), v) == bigger.end()) {
          bigger.push_back(v);
          std::sort(bigger.begin(), bigger.end());
          EXPECT_TRUE(is_k_generator(dm, bigger, k));
          break;
        }
    }
  }
}

TEST(Properties, MonotoneInKAndRootedBelowFull) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = corpus::random_connected(rng, 2, 9);
    auto rg = make_rooted(g, corpus::random_roots(rng, g));
    int limit = *max_k(all_pairs_distances(g));
    int previous = 0;
    for (int k = 1; k <= limit; ++k) {
      int full = *dim_k(g, k).value;
      EXPECT_GE(full, previous);
      EXPECT_GE(full, k);
      previous = full;
      auto rooted = dim_k_rooted(rg, k);
      ASSERT_TRUE(rooted.value);
      EXPECT_LE(*rooted.value, full);
    }
    EXPECT_TRUE(dim_k(g, limit + 1).infinite());
  }
}

TEST(Determinism, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = corpus::random_connected(rng, 20, 30);
    int limit = *max_k(all_pairs_distances(g));
    for (int k = 1; k <= std::min(limit, 3); ++k) {
      auto one = dim_k(g, k, {.threads = 1});
      auto four = dim_k(g, k, {.threads = 4});
      EXPECT_EQ(one.value, four.value);
      EXPECT_EQ(one.basis, four.basis);
    }
  }
}

// Independent check of the multicover solver: enumerate all column subsets.
namespace {

std::optional<int> brute_multicover(const MulticoverInstance& inst) {
  std::optional<int> best;
  for (unsigned mask = 0; mask < (1u << inst.universe_size); ++mask) {
    bool ok = true;
    for (const auto& row : inst.rows) {
      int hit = 0;
      for (int c : row) hit += (mask >> c) & 1u;
      if (hit < inst.demand) {
        ok = false;
        break;
      }
    }
    int size = __builtin_popcount(mask);
    if (ok && (!best || size < *best)) best = size;
  }
  return best;
}

}  // namespace

TEST(Multicover, RandomInstancesAgainstEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    MulticoverInstance inst;
    inst.universe_size = 1 + static_cast<int>(rng() % 12);
    inst.demand = 1 + static_cast<int>(rng() % 3);
    int rows = static_cast<int>(rng() % 15);
    for (int r = 0; r < rows; ++r) {
      std::vector<int> row;
      for (int c = 0; c < inst.universe_size; ++c)
        if (rng() % 3 == 0) row.push_back(c);
      inst.rows.push_back(row);
    }
    auto expected = brute_multicover(inst);
    for (bool prune : {true, false}) {
      auto got = solve_exact(inst, {.prune_dominated = prune});
      EXPECT_EQ(got.value, expected) << dump_instance(inst);
    }
  }
}

TEST(Multicover, DominatedRowsArePruned) {
  MulticoverInstance inst{5, 1, {{0, 1}, {0, 1, 2}, {0, 1}, {3}, {3, 4}}};
  auto r = solve_exact(inst);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.basis, (std::vector<int>{0, 3}));
  EXPECT_EQ(r.stats.rows, 2);
  EXPECT_EQ(r.stats.pruned, 3);
}

TEST(Multicover, InfeasibleAndEmpty) {
  EXPECT_TRUE(solve_exact({3, 2, {{0, 1}, {2}}}).infinite());
  EXPECT_EQ(solve_exact({3, 2, {}}).value, 0);
  EXPECT_THROW(solve_exact({2, 1, {{0, 5}}}), Error);
}

TEST(Multicover, NodeLimitReportsNonOptimal) {
  std::mt19937_64 rng(14);
  Graph g = corpus::random_connected(rng, 40, 0.15);
  auto r = dim_k(g, 1, {.node_limit = 1});
  if (!r.optimal) {
    ASSERT_TRUE(r.value);
    EXPECT_TRUE(is_k_generator(all_pairs_distances(g), r.basis, 1));
  }
  auto full = dim_k(g, 1);
  EXPECT_TRUE(full.optimal);
  EXPECT_LE(*full.value, *r.value);
}

TEST(Multicover, DumpParseRoundTrip) {
  auto inst = build_instance_full(all_pairs_distances(make_cycle(6)), 2);
  EXPECT_EQ(parse_instance(dump_instance(inst)), inst);
  EXPECT_THROW(parse_instance("3 1"), Error);
  EXPECT_THROW(parse_instance("3 1 1\n2 0\n"), Error);
}

TEST(Timing, WorkedExampleIsFast) {
  auto start = std::chrono::steady_clock::now();
  auto r = dim_k(make_path(3), 2);
  std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(r.value, 2);
  EXPECT_LT(elapsed.count(), 1.0);
}
