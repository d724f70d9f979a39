#include <gtest/gtest.h>

#include <random>

#include "kmetric/error.hpp"
#include "kmetric/kmetric.hpp"
#include "kmetric/oracle.hpp"
#include "support/corpus.hpp"

using namespace kmetric;

TEST(Oracle, WorkedExample) {
  auto r = oracle_dim(make_path(3), 2);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.basis, (std::vector<int>{0, 2}));
}

TEST(Oracle, InfiniteWhenFullSetFails) {
  EXPECT_TRUE(oracle_dim(make_complete(4), 3).infinite());
}

TEST(Oracle, RefusesLargeGraphs) {
  try {
    oracle_dim(make_path(20), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimitExceeded);
  }
  EXPECT_NO_THROW(oracle_dim(make_path(20), 1, 20));
}

// The solver returns the lexicographically first optimal basis, which is
// what the size-then-lexicographic enumeration finds first.
TEST(Oracle, SolverAgreesOnCatalogUpToSix) {
  for (const auto& g : corpus::connected_catalog(6)) {
    auto dm = all_pairs_distances(g);
    int limit = max_k(dm).value_or(1);
    for (int k = 1; k <= limit + 1; ++k) {
      auto expected = oracle_dim(g, k);
      auto got = dim_k(g, k);
      ASSERT_EQ(got.value, expected.value) << "n=" << g.n() << " k=" << k;
      EXPECT_EQ(got.basis, expected.basis);
    }
  }
}

TEST(Oracle, RootedAgreesOnRandomGraphs) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = corpus::random_connected(rng, 2, 10);
    auto rg = make_rooted(g, corpus::random_roots(rng, g));
    int limit = *max_k(all_pairs_distances(g));
    for (int k = 1; k <= limit + 1; ++k) {
      auto expected = oracle_dim(rg, k);
      auto got = dim_k_rooted(rg, k);
      ASSERT_EQ(got.value, expected.value);
      EXPECT_EQ(got.basis, expected.basis);
    }
  }
}
