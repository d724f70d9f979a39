#include <gtest/gtest.h>

#include <random>

#include "kmetric/error.hpp"
#include "kmetric/products.hpp"
#include "support/corpus.hpp"

using namespace kmetric;

TEST(MakeRooted, SortsAndDedupes) {
  auto rg = make_rooted(make_path(5), {3, 1, 3});
  EXPECT_EQ(rg.roots, (std::vector<Vertex>{1, 3}));
}

TEST(MakeRooted, RejectsBadRoots) {
  EXPECT_THROW(make_rooted(make_path(3), {}), Error);
  EXPECT_THROW(make_rooted(make_path(3), {3}), Error);
  try {
    make_rooted(make_path(3), {-1});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadRootSet);
  }
}

TEST(Hierarchical, OrderAndSize) {
  // |E| = n(H)|E(G)| + |U||E(H)|
  auto prod = hierarchical_product(make_rooted(make_cycle(8), {1, 3, 5, 7}), make_path(2));
  EXPECT_EQ(prod.graph.n(), 16);
  EXPECT_EQ(prod.graph.num_edges(), 2u * 8u + 4u * 1u);
  EXPECT_EQ(prod.index_of(3, 1), 7);
  EXPECT_EQ(prod.pair_of(7), (std::pair<Vertex, Vertex>{3, 1}));
}

TEST(Hierarchical, EdgeCountsRandom) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = corpus::random_connected(rng, 1, 8);
    Graph h = corpus::random_connected(rng, 1, 5);
    auto rg = make_rooted(g, corpus::random_roots(rng, g));
    auto prod = hierarchical_product(rg, h);
    EXPECT_EQ(prod.graph.n(), g.n() * h.n());
    EXPECT_EQ(prod.graph.num_edges(), h.n() * g.num_edges() + rg.roots.size() * h.num_edges());
  }
}

TEST(Hierarchical, Labels) {
  auto prod = hierarchical_product(make_rooted(make_path(2), {0}), make_path(2));
  EXPECT_EQ(prod.graph.label(1), "(0,1)");
  EXPECT_EQ(prod.graph.label(2), "(1,0)");
}

TEST(Hierarchical, SingleRootedPathTimesPathIsTree) {
  // P_3 rooted at its middle times P_3 is a tree on 9 vertices.
  auto prod = hierarchical_product(make_rooted(make_path(3), {1}), make_path(3));
  EXPECT_EQ(prod.graph.num_edges(), 8u);
}

TEST(Hierarchical, DistanceFormulaOnRandomInstances) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = corpus::random_connected(rng, 1, 8);
    Graph h = corpus::random_connected(rng, 1, 5);
    auto rg = make_rooted(g, corpus::random_roots(rng, g));
    auto prod = hierarchical_product(rg, h);
    auto dg = all_pairs_distances(g), dh = all_pairs_distances(h);
    auto dx = all_pairs_distances(prod.graph);
    for (Vertex x = 0; x < prod.graph.n(); ++x)
      for (Vertex y = 0; y < prod.graph.n(); ++y)
        ASSERT_EQ(hierarchical_distance(rg, dg, dh, prod.pair_of(x), prod.pair_of(y)), dx(x, y));
  }
}

TEST(Splice, TwoEdgesMakeP3) {
  Graph g = splice(make_path(2), 1, make_path(2), 0);
  EXPECT_EQ(g, make_path(3));
}

TEST(Splice, MergedVertexKeepsLeftIndex) {
  Graph g = splice(make_path(3), 0, make_cycle(4), 2);
  EXPECT_EQ(g.n(), 6);
  EXPECT_EQ(g.num_edges(), 2u + 4u);
  EXPECT_EQ(g.degree(0), 3);  // end of P_3 plus two cycle neighbours
}

TEST(Link, AddsBridge) {
  Graph g = link(make_path(2), 1, make_path(2), 0);
  EXPECT_EQ(g, make_path(4));
  EXPECT_THROW(link(make_path(2), 2, make_path(2), 0), Error);
}

TEST(BridgePath, Sizes) {
  Graph b = bridge_path({{make_cycle(4), 0}, {make_cycle(4), 0}, {make_cycle(4), 0}});
  EXPECT_EQ(b.n(), 12);
  EXPECT_EQ(b.num_edges(), 14u);
  EXPECT_THROW(bridge_path({}), Error);
}

TEST(BridgePath, MatchesHierarchicalWithPath) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = corpus::random_connected(rng, 1, 7);
    Vertex u = static_cast<Vertex>(rng() % g.n());
    int d = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<Graph, Vertex>> parts(d, {g, u});
    Graph bridge = bridge_path(parts);
    auto prod = hierarchical_product(make_rooted(g, {u}), make_path(d));
    EXPECT_TRUE(bridge_path_matches_hierarchical(bridge, prod));
  }
}

TEST(BridgePath, DetectsWrongRoot) {
  Graph g = make_path(3);
  Graph bridge = bridge_path({{g, 0}, {g, 0}});
  auto prod = hierarchical_product(make_rooted(g, {1}), make_path(2));
  EXPECT_FALSE(bridge_path_matches_hierarchical(bridge, prod));
}
