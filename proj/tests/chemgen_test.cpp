#include <gtest/gtest.h>

#include "kmetric/chemgen.hpp"
#include "kmetric/error.hpp"

using namespace kmetric;

namespace {

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace

TEST(Nanotube, SingleBelt) {
  auto f = nanotube(4, 1);
  EXPECT_EQ(f.graph.n(), 16);
  EXPECT_EQ(f.graph.num_edges(), 20u);
  EXPECT_EQ(max_degree(f.graph), 3);
}

// 2^q rings of 2p edges plus p rungs between consecutive rings.
TEST(Nanotube, RingAndRungCounts) {
  for (int p = 2; p <= 6; ++p)
    for (int q = 1; q <= 4; ++q) {
      auto t = nanotube(p, q);
      int rings = 1 << q;
      EXPECT_EQ(t.graph.n(), rings * 2 * p);
      EXPECT_EQ(t.graph.num_edges(), static_cast<std::size_t>(rings * 2 * p + (rings - 1) * p));
      EXPECT_LE(max_degree(t.graph), 3);
    }
}

// In a zigzag tube every vertex has degree 3 except the free rim, where half
// the vertices have degree 2.
TEST(Nanotube, DegreeProfile) {
  auto t = nanotube(5, 3);
  int two = 0;
  for (Vertex v = 0; v < t.graph.n(); ++v) two += t.graph.degree(v) == 2;
  EXPECT_EQ(two, 2 * 5);
}

TEST(Nanotube, StageRootOverrides) {
  StageRoots roots{{1, 3, 5, 7}, {0, 2, 4, 6}};
  auto t = nanotube(4, 2, roots);
  EXPECT_EQ(t.graph.n(), 32);
  EXPECT_THROW(nanotube(4, 2, {{1, 3, 5, 7}}), Error);
  EXPECT_THROW(nanotube(1, 1), Error);
}

TEST(Polyhex, RowSizes) {
  auto g12 = polyhex_row(2);
  EXPECT_EQ(g12.graph.n(), 14);
  EXPECT_EQ(g12.graph.num_edges(), 15u);
  auto g13 = polyhex_row(3);
  EXPECT_EQ(g13.graph.n(), 18);
  EXPECT_EQ(g13.graph.num_edges(), 20u);
  EXPECT_THROW(polyhex_row(0), Error);
}

// p hexagons in a row leave four pendant vertices.
TEST(Polyhex, PendantsAndDegrees) {
  for (int p = 1; p <= 6; ++p) {
    auto g = polyhex_row(p).graph;
    int leaves = 0;
    for (Vertex v = 0; v < g.n(); ++v) leaves += g.degree(v) == 1;
    EXPECT_EQ(leaves, 4);
    EXPECT_EQ(max_degree(g), 3);
    // Cyclomatic number counts the hexagons.
    EXPECT_EQ(static_cast<int>(g.num_edges()) - g.n() + 1, p);
  }
}

TEST(Polyhex, StackLevels) {
  EXPECT_EQ(polyhex_stack(2, 1).graph, polyhex_row(2).graph);
  EXPECT_EQ(polyhex_stack(2, 3).graph.n(), 28);
  EXPECT_EQ(polyhex_stack(2, 7).graph.n(), 56);
  EXPECT_THROW(polyhex_stack(2, 2), Error);
  EXPECT_THROW(polyhex_stack(2, 0), Error);
}

TEST(Armchair, SizeForSeven) {
  auto a = armchair(7);
  EXPECT_EQ(a.graph.n(), 136);
  EXPECT_LE(max_degree(a.graph), 3);
}

TEST(BridgeUniform, CycleOfFour) {
  Graph b = bridge_path_uniform(make_cycle(4), 0, 3);
  EXPECT_EQ(b.n(), 12);
  EXPECT_EQ(b.num_edges(), 14u);
  EXPECT_EQ(bridge_path_uniform(make_cycle(4), 0, 1), make_cycle(4));
  EXPECT_THROW(bridge_path_uniform(make_cycle(4), 0, 0), Error);
}
