#pragma once

// Hexagonal chemical graph families built as iterated hierarchical products
// with P_2.
//
// Stage 0 joins two copies of a base graph (C_2p or P_{2p+3}) above the
// base roots. Every later stage doubles the current graph and joins the two
// copies along a rim. The two free rims of the current graph are tracked as
// images of the base vertices; by default the join uses the "top" rim at
// base positions 0, 2, 4, ... (v_1, v_3, ... in 1-based terms), which are
// exactly its degree-2 vertices, so each stage adds one hexagon belt on
// each side of the seam. Every stage's root set can be overridden.

#include <optional>
#include <string>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/products.hpp"

namespace kmetric {

// Explicit per-stage root sets; stage 0 is the base graph's root set.
using StageRoots = std::vector<std::vector<Vertex>>;

namespace detail {

inline std::vector<Vertex> odd_positions(int count) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v < count; v += 2) out.push_back(v);
  return out;
}

inline ProductGraph iterate_doubling(const Graph& base, std::vector<Vertex> base_roots, int stages,
                                     const StageRoots& overrides) {
  if (!overrides.empty() && static_cast<int>(overrides.size()) != stages)
    throw Error(ErrorCode::kBadRootSet, "expected " + std::to_string(stages) +
                                            " per-stage root sets, got " +
                                            std::to_string(overrides.size()));
  const Graph p2 = make_path(2);
  const int nb = base.n();

  auto roots_for = [&](int stage, std::vector<Vertex> fallback) {
    return overrides.empty() ? std::move(fallback) : overrides[stage];
  };

  ProductGraph current =
      hierarchical_product(make_rooted(base, roots_for(0, std::move(base_roots))), p2);
  std::vector<Vertex> rim_bottom(nb), rim_top(nb);
  for (Vertex g = 0; g < nb; ++g) {
    rim_bottom[g] = current.index_of(g, 0);
    rim_top[g] = current.index_of(g, 1);
  }

  for (int stage = 1; stage < stages; ++stage) {
    std::vector<Vertex> seam;
    for (Vertex g = 0; g < nb; g += 2) seam.push_back(rim_top[g]);
    ProductGraph next =
        hierarchical_product(make_rooted(current.graph, roots_for(stage, std::move(seam))), p2);
    for (Vertex g = 0; g < nb; ++g) {
      rim_top[g] = next.index_of(rim_bottom[g], 1);
      rim_bottom[g] = next.index_of(rim_bottom[g], 0);
    }
    current = std::move(next);
  }
  return current;
}

inline int doubling_stages(int levels) {
  if (levels < 1 || ((levels + 1) & levels) != 0 || levels > (1 << 20))
    throw Error(ErrorCode::kOutOfRange,
                "levels must have the form 2^j - 1, got " + std::to_string(levels));
  int stages = 0;
  for (int x = levels + 1; x > 1; x >>= 1) ++stages;
  return stages;
}

}  // namespace detail

// Zigzag nanotube with 2^q rings of 2p vertices: C_2p with roots v_2, v_4,
// ..., v_2p, then q - 1 rim doublings.
inline ProductGraph nanotube(int p, int q, const StageRoots& roots = {}) {
  if (p < 2 || q < 1 || q > 20)
    throw Error(ErrorCode::kOutOfRange, "nanotube needs p >= 2 and 1 <= q <= 20");
  return detail::iterate_doubling(make_cycle(2 * p), detail::odd_positions(2 * p), q, roots);
}

// One row of p hexagons with two pendant vertices on each level:
// P_{2p+3} rooted at every even position v_2, v_4, ..., v_{2p+2}, times P_2.
inline ProductGraph polyhex_row(int p) {
  if (p < 1) throw Error(ErrorCode::kOutOfRange, "polyhex row needs p >= 1");
  return detail::iterate_doubling(make_path(2 * p + 3), detail::odd_positions(2 * p + 3), 1, {});
}

// `levels` hexagon rows (1, 3, 7, ...) by rim doubling of polyhex_row(p).
inline ProductGraph polyhex_stack(int p, int levels, const StageRoots& roots = {}) {
  if (p < 1) throw Error(ErrorCode::kOutOfRange, "polyhex stack needs p >= 1");
  return detail::iterate_doubling(make_path(2 * p + 3), detail::odd_positions(2 * p + 3),
                                  detail::doubling_stages(levels), roots);
}

// polyhex_stack(p, levels) doubled once more along its top rim;
// armchair(7) has 136 vertices.
inline ProductGraph armchair(int p, int levels = 3, const StageRoots& roots = {}) {
  if (p < 1) throw Error(ErrorCode::kOutOfRange, "armchair needs p >= 1");
  return detail::iterate_doubling(make_path(2 * p + 3), detail::odd_positions(2 * p + 3),
                                  detail::doubling_stages(levels) + 1, roots);
}

// d copies of (g, u) with consecutive roots bridged. Checks the result
// against G(u) ⊓ P_d through the explicit bijection before returning.
inline Graph bridge_path_uniform(const Graph& g, Vertex u, int d) {
  if (d < 1) throw Error(ErrorCode::kEmptyList, "bridge path needs d >= 1");
  std::vector<std::pair<Graph, Vertex>> parts(d, {g, u});
  Graph bridge = bridge_path(parts);
  auto product = hierarchical_product(make_rooted(g, {u}), make_path(d));
  if (!bridge_path_matches_hierarchical(bridge, product))
    throw std::logic_error("bridge path does not match G(u) x P_d");
  return bridge;
}

}  // namespace kmetric
