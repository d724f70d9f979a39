#pragma once

// Hierarchical, splice, link and bridge-path products.
//
// The hierarchical product G(U) ⊓ H has vertex set V(G) x V(H). Every
// H-coordinate carries a full copy of G; H-edges are present only above the
// roots U. Pair (g, h) lives at index g * n(H) + h.

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

struct RootedGraph {
  Graph graph;
  std::vector<Vertex> roots;  // sorted, unique, nonempty
};

// Sorts and deduplicates roots. Throws kBadRootSet on an empty set or an
// index outside the graph.
inline RootedGraph make_rooted(Graph g, std::vector<Vertex> roots) {
  if (roots.empty()) throw Error(ErrorCode::kBadRootSet, "root set is empty");
  for (Vertex u : roots)
    if (u < 0 || u >= g.n())
      throw Error(ErrorCode::kBadRootSet, "root " + std::to_string(u) + " outside graph of order " +
                                              std::to_string(g.n()));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return RootedGraph{std::move(g), std::move(roots)};
}

struct ProductGraph {
  Graph graph;
  int left_order = 0;   // n(G)
  int right_order = 0;  // n(H)

  Vertex index_of(Vertex g, Vertex h) const { return g * right_order + h; }
  std::pair<Vertex, Vertex> pair_of(Vertex v) const {
    return {v / right_order, v % right_order};
  }
};

// Length of a shortest g,g2-walk that meets the root set. The walk may touch
// U at one of its ends.
inline int through_root_distance(const RootedGraph& rg, const DistanceMatrix& dm, Vertex g,
                                 Vertex g2) {
  int best = std::numeric_limits<int>::max();
  for (Vertex u : rg.roots) best = std::min(best, dm(g, u) + dm(u, g2));
  return best;
}

inline ProductGraph hierarchical_product(const RootedGraph& rg, const Graph& h) {
  const Graph& g = rg.graph;
  const int ng = g.n(), nh = h.n();
  ProductGraph out{{}, ng, nh};

  std::vector<Edge> edges;
  edges.reserve(g.num_edges() * nh + rg.roots.size() * h.num_edges());
  const auto g_edges = g.edges();
  const auto h_edges = h.edges();
  for (Vertex y = 0; y < nh; ++y)
    for (auto [a, b] : g_edges) edges.emplace_back(out.index_of(a, y), out.index_of(b, y));
  for (Vertex u : rg.roots)
    for (auto [y1, y2] : h_edges) edges.emplace_back(out.index_of(u, y1), out.index_of(u, y2));

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(ng) * nh);
  for (Vertex x = 0; x < ng; ++x)
    for (Vertex y = 0; y < nh; ++y) labels.push_back("(" + g.label(x) + "," + h.label(y) + ")");

  out.graph = build_graph(ng * nh, edges, std::move(labels));
  return out;
}

// Closed-form distance in G(U) ⊓ H from the factor distance matrices:
// plain d_G inside one G-layer, otherwise through-root distance plus d_H.
inline int hierarchical_distance(const RootedGraph& rg, const DistanceMatrix& dm_g,
                                 const DistanceMatrix& dm_h, std::pair<Vertex, Vertex> p,
                                 std::pair<Vertex, Vertex> q) {
  if (p.second == q.second) return dm_g(p.first, q.first);
  return through_root_distance(rg, dm_g, p.first, q.first) + dm_h(p.second, q.second);
}

namespace detail {

inline void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.n())
    throw Error(ErrorCode::kIndexOutOfRange,
                std::string(what) + " " + std::to_string(v) + " outside graph of order " +
                    std::to_string(g.n()));
}

}  // namespace detail

// Identifies a ∈ G with b ∈ H. G keeps indices 0..n(G)-1 (the merged vertex
// is a); the vertices of H other than b follow in H's order.
inline Graph splice(const Graph& g, Vertex a, const Graph& h, Vertex b) {
  detail::check_vertex(g, a, "splice vertex");
  detail::check_vertex(h, b, "splice vertex");
  const int ng = g.n();
  auto map_h = [&](Vertex y) { return y == b ? a : ng + (y < b ? y : y - 1); };
  std::vector<Edge> edges = g.edges();
  for (auto [y1, y2] : h.edges()) edges.emplace_back(map_h(y1), map_h(y2));
  return build_graph(ng + h.n() - 1, edges);
}

// Disjoint union of G and H (H shifted by n(G)) plus the edge ab.
inline Graph link(const Graph& g, Vertex a, const Graph& h, Vertex b) {
  detail::check_vertex(g, a, "link vertex");
  detail::check_vertex(h, b, "link vertex");
  const int ng = g.n();
  std::vector<Edge> edges = g.edges();
  for (auto [y1, y2] : h.edges()) edges.emplace_back(ng + y1, ng + y2);
  edges.emplace_back(a, ng + b);
  return build_graph(ng + h.n(), edges);
}

// Disjoint union of the parts in order, plus bridges r_i r_{i+1}.
inline Graph bridge_path(const std::vector<std::pair<Graph, Vertex>>& parts) {
  if (parts.empty()) throw Error(ErrorCode::kEmptyList, "bridge path needs at least one part");
  std::vector<Edge> edges;
  int offset = 0;
  Vertex previous_root = -1;
  for (const auto& [part, root] : parts) {
    detail::check_vertex(part, root, "bridge root");
    for (auto [x, y] : part.edges()) edges.emplace_back(offset + x, offset + y);
    if (previous_root >= 0) edges.emplace_back(previous_root, offset + root);
    previous_root = offset + root;
    offset += part.n();
  }
  return build_graph(offset, edges);
}

// Checks edge-by-edge that (g, h_j) ↦ (copy j, vertex g) maps
// G(u) ⊓ P_d onto the bridge path of d copies of (G, u).
inline bool bridge_path_matches_hierarchical(const Graph& bridge, const ProductGraph& product) {
  const int n = product.left_order;
  if (bridge.n() != product.graph.n() || bridge.num_edges() != product.graph.num_edges())
    return false;
  auto to_bridge = [&](Vertex v) {
    auto [g, j] = product.pair_of(v);
    return j * n + g;
  };
  for (auto [x, y] : product.graph.edges())
    if (!bridge.has_edge(to_bridge(x), to_bridge(y))) return false;
  return true;
}

}  // namespace kmetric
