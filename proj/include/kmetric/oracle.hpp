#pragma once

// Exhaustive reference for dim_k: scans vertex subsets by increasing size,
// lexicographically within a size, and returns the first k-metric
// generator. Shares no code with the branch-and-bound path; pair families
// and distinguisher counts are recomputed here from the distance matrix.

#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/multicover.hpp"
#include "kmetric/products.hpp"

namespace kmetric {

inline constexpr int kDefaultOracleLimit = 16;

namespace detail {

inline DimResult oracle_search(const DistanceMatrix& dm,
                               const std::vector<std::pair<Vertex, Vertex>>& pairs, int k,
                               int limit) {
  const int n = dm.n();
  if (n > limit)
    throw Error(ErrorCode::kSizeLimitExceeded,
                "oracle limited to " + std::to_string(limit) + " vertices, got " + std::to_string(n));
  DimResult result;
  result.k = k;
  result.optimal = true;
  result.stats.rows = static_cast<int>(pairs.size());

  auto generates = [&](const std::vector<Vertex>& set) {
    for (auto [x, y] : pairs) {
      int hits = 0;
      for (Vertex w : set)
        if (dm(w, x) != dm(w, y)) ++hits;
      if (hits < k) return false;
    }
    return true;
  };

  std::vector<Vertex> everything(n);
  for (Vertex v = 0; v < n; ++v) everything[v] = v;
  if (!generates(everything)) return result;

  for (int size = 0; size <= n; ++size) {
    std::vector<Vertex> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      ++result.stats.nodes;
      if (generates(combo)) {
        result.value = size;
        result.basis = combo;
        return result;
      }
      int i = size - 1;
      while (i >= 0 && combo[i] == n - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return result;  // unreachable: V itself generates
}

}  // namespace detail

inline DimResult oracle_dim(const Graph& g, int k, int limit = kDefaultOracleLimit) {
  auto dm = all_pairs_distances(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < g.n(); ++x)
    for (Vertex y = x + 1; y < g.n(); ++y) pairs.emplace_back(x, y);
  return detail::oracle_search(dm, pairs, k, limit);
}

inline DimResult oracle_dim(const RootedGraph& rg, int k, int limit = kDefaultOracleLimit) {
  auto dm = all_pairs_distances(rg.graph);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < dm.n(); ++x)
    for (Vertex y = x + 1; y < dm.n(); ++y)
      for (Vertex u : rg.roots)
        if (dm(u, x) >= 1 && dm(u, x) == dm(u, y)) {
          pairs.emplace_back(x, y);
          break;
        }
  return detail::oracle_search(dm, pairs, k, limit);
}

}  // namespace kmetric
