#pragma once

// k-metric generators and dimensions on top of the multicover solver.
//
// A set S is a k-metric generator for a family of vertex pairs when every
// pair (x, y) of the family has at least k vertices w ∈ S with
// d(w, x) != d(w, y). dim_k(G) uses all pairs; the rooted dimension
// dim_k(G(U)) uses only pairs lying on a common sphere N_l(u), u ∈ U, l >= 1.

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/multicover.hpp"
#include "kmetric/products.hpp"

namespace kmetric {

using VertexPair = std::pair<Vertex, Vertex>;

struct Sphere {
  Vertex center = 0;
  int radius = 0;
  std::vector<Vertex> members;
};

inline std::vector<int> representation(const DistanceMatrix& dm, Vertex v,
                                       std::span<const Vertex> ordered) {
  std::vector<int> out;
  out.reserve(ordered.size());
  for (Vertex s : ordered) out.push_back(dm(s, v));
  return out;
}

inline std::vector<Vertex> distinguishers(const DistanceMatrix& dm, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::kSamePair, "vertex " + std::to_string(u) + " paired with itself");
  std::vector<Vertex> out;
  for (Vertex w = 0; w < dm.n(); ++w)
    if (dm(w, u) != dm(w, v)) out.push_back(w);
  return out;
}

// Largest k admitting a k-metric generator: the smallest distinguisher set
// over all pairs. Graphs with fewer than two vertices have no pairs and
// report nullopt (infinite).
inline std::optional<int> max_k(const DistanceMatrix& dm) {
  const int n = dm.n();
  if (n < 2) return std::nullopt;
  int best = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int count = 0;
      for (Vertex w = 0; w < n; ++w) count += dm(w, u) != dm(w, v);
      best = std::min(best, count);
    }
  return best;
}

inline std::vector<VertexPair> all_pairs(int n) {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

// Spheres N_l(u) for u ∈ U and l >= 1, nonempty ones only, by center then radius.
inline std::vector<Sphere> spheres(const RootedGraph& rg, const DistanceMatrix& dm) {
  std::vector<Sphere> out;
  for (Vertex u : rg.roots) {
    std::vector<Sphere> by_radius;
    for (Vertex v = 0; v < dm.n(); ++v) {
      int l = dm(u, v);
      if (l == 0) continue;
      if (static_cast<int>(by_radius.size()) < l) by_radius.resize(l);
      by_radius[l - 1].members.push_back(v);
    }
    for (int l = 1; l <= static_cast<int>(by_radius.size()); ++l) {
      auto& s = by_radius[l - 1];
      if (s.members.empty()) continue;
      s.center = u;
      s.radius = l;
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Unordered pairs lying on a common sphere, deduplicated and sorted.
inline std::vector<VertexPair> sphere_pairs(const RootedGraph& rg, const DistanceMatrix& dm) {
  std::vector<VertexPair> out;
  for (const auto& s : spheres(rg, dm))
    for (std::size_t i = 0; i < s.members.size(); ++i)
      for (std::size_t j = i + 1; j < s.members.size(); ++j)
        out.emplace_back(s.members[i], s.members[j]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_k_generator(const DistanceMatrix& dm, std::span<const Vertex> set, int k,
                           std::span<const VertexPair> pairs) {
  for (auto [x, y] : pairs) {
    int count = 0;
    for (Vertex w : set) count += dm(w, x) != dm(w, y);
    if (count < k) return false;
  }
  return true;
}

inline bool is_k_generator(const DistanceMatrix& dm, std::span<const Vertex> set, int k) {
  auto pairs = all_pairs(dm.n());
  return is_k_generator(dm, set, k, pairs);
}

inline MulticoverInstance build_instance(const DistanceMatrix& dm,
                                         std::span<const VertexPair> pairs, int k) {
  MulticoverInstance inst;
  inst.universe_size = dm.n();
  inst.demand = k;
  inst.rows.reserve(pairs.size());
  for (auto [x, y] : pairs) inst.rows.push_back(distinguishers(dm, x, y));
  return inst;
}

// One row per unordered pair i < j, in pair order.
inline MulticoverInstance build_instance_full(const DistanceMatrix& dm, int k) {
  auto pairs = all_pairs(dm.n());
  return build_instance(dm, pairs, k);
}

inline MulticoverInstance build_instance_rooted(const RootedGraph& rg, const DistanceMatrix& dm,
                                                int k) {
  auto pairs = sphere_pairs(rg, dm);
  return build_instance(dm, pairs, k);
}

namespace detail {

inline void check_demand(int k) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "k must be at least 1, got " + std::to_string(k));
}

}  // namespace detail

inline DimResult dim_k(const Graph& g, int k, const SolveOptions& options = {}) {
  detail::check_demand(k);
  auto dm = all_pairs_distances(g, options.threads);
  return solve_exact(build_instance_full(dm, k), options);
}

inline DimResult dim_k_rooted(const RootedGraph& rg, int k, const SolveOptions& options = {}) {
  detail::check_demand(k);
  auto dm = all_pairs_distances(rg.graph, options.threads);
  return solve_exact(build_instance_rooted(rg, dm, k), options);
}

}  // namespace kmetric
