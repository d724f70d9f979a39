#pragma once

// Simple connected undirected graphs on dense vertex indices 0..n-1, plus
// unweighted all-pairs shortest paths.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kmetric/error.hpp"

namespace kmetric {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;

  int n() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(int, std::span<const Edge>, std::vector<std::string>);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

// Validates and normalizes an edge list. Duplicate edges (in either
// orientation) collapse to one. Throws Error on self-loops, bad indices or a
// disconnected result.
inline Graph build_graph(int n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {}) {
  if (n < 1) throw Error(ErrorCode::kEmptyGraph, "graph needs at least one vertex");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::kIndexOutOfRange, "label count does not match vertex count");

  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                      std::to_string(n));
    if (u == v) throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    degree_sum += row.size();
  }
  g.num_edges_ = degree_sum / 2;
  g.labels_ = std::move(labels);

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n)
    throw Error(ErrorCode::kDisconnected, "only " + std::to_string(reached) + " of " +
                                              std::to_string(n) + " vertices reachable");
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Returns a copy of g carrying the given per-vertex labels.
inline Graph with_labels(const Graph& g, std::vector<std::string> labels) {
  auto edges = g.edges();
  return build_graph(g.n(), edges, std::move(labels));
}

inline Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

inline Graph make_cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

inline Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

// Row-major n x n hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const noexcept { return n_; }
  int operator()(Vertex i, Vertex j) const { return d_[index(i, j)]; }
  int& at(Vertex i, Vertex j) { return d_[index(i, j)]; }
  std::span<const int> row(Vertex i) const {
    return {d_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<int> d_;
};

inline void bfs_row(const Graph& g, Vertex source, std::span<int> dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
}

// One BFS per source. With threads > 1 sources are split into contiguous
// chunks; every row is written by exactly one BFS so the result does not
// depend on the thread count.
inline DistanceMatrix all_pairs_distances(const Graph& g, int threads = 1) {
  const int n = g.n();
  DistanceMatrix dm(n);
  auto run = [&](int begin, int end) {
    for (Vertex s = begin; s < end; ++s)
      bfs_row(g, s, std::span<int>(&dm.at(s, 0), static_cast<std::size_t>(n)));
  };
  threads = std::clamp(threads, 1, std::max(1, n / 32));
  if (threads == 1) {
    run(0, n);
    return dm;
  }
  {
    std::vector<std::jthread> workers;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      int begin = t * chunk, end = std::min(n, begin + chunk);
      if (begin < end) workers.emplace_back(run, begin, end);
    }
  }
  return dm;
}

// A path graph rooted at one of its ends. Graphs on at most two vertices
// are paths; their vertices of degree <= 1 are ends.
inline bool is_rooted_path(const Graph& g, Vertex u) {
  if (u < 0 || u >= g.n()) return false;
  if (g.n() <= 2) return true;
  int leaves = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (d == 1) ++leaves;
    else if (d != 2) return false;
  }
  return leaves == 2 && g.degree(u) == 1;
}

}  // namespace kmetric
