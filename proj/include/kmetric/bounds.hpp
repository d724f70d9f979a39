#pragma once

// Product bounds on dim_k and the closed formulas for the rooted cycle and
// rooted path used by the hexagonal families.
//
// Theorem-style bounds never throw on a failed hypothesis: they come back
// with preconditions_met = false and a reason, and no value is asserted.
// The closed formulas throw kOutOfRange outside the (p, k) ranges they are
// stated for.

#include <optional>
#include <string>
#include <string_view>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/kmetric.hpp"
#include "kmetric/multicover.hpp"
#include "kmetric/products.hpp"

namespace kmetric {

enum class BoundKind { kUpper, kLower, kExact };

inline std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kUpper: return "upper";
    case BoundKind::kLower: return "lower";
    case BoundKind::kExact: return "exact";
  }
  return "unknown";
}

struct BoundReport {
  BoundKind kind = BoundKind::kUpper;
  std::optional<int> value;  // asserted bound; empty when preconditions fail
  bool preconditions_met = false;
  std::string reason;
  bool has_exact = false;     // an exact solve was requested
  std::optional<int> exact;   // its value; empty means infinite
  std::optional<int> slack;   // |bound - exact| oriented by kind

  // True unless an exact value contradicts the asserted bound.
  bool consistent() const {
    if (!preconditions_met || !has_exact || !value) return true;
    if (!exact) return kind == BoundKind::kLower;
    switch (kind) {
      case BoundKind::kUpper: return *exact <= *value;
      case BoundKind::kLower: return *exact >= *value;
      case BoundKind::kExact: return *exact == *value;
    }
    return false;
  }

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct BoundOptions {
  bool compute_exact = false;
  SolveOptions solve;
};

enum class JoinMode { kSplice, kLink };

namespace detail {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

inline void attach_exact(BoundReport& report, const Graph& product, int k,
                         const SolveOptions& solve) {
  report.has_exact = true;
  report.exact = dim_k(product, k, solve).value;
  if (!report.value || !report.exact) return;
  report.slack = report.kind == BoundKind::kLower ? *report.exact - *report.value
                                                  : *report.value - *report.exact;
}

// H must be nontrivial and admit a ceil(k/t)-metric generator. With
// n(H) = 1 the product is G itself and neither product claim holds.
inline bool right_factor_ok(const Graph& h, int k, int t, BoundReport& report) {
  if (h.n() < 2) {
    report.reason = "H has a single vertex";
    return false;
  }
  int need = ceil_div(k, t);
  auto limit = max_k(all_pairs_distances(h));
  if (limit && *limit < need) {
    report.reason = "dim_" + std::to_string(need) + "(H) is infinite (max k of H is " +
                    std::to_string(*limit) + ")";
    return false;
  }
  return true;
}

}  // namespace detail

// dim_k(G(U) ⊓ H) <= n(H) * dim_k(G(U)), given t = dim_k(G(U)) finite and
// positive, n(H) >= 2 and dim_{ceil(k/t)}(H) finite.
//
// Not a theorem in general: for the diamond K_4 - {02} with U = {0, 2},
// H = K_3 and k = 2 the bound is 6 while dim_2 of the product is 8, since
// (0, h) and (2, h) are equidistant from every vertex of {1, 3} x V(H).
// Callers comparing against the exact value should expect rare violations.
inline BoundReport theorem1_upper(const RootedGraph& rg, const Graph& h, int k,
                                  const BoundOptions& options = {}) {
  BoundReport report;
  report.kind = BoundKind::kUpper;
  auto rooted = dim_k_rooted(rg, k, options.solve);
  if (rooted.infinite()) {
    report.reason = "dim_k(G(U)) is infinite";
    return report;
  }
  const int t = *rooted.value;
  if (t == 0) {
    report.reason = "dim_k(G(U)) = 0, so ceil(k/t) is undefined";
    return report;
  }
  if (!detail::right_factor_ok(h, k, t, report)) return report;
  report.preconditions_met = true;
  report.value = h.n() * t;
  if (options.compute_exact)
    detail::attach_exact(report, hierarchical_product(rg, h).graph, k, options.solve);
  return report;
}

// dim_k(G(u) ⊓ H) = n(H) * dim_k(G(u)) when G(u) is not a rooted path,
// n(H) >= 2 and dim_{ceil(k/t)}(H) is finite.
inline BoundReport theorem2_exact(const Graph& g, Vertex u, const Graph& h, int k,
                                  const BoundOptions& options = {}) {
  BoundReport report;
  report.kind = BoundKind::kExact;
  if (is_rooted_path(g, u)) {
    report.reason = "RootedPath: G(u) is a rooted path";
    return report;
  }
  auto rg = make_rooted(g, {u});
  auto rooted = dim_k_rooted(rg, k, options.solve);
  if (rooted.infinite()) {
    report.reason = "dim_k(G(u)) is infinite";
    return report;
  }
  const int t = *rooted.value;
  if (t == 0) {
    report.reason = "dim_k(G(u)) = 0, so ceil(k/t) is undefined";
    return report;
  }
  if (!detail::right_factor_ok(h, k, t, report)) return report;
  report.preconditions_met = true;
  report.value = h.n() * t;
  if (options.compute_exact)
    detail::attach_exact(report, hierarchical_product(rg, h).graph, k, options.solve);
  return report;
}

// dim_k of the splice (or link) of G at a and H at b is at least
// dim_k(G(a)) + dim_k(H(b)).
inline BoundReport splice_link_lower(const Graph& g, Vertex a, const Graph& h, Vertex b, int k,
                                     JoinMode mode, const BoundOptions& options = {}) {
  BoundReport report;
  report.kind = BoundKind::kLower;
  auto left = dim_k_rooted(make_rooted(g, {a}), k, options.solve);
  auto right = dim_k_rooted(make_rooted(h, {b}), k, options.solve);
  if (left.infinite() || right.infinite()) {
    report.reason = left.infinite() ? "dim_k(G(a)) is infinite" : "dim_k(H(b)) is infinite";
    return report;
  }
  report.preconditions_met = true;
  report.value = *left.value + *right.value;
  if (options.compute_exact) {
    Graph joined = mode == JoinMode::kSplice ? splice(g, a, h, b) : link(g, a, h, b);
    detail::attach_exact(report, joined, k, options.solve);
  }
  return report;
}

// dim_k(C_2p(U)) with U the even positions v_2, v_4, ..., v_2p.
inline int cycle_rooted_formula(int p, int k) {
  if (p < 2 || k < 1 || k >= 2 * p)
    throw Error(ErrorCode::kOutOfRange, "cycle formula needs p >= 2 and 1 <= k < 2p");
  return k <= p ? k : k + 1;
}

// dim_k(P_{2p+3}(U)) with U the even positions v_2, v_4, ..., v_{2p+2}.
inline int path_rooted_formula(int p, int k) {
  if (p < 1 || k < 1 || k >= 2 * p + 3)
    throw Error(ErrorCode::kOutOfRange, "path formula needs p >= 1 and 1 <= k < 2p+3");
  return k <= p + 2 ? k : k + 1;
}

// Upper bound on dim_k of the zigzag nanotube with 2^q rings of 2p
// vertices (2^q - 1 hexagon belts).
inline int nanotube_bound(int p, int q, int k) {
  if (q < 1 || q > 24) throw Error(ErrorCode::kOutOfRange, "nanotube bound needs 1 <= q <= 24");
  if (p < 2 || k < 1 || k >= 2 * p)
    throw Error(ErrorCode::kOutOfRange, "nanotube bound needs p >= 2 and 1 <= k < 2p");
  return (1 << q) * (k <= p ? k : k + 1);
}

// Upper bound on dim_k of the single-row polyhex built on P_{2p+3}.
inline int polyhex_bound(int p, int k) {
  if (p < 1 || k < 1 || k >= 2 * p + 3)
    throw Error(ErrorCode::kOutOfRange, "polyhex bound needs p >= 1 and 1 <= k < 2p+3");
  return k <= p + 2 ? 2 * k : 2 * k + 2;
}

}  // namespace kmetric
