#pragma once

// Recomputes the reference table of bounds and exact
// k-metric dimensions on F_{4,1}, Γ_{1,2} and Γ_{1,3}, k = 2..5.

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kmetric/bounds.hpp"
#include "kmetric/chemgen.hpp"
#include "kmetric/kmetric.hpp"

namespace kmetric {

struct TableCell {
  std::string graph;
  int k = 0;
  int reference_exact = 0;
  int reference_bound = 0;
  int formula_bound = 0;   // closed-form bound for this family
  int theorem1_bound = 0;  // n(P_2) * dim_k(base(U)), computed
  std::optional<int> exact;
  std::vector<int> basis;

  bool exact_matches() const { return exact && *exact == reference_exact; }
  bool bounds_agree() const { return reference_bound == formula_bound; }
};

struct TableReport {
  std::vector<TableCell> cells;

  bool all_exact_match() const {
    for (const auto& c : cells)
      if (!c.exact_matches()) return false;
    return true;
  }
};

inline TableReport verify_table(const SolveOptions& options = {}) {
  struct Column {
    std::string name;
    ProductGraph graph;
    RootedGraph base;
    int reference_exact[4];
    bool nanotube;
    int p;
  };
  auto even_roots = [](int count) {
    std::vector<Vertex> out;
    for (Vertex v = 1; v < count; v += 2) out.push_back(v);
    return out;
  };
  std::vector<Column> columns;
  columns.push_back({"F_{4,1}", nanotube(4, 1), make_rooted(make_cycle(8), even_roots(8)),
                     {4, 6, 8, 9}, true, 4});
  columns.push_back({"Gamma_{1,2}", polyhex_row(2), make_rooted(make_path(7), even_roots(7)),
                     {4, 5, 7, 8}, false, 2});
  columns.push_back({"Gamma_{1,3}", polyhex_row(3), make_rooted(make_path(9), even_roots(9)),
                     {4, 5, 7, 9}, false, 3});
  const int reference_bound[4] = {4, 6, 8, 10};

  TableReport report;
  for (const auto& col : columns) {
    for (int k = 2; k <= 5; ++k) {
      TableCell cell;
      cell.graph = col.name;
      cell.k = k;
      cell.reference_exact = col.reference_exact[k - 2];
      cell.reference_bound = reference_bound[k - 2];
      cell.formula_bound = col.nanotube ? nanotube_bound(col.p, 1, k) : polyhex_bound(col.p, k);
      auto rooted = dim_k_rooted(col.base, k, options);
      cell.theorem1_bound = rooted.value ? 2 * *rooted.value : -1;
      auto exact = dim_k(col.graph.graph, k, options);
      cell.exact = exact.value;
      cell.basis = exact.basis;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

inline std::string format_table(const TableReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(13) << "graph" << std::setw(4) << "k" << std::setw(11)
      << "reference" << std::setw(8) << "exact" << std::setw(12) << "ref.bound" << std::setw(9)
      << "formula" << std::setw(10) << "theorem1" << "status\n";
  for (const auto& c : report.cells) {
    out << std::setw(13) << c.graph << std::setw(4) << c.k << std::setw(11) << c.reference_exact
        << std::setw(8) << (c.exact ? std::to_string(*c.exact) : "inf") << std::setw(12)
        << c.reference_bound << std::setw(9) << c.formula_bound << std::setw(10)
        << c.theorem1_bound;
    if (!c.exact_matches()) {
      out << "EXACT MISMATCH";
    } else if (!c.bounds_agree()) {
      // Known discrepancy: the reference bound for this cell is 2k while the
      // closed form gives 2(k+1). Report which candidates the exact value respects.
      bool ref_ok = *c.exact <= c.reference_bound;
      bool formula_ok = *c.exact <= c.formula_bound;
      out << "ok; reference bound " << c.reference_bound << " vs formula " << c.formula_bound
          << " (exact " << *c.exact << " respects " << (ref_ok && formula_ok ? "both" : ref_ok ? "reference only" : formula_ok ? "formula only" : "neither")
          << ")";
    } else {
      out << "ok";
    }
    out << '\n';
  }
  out << (report.all_exact_match() ? "all 12 exact values match\n" : "exact value mismatch\n");
  return out.str();
}

}  // namespace kmetric
