#pragma once

// Command-line front end. run_cli is the whole program; tools/kmetric.cpp
// only forwards argv. Exit codes: 0 success (an infinite dimension is a
// success), 1 verification mismatch, 2 unreadable or invalid graph input /
// bad usage, 3 invalid k, root set or formula range, 4 distance-formula
// mismatch on a constructed product.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kmetric/bounds.hpp"
#include "kmetric/chemgen.hpp"
#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/io.hpp"
#include "kmetric/kmetric.hpp"
#include "kmetric/oracle.hpp"
#include "kmetric/products.hpp"
#include "kmetric/report.hpp"
#include "kmetric/table.hpp"

namespace kmetric::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kBadInput = 2,
  kBadParameter = 3,
  kDistanceMismatch = 4,
};

// A thrown Error tagged with the exit code it maps to.
struct Failure {
  int code;
  std::string message;
};

inline int default_threads() {
  if (const char* env = std::getenv("KMETRIC_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// "path:N", "cycle:N", "complete:N" or a path to an edge-list file.
struct LoadedGraph {
  Graph graph;
  std::string bytes;  // what the digest is computed over
};

inline LoadedGraph load_graph(const std::string& spec) {
  try {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
      std::string family = spec.substr(0, colon);
      int n = std::stoi(spec.substr(colon + 1));
      std::optional<Graph> g;
      if (family == "path") g = make_path(n);
      else if (family == "cycle") g = make_cycle(n);
      else if (family == "complete") g = make_complete(n);
      if (g) return {*g, spec};
    }
    std::string bytes = read_file(spec);
    return {read_edge_list(bytes), bytes};
  } catch (const Error& e) {
    throw Failure{kBadInput, e.what()};
  } catch (const std::exception& e) {
    throw Failure{kBadInput, "cannot load graph '" + spec + "': " + e.what()};
  }
}

inline void check_k(int k) {
  if (k < 1) throw Failure{kBadParameter, "k must be at least 1"};
}

inline RootedGraph rooted_or_fail(const Graph& g, const std::vector<int>& roots) {
  try {
    return make_rooted(g, roots);
  } catch (const Error& e) {
    throw Failure{kBadParameter, e.what()};
  }
}

inline void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.n())
    throw Failure{kBadParameter, std::string(what) + " " + std::to_string(v) + " outside graph"};
}

inline std::string format_basis(const std::vector<int>& basis) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.size(); ++i)
    out += (i ? ", v" : "v") + std::to_string(basis[i] + 1);
  return out + "}";
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Failure{kBadInput, "cannot write " + path};
  file << text;
}

inline void append_log(const std::string& path, const RunRecord& record) {
  if (path.empty()) return;
  std::ofstream log(path, std::ios::app);
  if (!log) throw Failure{kBadInput, "cannot open session log " + path};
  log << json(record).dump() << '\n';
}

inline StageRoots parse_stage_roots(const std::string& text) {
  // "1,3,5;0,2" -> {{1,3,5},{0,2}}
  StageRoots out;
  if (text.empty()) return out;
  std::stringstream stages(text);
  for (std::string stage; std::getline(stages, stage, ';');) {
    std::vector<Vertex> roots;
    std::stringstream items(stage);
    for (std::string item; std::getline(items, item, ',');)
      if (!item.empty()) roots.push_back(std::stoi(item));
    out.push_back(std::move(roots));
  }
  return out;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-metric dimension of graphs and their products", "kmetric"};
  app.require_subcommand(1);

  int threads = 0;
  std::string log_path;
  app.add_option("--threads", threads, "solver threads (default: KMETRIC_THREADS or all cores)");
  app.add_option("--log", log_path, "append a JSON record per run to this file");

  // dim
  auto* dim = app.add_subcommand("dim", "k-metric dimension and a lexicographically first basis");
  std::string dim_graph;
  int dim_k_value = 1;
  std::vector<int> dim_roots;
  bool dim_oracle = false, dim_json = false;
  long long node_limit = 0;
  std::string dump_path;
  dim->add_option("graph", dim_graph, "edge-list file or path:N / cycle:N / complete:N")->required();
  dim->add_option("-k", dim_k_value, "demand k")->required();
  dim->add_option("--rooted", dim_roots, "root set U (0-based) for dim_k(G(U))")->delimiter(',');
  dim->add_flag("--oracle", dim_oracle, "cross-check against exhaustive search");
  dim->add_flag("--json", dim_json, "emit JSON");
  dim->add_option("--node-limit", node_limit, "stop after this many nodes (result not optimal)");
  dim->add_option("--dump-instance", dump_path, "write the multicover instance to this file");

  // maxk
  auto* maxk = app.add_subcommand("maxk", "largest k with a finite k-metric dimension");
  std::string maxk_graph;
  bool maxk_json = false;
  maxk->add_option("graph", maxk_graph)->required();
  maxk->add_flag("--json", maxk_json);

  // product
  auto* product = app.add_subcommand("product", "build hier | splice | link | bridge products");
  std::string product_mode, left_spec, right_spec, product_out;
  std::vector<int> product_roots;
  int join_a = 0, join_b = 0, bridge_root = 0, bridge_d = 1;
  bool check_prop1 = false, product_dot = false;
  product->add_option("mode", product_mode)
      ->required()
      ->check(CLI::IsMember({"hier", "splice", "link", "bridge"}));
  product->add_option("--left,--graph", left_spec, "left factor (G)")->required();
  product->add_option("--right", right_spec, "right factor (H)");
  product->add_option("--roots", product_roots, "root set U of G (hier)")->delimiter(',');
  product->add_option("--a", join_a, "vertex of G (splice/link)");
  product->add_option("--b", join_b, "vertex of H (splice/link)");
  product->add_option("--root", bridge_root, "root of every copy (bridge)");
  product->add_option("--d", bridge_d, "number of copies (bridge)");
  product->add_option("-o,--output", product_out, "output file (default stdout)");
  product->add_flag("--check-prop1", check_prop1, "verify the product distance formula on all pairs");
  product->add_flag("--dot", product_dot, "write DOT instead of an edge list");

  // gen
  auto* gen = app.add_subcommand("gen", "chemical graph families");
  std::string gen_family, gen_graph, gen_out, gen_roots, gen_format = "edges";
  int gen_p = 4, gen_q = 1, gen_levels = 1, gen_root = 0, gen_d = 1;
  gen->add_option("family", gen_family)
      ->required()
      ->check(CLI::IsMember({"nanotube", "polyhex", "armchair", "bridge"}));
  gen->add_option("--p", gen_p, "hexagons per row / half the ring length");
  gen->add_option("--q", gen_q, "nanotube doublings (2^q rings)");
  gen->add_option("--levels", gen_levels, "polyhex rows (1, 3, 7, ...); armchair default 3");
  gen->add_option("--stage-roots", gen_roots, "explicit per-stage roots, e.g. '1,3;0,2'");
  gen->add_option("--graph", gen_graph, "base graph (bridge)");
  gen->add_option("--root", gen_root, "root vertex (bridge)");
  gen->add_option("--d", gen_d, "copies (bridge)");
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"edges", "dot"}));
  gen->add_option("-o,--output", gen_out);

  // bound
  auto* bound = app.add_subcommand("bound", "product bounds and closed formulas (JSON)");
  std::string bound_kind, bound_left, bound_right;
  std::vector<int> bound_roots;
  int bound_k = 1, bound_a = 0, bound_b = 0, bound_p = 2, bound_q = 1;
  bool bound_exact = false;
  bound->add_option("kind", bound_kind)
      ->required()
      ->check(CLI::IsMember(
          {"theorem1", "theorem2", "splice", "link", "cycle", "path", "nanotube", "polyhex"}));
  bound->add_option("-k", bound_k)->required();
  bound->add_option("--left", bound_left, "G");
  bound->add_option("--right", bound_right, "H");
  bound->add_option("--roots", bound_roots, "U (theorem1) or u (theorem2)")->delimiter(',');
  bound->add_option("--a", bound_a);
  bound->add_option("--b", bound_b);
  bound->add_option("--p", bound_p);
  bound->add_option("--q", bound_q);
  bound->add_flag("--exact", bound_exact, "also solve the product exactly");

  // verify-table
  auto* table = app.add_subcommand("verify-table", "recompute the reference table of bounds and exact values");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Graphviz export, optionally highlighting a basis");
  std::string dot_graph, dot_out;
  int dot_k = 0;
  dot->add_option("graph", dot_graph)->required();
  dot->add_option("--basis-k", dot_k, "highlight a k-metric basis for this k");
  dot->add_option("-o,--output", dot_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kBadInput;
  }

  SolveOptions solve;
  solve.threads = threads > 0 ? threads : default_threads();
  solve.node_limit = node_limit;

  std::string command;
  for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);
  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    if (*dim) {
      check_k(dim_k_value);
      auto loaded = load_graph(dim_graph);
      const Graph& g = loaded.graph;
      auto dm = all_pairs_distances(g, solve.threads);
      std::optional<RootedGraph> rg;
      if (!dim_roots.empty()) rg = rooted_or_fail(g, dim_roots);
      auto inst = rg ? build_instance_rooted(*rg, dm, dim_k_value)
                     : build_instance_full(dm, dim_k_value);
      if (!dump_path.empty()) write_output(dump_instance(inst), dump_path, out);
      DimResult result = solve_exact(inst, solve);

      int status = kOk;
      std::string oracle_note;
      if (dim_oracle) {
        DimResult reference;
        try {
          reference = rg ? oracle_dim(*rg, dim_k_value) : oracle_dim(g, dim_k_value);
        } catch (const Error& e) {
          throw Failure{kBadParameter, e.what()};
        }
        if (reference.value != result.value || (result.optimal && reference.basis != result.basis)) {
          err << "oracle mismatch: solver " << (result.value ? std::to_string(*result.value) : "infinite")
              << " " << format_basis(result.basis) << ", oracle "
              << (reference.value ? std::to_string(*reference.value) : "infinite") << " "
              << format_basis(reference.basis) << '\n';
          status = kMismatch;
        } else {
          oracle_note = "oracle agrees";
        }
      }

      if (dim_json) {
        out << json(result).dump(2) << '\n';
      } else {
        std::string name = "dim_" + std::to_string(dim_k_value);
        if (result.infinite()) {
          out << name << " = infinite\n";
        } else {
          out << name << " = " << *result.value << ", basis " << format_basis(result.basis)
              << (result.optimal ? " (optimal)" : " (not proven optimal)") << '\n';
        }
        if (!oracle_note.empty()) out << oracle_note << '\n';
      }
      append_log(log_path, RunRecord{command, digest(loaded.bytes), dim_k_value, json(result),
                                     elapsed_ms(), result.stats});
      return status;
    }

    if (*maxk) {
      auto loaded = load_graph(maxk_graph);
      auto value = max_k(all_pairs_distances(loaded.graph, solve.threads));
      if (maxk_json) {
        out << json{{"max_k", value ? json(*value) : json(nullptr)}, {"infinite", !value}}.dump(2)
            << '\n';
      } else {
        out << "max_k = " << (value ? std::to_string(*value) : "infinite") << '\n';
      }
      append_log(log_path, RunRecord{command, digest(loaded.bytes), value.value_or(0),
                                     json{{"max_k", value ? json(*value) : json(nullptr)}},
                                     elapsed_ms(), {}});
      return kOk;
    }

    if (*product) {
      auto left = load_graph(left_spec).graph;
      Graph result;
      if (product_mode == "bridge") {
        check_vertex(left, bridge_root, "root");
        if (bridge_d < 1) throw Failure{kBadParameter, "--d must be at least 1"};
        result = bridge_path_uniform(left, bridge_root, bridge_d);
      } else {
        if (right_spec.empty()) throw Failure{kBadInput, "--right is required for " + product_mode};
        auto right = load_graph(right_spec).graph;
        if (product_mode == "hier") {
          auto rg = rooted_or_fail(left, product_roots);
          auto prod = hierarchical_product(rg, right);
          if (check_prop1) {
            auto dm_g = all_pairs_distances(left), dm_h = all_pairs_distances(right);
            auto dm_x = all_pairs_distances(prod.graph, solve.threads);
            for (Vertex x = 0; x < prod.graph.n(); ++x)
              for (Vertex y = 0; y < prod.graph.n(); ++y)
                if (hierarchical_distance(rg, dm_g, dm_h, prod.pair_of(x), prod.pair_of(y)) !=
                    dm_x(x, y)) {
                  err << "distance formula mismatch at (" << x << "," << y << ")\n";
                  return kDistanceMismatch;
                }
            err << "distance formula verified on " << prod.graph.n() * prod.graph.n()
                << " pairs\n";
          }
          result = prod.graph;
        } else {
          check_vertex(left, join_a, "--a");
          check_vertex(right, join_b, "--b");
          result = product_mode == "splice" ? splice(left, join_a, right, join_b)
                                            : link(left, join_a, right, join_b);
        }
      }
      write_output(product_dot ? write_dot(result) : write_edge_list(result), product_out, out);
      return kOk;
    }

    if (*gen) {
      Graph result;
      try {
        auto roots = parse_stage_roots(gen_roots);
        if (gen_family == "nanotube") result = nanotube(gen_p, gen_q, roots).graph;
        else if (gen_family == "polyhex")
          result = (gen_levels == 1 && roots.empty()) ? polyhex_row(gen_p).graph
                                                      : polyhex_stack(gen_p, gen_levels, roots).graph;
        else if (gen_family == "armchair")
          result = armchair(gen_p, gen->count("--levels") ? gen_levels : 3, roots).graph;
        else {
          if (gen_graph.empty()) throw Failure{kBadInput, "--graph is required for bridge"};
          auto base = load_graph(gen_graph).graph;
          check_vertex(base, gen_root, "--root");
          result = bridge_path_uniform(base, gen_root, gen_d);
        }
      } catch (const Error& e) {
        throw Failure{kBadParameter, e.what()};
      } catch (const std::invalid_argument& e) {
        throw Failure{kBadParameter, std::string("bad --stage-roots: ") + e.what()};
      }
      write_output(gen_format == "dot" ? write_dot(result) : write_edge_list(result), gen_out, out);
      return kOk;
    }

    if (*bound) {
      check_k(bound_k);
      BoundOptions options;
      options.compute_exact = bound_exact;
      options.solve = solve;
      BoundReport report;
      try {
        if (bound_kind == "theorem1" || bound_kind == "theorem2" || bound_kind == "splice" ||
            bound_kind == "link") {
          if (bound_left.empty() || bound_right.empty())
            throw Failure{kBadInput, "--left and --right are required"};
          auto g = load_graph(bound_left).graph;
          auto h = load_graph(bound_right).graph;
          if (bound_kind == "theorem1") {
            report = theorem1_upper(rooted_or_fail(g, bound_roots), h, bound_k, options);
          } else if (bound_kind == "theorem2") {
            if (bound_roots.size() != 1) throw Failure{kBadParameter, "theorem2 needs one root"};
            check_vertex(g, bound_roots[0], "root");
            report = theorem2_exact(g, bound_roots[0], h, bound_k, options);
          } else {
            check_vertex(g, bound_a, "--a");
            check_vertex(h, bound_b, "--b");
            report = splice_link_lower(g, bound_a, h, bound_b, bound_k,
                                       bound_kind == "splice" ? JoinMode::kSplice : JoinMode::kLink,
                                       options);
          }
        } else {
          report.preconditions_met = true;
          std::optional<Graph> target;
          std::optional<RootedGraph> rooted_target;
          if (bound_kind == "cycle") {
            report.kind = BoundKind::kExact;
            report.value = cycle_rooted_formula(bound_p, bound_k);
            std::vector<Vertex> roots;
            for (Vertex v = 1; v < 2 * bound_p; v += 2) roots.push_back(v);
            rooted_target = make_rooted(make_cycle(2 * bound_p), roots);
          } else if (bound_kind == "path") {
            report.kind = BoundKind::kExact;
            report.value = path_rooted_formula(bound_p, bound_k);
            std::vector<Vertex> roots;
            for (Vertex v = 1; v < 2 * bound_p + 3; v += 2) roots.push_back(v);
            rooted_target = make_rooted(make_path(2 * bound_p + 3), roots);
          } else if (bound_kind == "nanotube") {
            report.kind = BoundKind::kUpper;
            report.value = nanotube_bound(bound_p, bound_q, bound_k);
            target = nanotube(bound_p, bound_q).graph;
          } else {
            report.kind = BoundKind::kUpper;
            report.value = polyhex_bound(bound_p, bound_k);
            target = polyhex_row(bound_p).graph;
          }
          if (bound_exact) {
            report.has_exact = true;
            report.exact = rooted_target ? dim_k_rooted(*rooted_target, bound_k, solve).value
                                         : dim_k(*target, bound_k, solve).value;
            if (report.exact)
              report.slack = report.kind == BoundKind::kExact ? *report.exact - *report.value
                                                              : *report.value - *report.exact;
          }
        }
      } catch (const Error& e) {
        throw Failure{kBadParameter, e.what()};
      }
      out << json(report).dump(2) << '\n';
      append_log(log_path, RunRecord{command, digest(bound_left + "\n" + bound_right), bound_k,
                                     json(report), elapsed_ms(), {}});
      return kOk;
    }

    if (*table) {
      auto report = verify_table(solve);
      out << format_table(report);
      return report.all_exact_match() ? kOk : kMismatch;
    }

    if (*dot) {
      auto g = load_graph(dot_graph).graph;
      std::vector<Vertex> highlight;
      if (dot_k > 0) highlight = dim_k(g, dot_k, solve).basis;
      write_output(write_dot(g, highlight), dot_out, out);
      return kOk;
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}

}  // namespace kmetric::cli
