#pragma once

// Edge-list text format:
//
//   n m
//   u v          (m lines, 0-based, u < v on output)
//   # label i text
//
// Lines starting with '#' are comments anywhere in the file; "# label"
// comments carry per-vertex labels. write_edge_list emits a canonical form
// that read_edge_list reproduces byte for byte.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.n(); ++v) out << "# label " << v << ' ' << g.label(v) << '\n';
  return out.str();
}

inline Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  int line_no = 0;

  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream comment(line.substr(first + 1));
      std::string tag;
      if (comment >> tag && tag == "label") {
        long long index = -1;
        if (!(comment >> index)) fail("label comment without index");
        std::string text_label;
        comment >> std::ws;
        std::getline(comment, text_label);
        if (n < 0) fail("label before header");
        if (index < 0 || index >= n) fail("label index out of range");
        if (labels.empty()) labels.assign(n, {});
        labels[index] = text_label;
      }
      continue;
    }
    std::istringstream fields(line);
    if (n < 0) {
      long long nn = -1;
      if (!(fields >> nn >> m) || nn < 1 || m < 0 || nn > (1 << 24)) fail("bad header, expected 'n m'");
      n = static_cast<int>(nn);
    } else {
      long long u = -1, v = -1;
      if (!(fields >> u >> v)) fail("bad edge line");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorCode::kIndexOutOfRange, "line " + std::to_string(line_no) + ": edge index");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string rest;
    if (fields >> rest) fail("trailing tokens");
  }
  if (n < 0) throw Error(ErrorCode::kParse, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorCode::kParse, "header announces " + std::to_string(m) + " edges, found " +
                                       std::to_string(edges.size()));
  return build_graph(n, edges, std::move(labels));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string write_dot(const Graph& g, const std::vector<Vertex>& highlight = {}) {
  std::ostringstream out;
  out << "graph G {\n";
  std::vector<char> bold(g.n(), 0);
  for (Vertex v : highlight) bold[v] = 1;
  for (Vertex v = 0; v < g.n(); ++v) {
    out << "  " << v << " [label=\"" << (g.has_labels() ? g.label(v) : "v" + std::to_string(v + 1))
        << '"';
    if (bold[v]) out << ", style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kmetric
