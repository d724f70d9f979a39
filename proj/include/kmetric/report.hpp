#pragma once

// JSON forms of solver results, bound reports and session-log records.
// Basis vertices are 1-based in JSON (v1, v2, ...); 0-based in memory.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kmetric/bounds.hpp"
#include "kmetric/multicover.hpp"

namespace kmetric {

using nlohmann::json;

inline void to_json(json& j, const SolverStats& s) {
  j = json{{"nodes", s.nodes}, {"rows", s.rows}, {"pruned", s.pruned}};
}

inline void from_json(const json& j, SolverStats& s) {
  j.at("nodes").get_to(s.nodes);
  j.at("rows").get_to(s.rows);
  j.at("pruned").get_to(s.pruned);
}

inline void to_json(json& j, const DimResult& r) {
  json basis = json::array();
  for (int v : r.basis) basis.push_back(v + 1);
  j = json{{"k", r.k},
           {"dim", r.value ? json(*r.value) : json(nullptr)},
           {"infinite", r.infinite()},
           {"basis", basis},
           {"optimal", r.optimal},
           {"stats", r.stats}};
}

inline void from_json(const json& j, DimResult& r) {
  j.at("k").get_to(r.k);
  const auto& dim = j.at("dim");
  if (dim.is_null()) r.value.reset();
  else r.value = dim.get<int>();
  if (j.at("infinite").get<bool>() != !r.value.has_value())
    throw Error(ErrorCode::kParse, "'infinite' disagrees with 'dim'");
  r.basis.clear();
  for (const auto& v : j.at("basis")) r.basis.push_back(v.get<int>() - 1);
  j.at("optimal").get_to(r.optimal);
  j.at("stats").get_to(r.stats);
}

inline void to_json(json& j, const BoundReport& b) {
  j = json{{"kind", std::string(to_string(b.kind))},
           {"value", b.value ? json(*b.value) : json(nullptr)},
           {"preconditions_met", b.preconditions_met},
           {"reason", b.reason}};
  if (b.has_exact) j["exact"] = b.exact ? json(*b.exact) : json(nullptr);
  if (b.slack) j["slack"] = *b.slack;
}

inline void from_json(const json& j, BoundReport& b) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "upper") b.kind = BoundKind::kUpper;
  else if (kind == "lower") b.kind = BoundKind::kLower;
  else if (kind == "exact") b.kind = BoundKind::kExact;
  else throw Error(ErrorCode::kParse, "unknown bound kind " + kind);
  const auto& value = j.at("value");
  if (value.is_null()) b.value.reset();
  else b.value = value.get<int>();
  j.at("preconditions_met").get_to(b.preconditions_met);
  j.at("reason").get_to(b.reason);
  b.has_exact = j.contains("exact");
  b.exact.reset();
  if (b.has_exact && !j["exact"].is_null()) b.exact = j["exact"].get<int>();
  b.slack.reset();
  if (j.contains("slack")) b.slack = j["slack"].get<int>();
}

// 64-bit FNV-1a of the raw input bytes, as 16 lowercase hex digits.
inline std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct RunRecord {
  std::string command;
  std::string input_digest;
  int k = 0;
  json result;
  double wall_ms = 0;
  SolverStats stats;
};

inline void to_json(json& j, const RunRecord& r) {
  j = json{{"command", r.command}, {"input_digest", r.input_digest}, {"k", r.k},
           {"result", r.result},   {"wall_ms", r.wall_ms},           {"stats", r.stats}};
}

}  // namespace kmetric
