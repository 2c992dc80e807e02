#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degopt/graph.hpp"
#include "degopt/objective.hpp"

namespace degopt {

// Everything an instance file can carry. Only `graph` is mandatory; the
// solvers check for the parts they need.
//
// File layout (JSON, vertices 1-based):
//   n, edges            graph
//   colors, m           edge colouring (1..p per edge) and per-colour counts
//   vertex_functions    per-vertex tables or named builtins
//   weights             edge weights; switches vertex_functions to the
//                       weighted-degree domain
//   criteria            {"w": r x n, "f": {"kind": "max_affine"|"sum_sq_affine", "terms": [[alpha, beta], ...]}}
//   forest              parent array (0 marks a root)
//   meta                free-form object, preserved verbatim
struct Instance {
  Graph graph;
  std::optional<EdgeColoring> coloring;
  std::optional<SeparableObjective> vertex_functions;  // unweighted instances
  std::optional<std::vector<Value>> weights;
  std::optional<std::vector<OffsetTable>> weighted_functions;  // weighted instances
  std::optional<MultiCriteriaObjective> criteria;
  std::optional<std::vector<int>> forest;  // 0-based parent, -1 for roots
  nlohmann::ordered_json meta;             // null when absent

  WeightedInstance weighted() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws InputError carrying line:column for syntax errors and a field path
// for semantic ones. Builtin vertex functions are expanded into tables, so
// serialize(parse(text)) is the canonical form of `text`.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string instance_digest(const Instance& instance);

// Parent-array forest files: {"parent": [...]} or a bare array, 0 = root,
// other entries 1-based. Returned 0-based with -1 for roots.
std::vector<int> parse_forest(std::string_view text, int n);
std::string serialize_forest(const std::vector<int>& parent);

}  // namespace degopt
