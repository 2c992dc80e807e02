#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "degopt/instance.hpp"

namespace degopt {

// Report builders behind the CLI. Each returns a RunReport object:
//   instance_digest, solver, feasible, value, witness_edges (1-based),
//   color_counts, criteria_point, oracle_queries, wall_time_seconds, details.
// The witness is re-evaluated before returning; a mismatch throws Error.

struct SolveMultiOptions {
  std::optional<std::size_t> m;
  bool unprescribed = false;
  bool brute = false;
  int threads = 1;
  int max_criteria = 4;
};

nlohmann::ordered_json solve_multi_report(const Instance& instance, const SolveMultiOptions& options);

enum class ForestSource {
  automatic,  // embedded forest if present, else heuristic
  given,      // SolveColoredOptions::forest
  exact,
  heuristic,
};

struct SolveColoredOptions {
  ForestSource source = ForestSource::automatic;
  std::vector<int> forest;  // 0-based parents, -1 for roots (source == given)
  bool brute = false;
  int threads = 1;
};

nlohmann::ordered_json solve_colored_report(const Instance& instance, const SolveColoredOptions& options);

// Tree-depth and an optimal tree (exact) or a valid forest (heuristic).
nlohmann::ordered_json treedepth_report(const Instance& instance, bool heuristic);

// The IP text for the instance's colored separable problem.
std::string emit_ip_text(const Instance& instance);

}  // namespace degopt
