#pragma once

#include <optional>
#include <vector>

#include "degopt/graph.hpp"
#include "degopt/treedepth.hpp"

namespace degopt {

struct ColoredSolution {
  bool feasible = false;
  EdgeSubset subset;             // empty when infeasible
  Value value = 0;               // sum_i f_i(d_i(F)) when feasible
  std::vector<int> color_counts;
  int forest_height = 0;         // height of the forest the DP ran on
  std::size_t table_cells = 0;   // total DP cells created (diagnostic)
};

struct ColoredDpOptions {
  int threads = 1;
};

// Exact solver over an elimination forest valid for the host. Each vertex
// v owns the edges to its ancestors. Bottom-up, a table maps (degree
// increments already committed to each ancestor, edges used per colour) to
// the best partial objective; children are combined by max-plus
// convolution, v's own edges are added one at a time, and f_v is applied
// once v's degree is known. Root tables are merged under a virtual
// super-root that demands exactly m_k edges of colour k. Without a
// colouring there is no count constraint.
//
// Throws PreconditionError (naming an edge) if the forest is not valid.
ColoredSolution solve_colored_dp(const Graph& host, const EliminationForest& forest,
                                 const std::optional<EdgeColoring>& coloring, const SeparableObjective& objective,
                                 const ColoredDpOptions& options = {});

inline constexpr std::size_t kColoredBruteForceEdgeCap = 20;

// Exhaustive enumeration of all edge subsets meeting the colour counts.
// Ties go to the lexicographically smallest edge-index list.
ColoredSolution solve_colored_bruteforce(const Graph& host, const std::optional<EdgeColoring>& coloring,
                                         const SeparableObjective& objective,
                                         std::size_t edge_cap = kColoredBruteForceEdgeCap);

}  // namespace degopt
