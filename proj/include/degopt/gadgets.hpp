#pragma once

#include <optional>
#include <vector>

#include "degopt/instance.hpp"

namespace degopt {

// Reductions from factor, matching, cubic-subgraph and partition questions to
// degree-sequence instances. Every generator produces an Instance whose
// optimum is 0 exactly when the source question has answer YES; instances
// without a colouring are meant for the unprescribed problem. `meta.gadget`
// records the construction.

// f_i = 0 on B_i, -1 elsewhere on {0..d_i(H)}.
Instance general_factor_instance(const Graph& host, const std::vector<std::vector<int>>& admissible);

// z - l below l, 0 on [l, u], u - z above u. Requires 0 <= l_i <= u_i <= d_i(H).
SeparableObjective lu_factor_objective(const Graph& host, const std::vector<int>& lower, const std::vector<int>& upper);

// K_{r,r} (sides {0..r-1}, {r..2r-1}) with colour classes given per edge in
// canonical edge order and f_i(z) = -(z - 1)^2. meta.sum_counts_matches_r
// is false when sum m_k != r, in which case 0 is unreachable.
Instance exact_matching_instance(int r, const std::vector<int>& edge_colors, const std::vector<int>& counts);

// f_i(0) = f_i(3) = 0, else -1, over each vertex's domain.
Instance cubic_subgraph_instance(const Graph& host);

// side[i] true for I (f = -(z-1)^2, concave), false for J (f = z(z-3),
// convex). Throws InputError if an edge does not cross the bipartition.
Instance bipartite_concave_convex_instance(const Graph& host, const std::vector<bool>& side);

// L: original vertices 0..n-1, subdivision vertex n+e per edge e of H, apex
// s = n+|E|. f_i(z) = z^2, f_s(z) = -a(z-m)^2, f_e(z) = a z(z-3) with
// a = 1 + n(n-1)^2.
Instance subdivision_hardness_instance(const Graph& host, int m);
Value subdivision_penalty(const Graph& host);
// Edges of H whose subdivision vertex has degree 3 in the L-subgraph.
EdgeSubset extract_subdivision_edges(const Graph& host, const Graph& subdivided, const EdgeSubset& subset);

// K_{2,q}: v1 = 0, v2 = 1, column j = 2 + j, both edges at column j weigh
// a_j. f_{v1}(z) = -(2z - sum a)^2, every other function zero.
Instance partition_gadget(const std::vector<Value>& sizes);

Value weighted_objective_eval(const WeightedInstance& instance, const EdgeSubset& subset);

struct WeightedOptimum {
  EdgeSubset subset;
  Value value = 0;
  bool feasible = false;
};

// Exhaustive; honours colour counts when given. Capped at 20 edges.
WeightedOptimum weighted_bruteforce(const WeightedInstance& instance,
                                    const std::optional<EdgeColoring>& coloring = std::nullopt,
                                    std::size_t edge_cap = 20);

}  // namespace degopt
