#pragma once

#include <optional>
#include <vector>

#include "degopt/chamber.hpp"
#include "degopt/graph.hpp"
#include "degopt/objective.hpp"

namespace degopt {

struct MultiCriteriaOptions {
  // Witness count grows like g^(r-1); larger r must be asked for explicitly.
  int max_criteria = 4;
  int threads = 1;
  // Keep every per-witness oracle answer in the solution.
  bool keep_candidates = false;
};

// One oracle query: the lifted functional u = sum_k c_k w_k and its answer.
struct WitnessQuery {
  std::vector<Value> functional;
  EdgeSubset subset;
  std::vector<Value> criteria_point;
  Value value = 0;
};

struct MultiCriteriaSolution {
  EdgeSubset subset;
  std::vector<Value> criteria_point;
  Value value = 0;
  std::size_t oracle_queries = 0;
  std::size_t witness_count = 0;
  std::size_t generator_count = 0;
  int span_dim = 0;
  // f was an oracle not vouched convex: value is only a lower bound.
  bool lower_bound_only = false;
  std::vector<WitnessQuery> candidates;
};

// Chamber witnesses and their lifted functionals for one (H, W) pair; does
// not depend on m, so it can be reused across edge counts.
struct ChamberPlan {
  DirectionKind kind = DirectionKind::prescribed;
  ProjectedGenerators generators;
  std::vector<ChamberWitness> witnesses;
  std::vector<std::vector<Value>> functionals;  // u per witness, in Z^n
};

ChamberPlan plan_chambers(const Graph& host, DirectionKind kind, const std::vector<std::vector<Value>>& weights,
                          const MultiCriteriaOptions& options = {});

// u = sum_k c_k w_k, divided by the gcd of its entries.
std::vector<Value> lift_witness(const ChamberWitness& witness, const std::vector<std::vector<Value>>& weights, int n);

MultiCriteriaSolution maximize_multicriteria(const Graph& host, std::size_t m, const MultiCriteriaObjective& objective,
                                             const MultiCriteriaOptions& options = {});
MultiCriteriaSolution maximize_multicriteria(const Graph& host, std::size_t m, const MultiCriteriaObjective& objective,
                                             const ChamberPlan& plan, const MultiCriteriaOptions& options = {});

MultiCriteriaSolution maximize_multicriteria_unprescribed(const Graph& host, const MultiCriteriaObjective& objective,
                                                          const MultiCriteriaOptions& options = {});
MultiCriteriaSolution maximize_multicriteria_unprescribed(const Graph& host, const MultiCriteriaObjective& objective,
                                                          const ChamberPlan& plan,
                                                          const MultiCriteriaOptions& options = {});

// Exhaustive search over all m-edge subsets (or all subsets when m is
// absent). Validation oracle; |E| <= cap.
MultiCriteriaSolution multicriteria_bruteforce(const Graph& host, std::optional<std::size_t> m,
                                               const MultiCriteriaObjective& objective, std::size_t edge_cap = 22);

}  // namespace degopt
