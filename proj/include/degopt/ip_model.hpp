#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degopt/graph.hpp"

namespace degopt {

struct IpTerm {
  std::size_t var = 0;
  Value coef = 0;
};

struct IpConstraint {
  std::string name;
  std::vector<IpTerm> terms;  // nonzero coefficients, ascending variable index
  Value rhs = 0;
};

// max c.x  s.t.  A x = b,  x binary. The colored degree model has variables
//   x_e            one per edge, objective 0
//   y_i^j          one per vertex i and j in {0..d_i(H)}, objective f_i(j)
// and rows
//   a_i :  sum_{e ∋ i} x_e - sum_j j y_i^j = 0
//   b_i :  sum_j y_i^j = 1
//   c_k :  sum_{e in E_k} x_e = m_k
struct IpModel {
  std::vector<std::string> variables;
  std::vector<Value> objective;
  std::vector<IpConstraint> constraints;

  int n = 0;
  std::size_t num_edges = 0;
  int num_colors = 0;
  std::vector<std::size_t> y_offset;  // index of y_i^0

  std::size_t x_index(std::size_t e) const { return e; }
  std::size_t y_index(int i, int j) const { return y_offset.at(static_cast<std::size_t>(i)) + static_cast<std::size_t>(j); }
  // ||A||_inf
  Value max_abs_coefficient() const;
};

using IpAssignment = std::vector<std::uint8_t>;

// Raised when an assignment violates a row; `row` names it (a_3, b_1, ...).
class InfeasibleAssignmentError : public PreconditionError {
 public:
  InfeasibleAssignmentError(std::string row, const std::string& what) : PreconditionError(what), row_(std::move(row)) {}
  const std::string& row() const { return row_; }

 private:
  std::string row_;
};

// Without a colouring the c rows are omitted (unprescribed problem).
IpModel build_colored_ip(const Graph& host, const std::optional<EdgeColoring>& coloring,
                         const SeparableObjective& objective);

struct SubgraphValue {
  EdgeSubset subset;
  Value value = 0;
};

// F = {e : x_e = 1}; throws InfeasibleAssignmentError naming the first
// violated row.
SubgraphValue ip_assignment_to_subgraph(const IpModel& model, const IpAssignment& assignment);
// x_e = [e in F], y_i^j = [j = d_i(F)].
IpAssignment subgraph_to_ip_assignment(const Graph& host, const EdgeSubset& subset);
Value ip_objective_value(const IpModel& model, const IpAssignment& assignment);
// First violated row, if any.
std::optional<std::size_t> violated_row(const IpModel& model, const IpAssignment& assignment);

// Line-oriented text: header comment, VAR lines (x by edge, then y by (i,j)),
// one MAX line, EQ rows a_1..a_n, b_1..b_n, c_1..c_p.
std::string serialize_ip(const IpModel& model);

struct IpSolveResult {
  bool feasible = false;
  IpAssignment assignment;
  Value value = 0;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kIpBruteForceVariableCap = 24;

// Depth-first enumeration over binary assignments in variable order, pruned
// by row-activity bounds and by the objective bound.
IpSolveResult solve_ip_bruteforce(const IpModel& model, std::size_t variable_cap = kIpBruteForceVariableCap);

}  // namespace degopt
