#include "degopt/ip_model.hpp"

#include <algorithm>
#include <sstream>

#include "degopt/error.hpp"

namespace degopt {

Value IpModel::max_abs_coefficient() const {
  Value a = 0;
  for (const auto& row : constraints)
    for (const auto& t : row.terms) a = std::max(a, checked::abs(t.coef));
  return a;
}

IpModel build_colored_ip(const Graph& host, const std::optional<EdgeColoring>& coloring,
                         const SeparableObjective& objective) {
  if (objective.num_vertices() != static_cast<std::size_t>(host.num_vertices()))
    throw InputError("objective does not match the graph");
  if (coloring) coloring->validate(host);
  const int n = host.num_vertices();
  IpModel model;
  model.n = n;
  model.num_edges = host.num_edges();
  model.num_colors = coloring ? coloring->num_colors() : 0;

  for (const Edge& e : host.edges()) {
    model.variables.push_back("x_" + std::to_string(e.u + 1) + "_" + std::to_string(e.v + 1));
    model.objective.push_back(0);
  }
  for (int i = 0; i < n; ++i) {
    model.y_offset.push_back(model.variables.size());
    for (int j = 0; j <= host.degree(i); ++j) {
      model.variables.push_back("y_" + std::to_string(i + 1) + "_" + std::to_string(j));
      model.objective.push_back(objective.at(i, j));
    }
  }

  for (int i = 0; i < n; ++i) {
    IpConstraint row{"a_" + std::to_string(i + 1), {}, 0};
    for (std::size_t e : host.incident(i)) row.terms.push_back({model.x_index(e), 1});
    for (int j = 1; j <= host.degree(i); ++j) row.terms.push_back({model.y_index(i, j), -static_cast<Value>(j)});
    model.constraints.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    IpConstraint row{"b_" + std::to_string(i + 1), {}, 1};
    for (int j = 0; j <= host.degree(i); ++j) row.terms.push_back({model.y_index(i, j), 1});
    model.constraints.push_back(std::move(row));
  }
  for (int k = 0; k < model.num_colors; ++k) {
    IpConstraint row{"c_" + std::to_string(k + 1), {}, coloring->counts[static_cast<std::size_t>(k)]};
    for (std::size_t e = 0; e < host.num_edges(); ++e)
      if (coloring->color[e] == k) row.terms.push_back({model.x_index(e), 1});
    model.constraints.push_back(std::move(row));
  }
  return model;
}

std::optional<std::size_t> violated_row(const IpModel& model, const IpAssignment& assignment) {
  if (assignment.size() != model.variables.size())
    throw PreconditionError("assignment has " + std::to_string(assignment.size()) + " entries; the model has " +
                            std::to_string(model.variables.size()) + " variables");
  for (std::uint8_t v : assignment)
    if (v > 1) throw PreconditionError("assignment is not binary");
  for (std::size_t r = 0; r < model.constraints.size(); ++r) {
    Value lhs = 0;
    for (const auto& t : model.constraints[r].terms)
      if (assignment[t.var]) lhs = checked::add(lhs, t.coef);
    if (lhs != model.constraints[r].rhs) return r;
  }
  return std::nullopt;
}

Value ip_objective_value(const IpModel& model, const IpAssignment& assignment) {
  Value v = 0;
  for (std::size_t k = 0; k < assignment.size(); ++k)
    if (assignment[k]) v = checked::add(v, model.objective.at(k));
  return v;
}

SubgraphValue ip_assignment_to_subgraph(const IpModel& model, const IpAssignment& assignment) {
  if (auto r = violated_row(model, assignment)) {
    const auto& row = model.constraints[*r];
    throw InfeasibleAssignmentError(row.name, "assignment violates row " + row.name);
  }
  SubgraphValue out;
  out.subset = EdgeSubset(model.num_edges);
  for (std::size_t e = 0; e < model.num_edges; ++e)
    if (assignment[model.x_index(e)]) out.subset.set(e);
  out.value = ip_objective_value(model, assignment);
  return out;
}

IpAssignment subgraph_to_ip_assignment(const Graph& host, const EdgeSubset& subset) {
  const DegreeSequence d = degree_sequence(host, subset);
  IpAssignment a;
  a.reserve(host.num_edges() * 3 + static_cast<std::size_t>(host.num_vertices()));
  for (std::size_t e = 0; e < host.num_edges(); ++e) a.push_back(subset.contains(e) ? 1 : 0);
  for (int i = 0; i < host.num_vertices(); ++i)
    for (int j = 0; j <= host.degree(i); ++j) a.push_back(j == d[static_cast<std::size_t>(i)] ? 1 : 0);
  return a;
}

std::string serialize_ip(const IpModel& model) {
  std::ostringstream out;
  out << "# degopt-ip n=" << model.n << " edges=" << model.num_edges << " colors=" << model.num_colors
      << " variables=" << model.variables.size() << " constraints=" << model.constraints.size() << "\n";
  for (const auto& name : model.variables) out << "VAR " << name << " BIN\n";
  out << "MAX";
  for (std::size_t k = model.num_edges; k < model.variables.size(); ++k)
    out << ' ' << model.variables[k] << ' ' << model.objective[k];
  out << "\n";
  for (const auto& row : model.constraints) {
    out << "EQ " << row.name << ' ' << row.rhs;
    for (const auto& t : row.terms) out << ' ' << model.variables[t.var] << ' ' << t.coef;
    out << "\n";
  }
  return out.str();
}

namespace {

class IpSearch {
 public:
  explicit IpSearch(const IpModel& model) : model_(model) {
    const std::size_t nv = model.variables.size();
    occurrences_.assign(nv, {});
    for (std::size_t r = 0; r < model.constraints.size(); ++r)
      for (const auto& t : model.constraints[r].terms) occurrences_[t.var].push_back({r, t.coef});
    sum_.assign(model.constraints.size(), 0);
    rem_lo_.assign(model.constraints.size(), 0);
    rem_hi_.assign(model.constraints.size(), 0);
    for (std::size_t r = 0; r < model.constraints.size(); ++r)
      for (const auto& t : model.constraints[r].terms) (t.coef < 0 ? rem_lo_[r] : rem_hi_[r]) += t.coef;
    positive_suffix_.assign(nv + 1, 0);
    for (std::size_t k = nv; k-- > 0;)
      positive_suffix_[k] = checked::add(positive_suffix_[k + 1], std::max<Value>(0, model.objective[k]));
    current_.assign(nv, 0);
  }

  IpSolveResult run() {
    for (std::size_t r = 0; r < model_.constraints.size(); ++r)
      if (!row_open(r)) return result_;
    dfs(0, 0);
    return result_;
  }

 private:
  bool row_open(std::size_t r) const {
    const Value rhs = model_.constraints[r].rhs;
    return sum_[r] + rem_lo_[r] <= rhs && rhs <= sum_[r] + rem_hi_[r];
  }

  // Fixes variable k to `value`; returns false if some row became infeasible.
  bool assign(std::size_t k, int value) {
    bool ok = true;
    for (const auto& [r, coef] : occurrences_[k]) {
      (coef < 0 ? rem_lo_[r] : rem_hi_[r]) -= coef;
      if (value) sum_[r] += coef;
      ok = ok && row_open(r);
    }
    return ok;
  }

  void undo(std::size_t k, int value) {
    for (const auto& [r, coef] : occurrences_[k]) {
      (coef < 0 ? rem_lo_[r] : rem_hi_[r]) += coef;
      if (value) sum_[r] -= coef;
    }
  }

  void dfs(std::size_t k, Value value) {
    ++result_.nodes;
    if (result_.feasible && checked::add(value, positive_suffix_[k]) <= result_.value) return;
    if (k == current_.size()) {
      result_.feasible = true;
      result_.value = value;
      result_.assignment = current_;
      return;
    }
    const int first = model_.objective[k] > 0 ? 1 : 0;
    for (int v : {first, 1 - first}) {
      current_[k] = static_cast<std::uint8_t>(v);
      if (assign(k, v)) dfs(k + 1, v ? checked::add(value, model_.objective[k]) : value);
      undo(k, v);
    }
    current_[k] = 0;
  }

  const IpModel& model_;
  std::vector<std::vector<std::pair<std::size_t, Value>>> occurrences_;
  std::vector<Value> sum_, rem_lo_, rem_hi_, positive_suffix_;
  IpAssignment current_;
  IpSolveResult result_;
};

}  // namespace

IpSolveResult solve_ip_bruteforce(const IpModel& model, std::size_t variable_cap) {
  if (model.variables.size() > variable_cap)
    throw LimitError("IP brute force is capped at " + std::to_string(variable_cap) + " variables; the model has " +
                     std::to_string(model.variables.size()));
  return IpSearch(model).run();
}

}  // namespace degopt
