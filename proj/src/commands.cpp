#include "degopt/commands.hpp"

#include <chrono>

#include "degopt/colored.hpp"
#include "degopt/error.hpp"
#include "degopt/gadgets.hpp"
#include "degopt/ip_model.hpp"
#include "degopt/multicriteria.hpp"
#include "degopt/treedepth.hpp"

namespace degopt {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

Json edge_list(const Graph& g, const EdgeSubset& s) {
  Json out = Json::array();
  for (std::size_t e : s.indices()) out.push_back({g.edge(e).u + 1, g.edge(e).v + 1});
  return out;
}

Json parents_one_based(const std::vector<int>& parent) {
  Json out = Json::array();
  for (int p : parent) out.push_back(p + 1);
  return out;
}

Json base_report(const Instance& instance, const char* solver) {
  Json r;
  r["instance_digest"] = instance_digest(instance);
  r["solver"] = solver;
  r["feasible"] = false;
  r["value"] = nullptr;
  r["witness_edges"] = nullptr;
  r["color_counts"] = nullptr;
  r["criteria_point"] = nullptr;
  r["oracle_queries"] = 0;
  r["wall_time_seconds"] = 0.0;
  r["details"] = Json::object();
  return r;
}

void self_check(bool ok) {
  if (!ok) throw Error("internal error: witness does not re-evaluate to the reported value");
}

}  // namespace

Json solve_multi_report(const Instance& instance, const SolveMultiOptions& options) {
  if (!instance.criteria) throw InputError("criteria: required by solve-multi");
  if (options.m && options.unprescribed) throw InputError("pass either --m or --unprescribed, not both");
  if (!options.m && !options.unprescribed) throw InputError("pass --m or --unprescribed");
  const auto start = Clock::now();
  const Graph& g = instance.graph;
  const MultiCriteriaObjective& obj = *instance.criteria;

  MultiCriteriaOptions mopts;
  mopts.threads = options.threads;
  mopts.max_criteria = options.max_criteria;
  std::optional<std::size_t> m = options.unprescribed ? std::nullopt : options.m;

  MultiCriteriaSolution sol;
  if (options.brute) {
    if (obj.num_criteria() > mopts.max_criteria)
      throw LimitError("r=" + std::to_string(obj.num_criteria()) + " exceeds the criteria cap " +
                       std::to_string(mopts.max_criteria));
    sol = multicriteria_bruteforce(g, m, obj);
  } else if (m) {
    sol = maximize_multicriteria(g, *m, obj, mopts);
  } else {
    sol = maximize_multicriteria_unprescribed(g, obj, mopts);
  }

  const DegreeSequence d = degree_sequence(g, sol.subset);
  self_check(obj.criteria_point(d) == sol.criteria_point && obj.f(sol.criteria_point) == sol.value &&
             (!m || sol.subset.count() == *m));

  Json r = base_report(instance, options.brute ? "multicriteria-bruteforce" : "multicriteria-chambers");
  r["feasible"] = true;
  r["value"] = sol.value;
  r["witness_edges"] = edge_list(g, sol.subset);
  r["criteria_point"] = sol.criteria_point;
  r["oracle_queries"] = sol.oracle_queries;
  Json& det = r["details"];
  if (m) det["m"] = *m;
  else det["unprescribed"] = true;
  det["criteria"] = obj.num_criteria();
  if (!options.brute) {
    det["generators"] = sol.generator_count;
    det["span_dim"] = sol.span_dim;
    det["chamber_witnesses"] = sol.witness_count;
  }
  det["lower_bound_only"] = sol.lower_bound_only;
  r["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Json solve_colored_report(const Instance& instance, const SolveColoredOptions& options) {
  const Graph& g = instance.graph;
  const auto start = Clock::now();

  if (instance.weights) {
    if (!options.brute)
      throw PreconditionError("weighted instances have no polynomial solver here; pass --brute");
    const WeightedInstance wi = instance.weighted();
    const WeightedOptimum opt = weighted_bruteforce(wi, instance.coloring);
    Json r = base_report(instance, "weighted-bruteforce");
    r["feasible"] = opt.feasible;
    if (opt.feasible) {
      self_check(weighted_objective_eval(wi, opt.subset) == opt.value &&
                 (!instance.coloring || instance.coloring->counts_of(opt.subset) == instance.coloring->counts));
      r["value"] = opt.value;
      r["witness_edges"] = edge_list(g, opt.subset);
      if (instance.coloring) r["color_counts"] = instance.coloring->counts_of(opt.subset);
    }
    r["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }

  if (!instance.vertex_functions) throw InputError("vertex_functions: required by solve-colored");
  const SeparableObjective& f = *instance.vertex_functions;

  ColoredSolution sol;
  Json forest_info = Json::object();
  if (options.brute) {
    sol = solve_colored_bruteforce(g, instance.coloring, f);
  } else {
    EliminationForest forest;
    const char* source = "heuristic";
    switch (options.source) {
      case ForestSource::given:
        forest = EliminationForest(options.forest);
        source = "file";
        break;
      case ForestSource::exact:
        forest = treedepth_exact(g).forest;
        source = "exact";
        break;
      case ForestSource::heuristic:
        forest = heuristic_forest(g);
        break;
      case ForestSource::automatic:
        if (instance.forest) {
          forest = EliminationForest(*instance.forest);
          source = "instance";
        } else {
          forest = heuristic_forest(g);
        }
        break;
    }
    if (forest.size() != g.num_vertices())
      throw PreconditionError("forest has " + std::to_string(forest.size()) + " vertices; the graph has " +
                              std::to_string(g.num_vertices()));
    ColoredDpOptions dopts;
    dopts.threads = options.threads;
    sol = solve_colored_dp(g, forest, instance.coloring, f, dopts);
    forest_info["source"] = source;
    forest_info["height"] = forest.height();
    forest_info["parent"] = parents_one_based(forest.parents());
  }

  Json r = base_report(instance, options.brute ? "colored-bruteforce" : "colored-dp");
  r["feasible"] = sol.feasible;
  if (sol.feasible) {
    self_check(evaluate_separable(f, degree_sequence(g, sol.subset)) == sol.value &&
               (!instance.coloring || instance.coloring->counts_of(sol.subset) == instance.coloring->counts));
    r["value"] = sol.value;
    r["witness_edges"] = edge_list(g, sol.subset);
    if (instance.coloring) r["color_counts"] = instance.coloring->counts_of(sol.subset);
  }
  Json& det = r["details"];
  if (instance.coloring) det["target_counts"] = instance.coloring->counts;
  if (!options.brute) {
    det["forest"] = std::move(forest_info);
    det["table_cells"] = sol.table_cells;
  }
  r["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Json treedepth_report(const Instance& instance, bool heuristic) {
  const Graph& g = instance.graph;
  Json r;
  r["instance_digest"] = instance_digest(instance);
  r["n"] = g.num_vertices();
  if (heuristic) {
    const EliminationForest f = heuristic_forest(g);
    r["exact"] = false;
    r["treedepth_upper_bound"] = f.height();
    r["height"] = f.height();
    r["parent"] = parents_one_based(f.parents());
  } else {
    const TreeDepthResult td = treedepth_exact(g);
    r["exact"] = true;
    r["treedepth"] = td.depth;
    r["height"] = td.forest.height();
    r["parent"] = parents_one_based(td.forest.parents());
  }
  return r;
}

std::string emit_ip_text(const Instance& instance) {
  if (instance.weights) throw PreconditionError("the IP model covers unweighted instances only");
  if (!instance.vertex_functions) throw InputError("vertex_functions: required by emit-ip");
  return serialize_ip(build_colored_ip(instance.graph, instance.coloring, *instance.vertex_functions));
}

}  // namespace degopt
