#include "degopt/multicriteria.hpp"

#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "degopt/error.hpp"
#include "degopt/linear_oracle.hpp"

namespace degopt {

namespace {

void check_objective(const Graph& host, const MultiCriteriaObjective& objective, const MultiCriteriaOptions& options) {
  objective.validate(host.num_vertices());
  if (objective.num_criteria() > options.max_criteria)
    throw LimitError("r=" + std::to_string(objective.num_criteria()) + " exceeds the criteria cap " +
                     std::to_string(options.max_criteria));
}

bool better(Value value, const EdgeSubset& subset, Value best_value, const EdgeSubset& best_subset) {
  if (value != best_value) return value > best_value;
  return EdgeSubset::index_order_less(subset, best_subset);
}

// Runs fn(k) for k in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < count; k += workers) fn(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

MultiCriteriaSolution solve(const Graph& host, std::optional<std::size_t> m, const MultiCriteriaObjective& objective,
                            const ChamberPlan& plan, const MultiCriteriaOptions& options) {
  check_objective(host, objective, options);
  if (m && *m > host.num_edges())
    throw PreconditionError("m=" + std::to_string(*m) + " is outside [0, " + std::to_string(host.num_edges()) + "]");

  std::vector<WitnessQuery> queries(plan.functionals.size());
  parallel_for(queries.size(), options.threads, [&](std::size_t k) {
    const auto& u = plan.functionals[k];
    LinOptResult r = m ? linopt_prescribed(host, *m, u) : linopt_unprescribed(host, u);
    WitnessQuery& q = queries[k];
    q.functional = u;
    q.criteria_point = objective.criteria_point(r.point);
    q.value = objective.f(q.criteria_point);
    q.subset = std::move(r.subset);
  });

  MultiCriteriaSolution sol;
  sol.oracle_queries = queries.size();
  sol.witness_count = plan.witnesses.size();
  sol.generator_count = plan.generators.size();
  sol.span_dim = plan.generators.span_dim;
  sol.lower_bound_only = !objective.f.trusted_convex();
  bool have = false;
  for (const auto& q : queries) {
    if (!have || better(q.value, q.subset, sol.value, sol.subset)) {
      sol.value = q.value;
      sol.subset = q.subset;
      sol.criteria_point = q.criteria_point;
      have = true;
    }
  }
  if (!have) throw Error("internal error: no chamber witness was produced");
  if (options.keep_candidates) sol.candidates = std::move(queries);
  return sol;
}

}  // namespace

std::vector<Value> lift_witness(const ChamberWitness& witness, const std::vector<std::vector<Value>>& weights, int n) {
  std::vector<Value> u(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const Value c = witness.functional.at(k);
    if (c == 0) continue;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = checked::add(u[i], checked::mul(c, weights[k][i]));
  }
  Value g = 0;
  for (Value x : u) g = std::gcd(g, x);
  if (g > 1)
    for (Value& x : u) x /= g;
  return u;
}

ChamberPlan plan_chambers(const Graph& host, DirectionKind kind, const std::vector<std::vector<Value>>& weights,
                          const MultiCriteriaOptions& options) {
  if (weights.empty()) throw InputError("at least one criterion is required");
  if (static_cast<int>(weights.size()) > options.max_criteria)
    throw LimitError("r=" + std::to_string(weights.size()) + " exceeds the criteria cap " +
                     std::to_string(options.max_criteria));
  for (const auto& w : weights)
    if (w.size() != static_cast<std::size_t>(host.num_vertices()))
      throw InputError("criterion length does not match the vertex count");
  ChamberPlan plan;
  plan.kind = kind;
  const DirectionSet d = kind == DirectionKind::prescribed ? directions_prescribed(host) : directions_unprescribed(host);
  plan.generators = project_directions(d, weights);
  plan.witnesses = enumerate_chamber_witnesses(plan.generators);
  plan.functionals.reserve(plan.witnesses.size());
  for (const auto& w : plan.witnesses) plan.functionals.push_back(lift_witness(w, weights, host.num_vertices()));
  return plan;
}

MultiCriteriaSolution maximize_multicriteria(const Graph& host, std::size_t m, const MultiCriteriaObjective& objective,
                                             const MultiCriteriaOptions& options) {
  check_objective(host, objective, options);
  if (m > host.num_edges())
    throw PreconditionError("m=" + std::to_string(m) + " is outside [0, " + std::to_string(host.num_edges()) + "]");
  return solve(host, m, objective, plan_chambers(host, DirectionKind::prescribed, objective.weights, options), options);
}

MultiCriteriaSolution maximize_multicriteria(const Graph& host, std::size_t m, const MultiCriteriaObjective& objective,
                                             const ChamberPlan& plan, const MultiCriteriaOptions& options) {
  if (plan.kind != DirectionKind::prescribed) throw PreconditionError("chamber plan was built for the unprescribed set");
  return solve(host, m, objective, plan, options);
}

MultiCriteriaSolution maximize_multicriteria_unprescribed(const Graph& host, const MultiCriteriaObjective& objective,
                                                          const MultiCriteriaOptions& options) {
  check_objective(host, objective, options);
  return solve(host, std::nullopt, objective,
               plan_chambers(host, DirectionKind::unprescribed, objective.weights, options), options);
}

MultiCriteriaSolution maximize_multicriteria_unprescribed(const Graph& host, const MultiCriteriaObjective& objective,
                                                          const ChamberPlan& plan,
                                                          const MultiCriteriaOptions& options) {
  if (plan.kind != DirectionKind::unprescribed) throw PreconditionError("chamber plan was built for the prescribed set");
  return solve(host, std::nullopt, objective, plan, options);
}

MultiCriteriaSolution multicriteria_bruteforce(const Graph& host, std::optional<std::size_t> m,
                                               const MultiCriteriaObjective& objective, std::size_t edge_cap) {
  objective.validate(host.num_vertices());
  const std::size_t ne = host.num_edges();
  if (ne > edge_cap || ne >= 63)
    throw LimitError("brute force is capped at " + std::to_string(edge_cap) + " edges; got " + std::to_string(ne));
  if (m && *m > ne) throw PreconditionError("m=" + std::to_string(*m) + " is outside [0, " + std::to_string(ne) + "]");

  MultiCriteriaSolution best;
  best.lower_bound_only = false;
  bool have = false;
  const std::uint64_t limit = std::uint64_t{1} << ne;
  DegreeSequence d(static_cast<std::size_t>(host.num_vertices()));
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (m && static_cast<std::size_t>(__builtin_popcountll(mask)) != *m) continue;
    std::fill(d.begin(), d.end(), 0);
    EdgeSubset s(ne);
    for (std::size_t e = 0; e < ne; ++e) {
      if (!(mask >> e & 1)) continue;
      s.set(e);
      ++d[static_cast<std::size_t>(host.edge(e).u)];
      ++d[static_cast<std::size_t>(host.edge(e).v)];
    }
    auto y = objective.criteria_point(d);
    const Value v = objective.f(y);
    if (!have || better(v, s, best.value, best.subset)) {
      best.value = v;
      best.subset = std::move(s);
      best.criteria_point = std::move(y);
      have = true;
    }
    ++best.oracle_queries;
  }
  return best;
}

}  // namespace degopt
