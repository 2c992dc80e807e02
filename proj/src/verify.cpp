#include "degopt/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "degopt/colored.hpp"
#include "degopt/error.hpp"
#include "degopt/gadgets.hpp"
#include "degopt/generators.hpp"
#include "degopt/instance.hpp"
#include "degopt/ip_model.hpp"
#include "degopt/multicriteria.hpp"
#include "degopt/treedepth.hpp"

namespace degopt {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed(); });
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed();
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    if (!c.passed()) j["counterexample"] = c.counterexample;
    out["checks"].push_back(std::move(j));
  }
  return out;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"small-multi", "small-colored", "ip-equivalence", "treedepth",
                                              "gadgets"};
  return names;
}

namespace {

using Json = nlohmann::ordered_json;

// Records one case; keeps the first counterexample.
void record(VerifyCheck& check, bool ok, const std::function<Json()>& describe) {
  ++check.cases;
  if (ok) return;
  if (check.failures++ == 0) check.counterexample = describe();
}

VerifyCheck& check_named(VerifyReport& report, const std::string& name) {
  for (auto& c : report.checks)
    if (c.name == name) return c;
  if (report.checks.size() == report.checks.capacity()) throw Error("internal error: too many checks in one suite");
  report.checks.push_back(VerifyCheck{name, 0, 0, nullptr});
  return report.checks.back();
}

Json instance_json(const Instance& inst) { return Json::parse(serialize_instance(inst)); }

Instance make_instance(const Graph& g, const std::optional<EdgeColoring>& coloring,
                       const std::optional<SeparableObjective>& objective) {
  Instance inst;
  inst.graph = g;
  inst.coloring = coloring;
  inst.vertex_functions = objective;
  return inst;
}

// ---------------------------------------------------------------- small-multi

using Point2 = std::array<Value, 2>;

__int128 cross(const Point2& o, const Point2& a, const Point2& b) {
  return static_cast<__int128>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<__int128>(a[1] - o[1]) * (b[0] - o[0]);
}

// Vertices of the convex hull (collinear points dropped).
std::vector<Point2> hull_vertices(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<Graph> multi_corpus(Rng& rng) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : connected_graphs(n)) graphs.push_back(std::move(g));
  for (int k = 0; k < 100; ++k) {
    const int n = static_cast<int>(rng.uniform(2, 8));
    const auto max_edges = std::min<std::int64_t>(n * (n - 1) / 2, 12);
    graphs.push_back(random_graph(n, static_cast<std::size_t>(rng.uniform(1, max_edges)), rng));
  }
  return graphs;
}

ConvexFunction random_of_kind(bool max_affine, int r, Rng& rng) {
  auto term = [&] {
    AffineTerm t;
    for (int k = 0; k < r; ++k) t.alpha.push_back(rng.uniform(-3, 3));
    t.beta = rng.uniform(-5, 5);
    return t;
  };
  if (max_affine) {
    MaxAffine f;
    for (auto c = rng.uniform(1, 3); c > 0; --c) f.terms.push_back(term());
    return f;
  }
  SumSquaredAffine f;
  for (auto c = rng.uniform(1, 2); c > 0; --c) f.terms.push_back(term());
  return f;
}

void suite_small_multi(VerifyReport& report, const VerifyOptions& options) {
  Rng rng(options.seed);
  auto& exact = check_named(report, "prescribed optimum equals brute force");
  auto& unpres = check_named(report, "unprescribed optimum equals max over m");
  auto& unpres_brute = check_named(report, "unprescribed optimum equals brute force");
  auto& complete = check_named(report, "r=2 witnesses attain every hull vertex");

  MultiCriteriaOptions mopts;
  mopts.threads = options.threads;
  mopts.keep_candidates = true;

  for (const Graph& g : multi_corpus(rng)) {
    const int n = g.num_vertices();
    const std::size_t ne = g.num_edges();
    for (int r = 1; r <= 3; ++r) {
      for (int t = 0; t < 20; ++t) {
        const auto w = random_weights(r, n, -3, 3, rng);
        const ChamberPlan plan = plan_chambers(g, DirectionKind::prescribed, w, mopts);
        const ChamberPlan uplan = plan_chambers(g, DirectionKind::unprescribed, w, mopts);

        // Criteria points of every subset, grouped by size.
        std::vector<std::vector<std::vector<Value>>> points(ne + 1);
        MultiCriteriaObjective probe{w, ConvexFunction::zero(r)};
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
          DegreeSequence d(static_cast<std::size_t>(n), 0);
          for (std::size_t e = 0; e < ne; ++e)
            if (mask >> e & 1) {
              ++d[static_cast<std::size_t>(g.edge(e).u)];
              ++d[static_cast<std::size_t>(g.edge(e).v)];
            }
          points[static_cast<std::size_t>(std::popcount(mask))].push_back(probe.criteria_point(d));
        }

        for (bool kind : {true, false}) {
          MultiCriteriaObjective obj{w, random_of_kind(kind, r, rng)};
          auto describe = [&](std::optional<std::size_t> m) {
            return [&, m] {
              Instance inst = make_instance(g, std::nullopt, std::nullopt);
              inst.criteria = obj;
              Json j;
              j["instance"] = instance_json(inst);
              if (m) j["m"] = *m;
              else j["unprescribed"] = true;
              return j;
            };
          };
          Value best_over_m = 0;
          Value brute_all = 0;
          for (std::size_t m = 0; m <= ne; ++m) {
            const auto sol = maximize_multicriteria(g, m, obj, plan, mopts);
            Value brute = obj.f(points[m].front());
            for (const auto& y : points[m]) brute = std::max(brute, obj.f(y));
            record(exact, sol.value == brute, describe(m));
            best_over_m = m == 0 ? sol.value : std::max(best_over_m, sol.value);
            brute_all = m == 0 ? brute : std::max(brute_all, brute);

            if (r == 2 && kind) {
              std::set<std::vector<Value>> attained;
              for (const auto& q : sol.candidates) attained.insert(q.criteria_point);
              std::vector<Point2> pts;
              for (const auto& y : points[m]) pts.push_back({y[0], y[1]});
              bool ok = true;
              for (const auto& v : hull_vertices(pts)) ok = ok && attained.count({v[0], v[1]}) > 0;
              record(complete, ok, describe(m));
            }
          }
          const auto u = maximize_multicriteria_unprescribed(g, obj, uplan, mopts);
          record(unpres, u.value == best_over_m, describe(std::nullopt));
          record(unpres_brute, u.value == brute_all, describe(std::nullopt));
        }
      }
    }
  }
}

// -------------------------------------------------------------- small-colored

void suite_small_colored(VerifyReport& report, const VerifyOptions& options) {
  Rng rng(options.seed);
  auto& exact = check_named(report, "DP optimum equals brute force");
  auto& witness = check_named(report, "DP witness re-evaluates and meets the counts");
  auto& heur = check_named(report, "DP on the heuristic forest agrees");
  for (int k = 0; k < 200; ++k) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    const int d = static_cast<int>(rng.uniform(1, 4));
    const int p = static_cast<int>(rng.uniform(0, 3));
    auto sample = random_bounded_treedepth(n, d, 0.5, 0.2, rng);
    std::optional<EdgeColoring> col;
    if (p > 0) col = random_coloring(sample.graph, p, rng);
    SeparableObjective f(sample.graph, random_tables(sample.graph, -9, 9, rng));
    auto describe = [&] {
      Instance inst = make_instance(sample.graph, col, f);
      inst.forest = sample.parent;
      return Json{{"instance", instance_json(inst)}};
    };
    ColoredDpOptions dopts;
    dopts.threads = options.threads;
    const auto dp = solve_colored_dp(sample.graph, EliminationForest(sample.parent), col, f, dopts);
    const auto bf = solve_colored_bruteforce(sample.graph, col, f);
    record(exact, dp.feasible == bf.feasible && (!dp.feasible || dp.value == bf.value), describe);
    bool ok = true;
    if (dp.feasible) {
      ok = evaluate_separable(f, degree_sequence(sample.graph, dp.subset)) == dp.value;
      if (col) ok = ok && col->counts_of(dp.subset) == col->counts;
    }
    record(witness, ok, describe);
    const auto hf = solve_colored_dp(sample.graph, heuristic_forest(sample.graph), col, f, dopts);
    record(heur, hf.feasible == dp.feasible && hf.value == dp.value, describe);
  }
}

// ------------------------------------------------------------- ip-equivalence

void suite_ip_equivalence(VerifyReport& report, const VerifyOptions& options) {
  Rng rng(options.seed);
  auto& shape = check_named(report, "variables n+3|E|, constraints 2n+p, max |coefficient| <= max(1, n-1)");
  auto& tree = check_named(report, "constraint tree valid with height <= p + height(T) + 1");
  auto& equal = check_named(report, "IP optimum equals colored brute force");
  auto& maps = check_named(report, "assignment and subgraph maps preserve the objective");

  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : graphs_up_to_isomorphism(n, false)) graphs.push_back(std::move(g));
  for (int k = 0; k < 60; ++k) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    const auto max_edges = std::min<std::int64_t>(n * (n - 1) / 2, 6);
    graphs.push_back(random_graph(n, static_cast<std::size_t>(rng.uniform(0, max_edges)), rng));
  }

  for (const Graph& g : graphs) {
    for (int p = 0; p <= 3; ++p) {
      std::optional<EdgeColoring> col;
      if (p > 0) col = random_coloring(g, p, rng);
      SeparableObjective f(g, random_tables(g, -9, 9, rng));
      auto describe = [&] { return Json{{"instance", instance_json(make_instance(g, col, f))}}; };

      const IpModel model = build_colored_ip(g, col, f);
      const auto n = static_cast<std::size_t>(g.num_vertices());
      record(shape,
             model.variables.size() == n + 3 * g.num_edges() &&
                 model.constraints.size() == 2 * n + static_cast<std::size_t>(p) &&
                 model.max_abs_coefficient() <= std::max<Value>(1, g.num_vertices() - 1),
             describe);

      const Graph cg = constraint_graph(model);
      for (const EliminationForest& t : {treedepth_exact(g).forest, heuristic_forest(g)}) {
        const ConstraintTree ct = build_constraint_tree(g, t, p);
        record(tree, validate_forest(cg, ct.forest) && ct.forest.height() <= p + t.height() + 1, describe);
      }

      const auto ip = solve_ip_bruteforce(model);
      const auto bf = solve_colored_bruteforce(g, col, f);
      record(equal, ip.feasible == bf.feasible && (!ip.feasible || ip.value == bf.value), describe);

      bool ok = true;
      if (ip.feasible) {
        const auto sub = ip_assignment_to_subgraph(model, ip.assignment);
        ok = sub.value == ip.value && evaluate_separable(f, degree_sequence(g, sub.subset)) == ip.value &&
             subgraph_to_ip_assignment(g, sub.subset) == ip.assignment;
      }
      if (bf.feasible) {
        const auto a = subgraph_to_ip_assignment(g, bf.subset);
        ok = ok && !violated_row(model, a) && ip_objective_value(model, a) == bf.value;
      }
      record(maps, ok, describe);
    }
  }
}

// ------------------------------------------------------------------ treedepth

// Vertex rankings: td(G) <= k iff ranks 1..k can be assigned so that any
// two vertices of equal rank are separated by a vertex of higher rank.
class RankingSearch {
 public:
  RankingSearch(const Graph& g, int k) : g_(g), k_(k), rank_(static_cast<std::size_t>(g.num_vertices()), 0) {}

  bool run() { return place(0); }

 private:
  // Among assigned vertices: no component of G[rank <= l] holds two of rank l.
  bool consistent() const {
    const int n = g_.num_vertices();
    for (int level = 1; level <= k_; ++level) {
      std::vector<int> comp(static_cast<std::size_t>(n), -1);
      for (int s = 0; s < n; ++s) {
        const int rs = rank_[static_cast<std::size_t>(s)];
        if (rs == 0 || rs > level || comp[static_cast<std::size_t>(s)] != -1) continue;
        int top = 0;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = s;
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          if (rank_[static_cast<std::size_t>(v)] == level && ++top > 1) return false;
          for (int w : g_.neighbours(v)) {
            const int rw = rank_[static_cast<std::size_t>(w)];
            if (rw == 0 || rw > level || comp[static_cast<std::size_t>(w)] != -1) continue;
            comp[static_cast<std::size_t>(w)] = s;
            stack.push_back(w);
          }
        }
      }
    }
    return true;
  }

  bool place(int v) {
    if (v == g_.num_vertices()) return true;
    for (int r = 1; r <= k_; ++r) {
      rank_[static_cast<std::size_t>(v)] = r;
      if (consistent() && place(v + 1)) return true;
    }
    rank_[static_cast<std::size_t>(v)] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> rank_;
};

int ranking_depth(const Graph& g) {
  int k = 0;
  while (!RankingSearch(g, k).run()) ++k;
  return k;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.num_vertices();
}

// Single-tree depth: a disconnected graph needs one vertex above the rest.
int rooted_ranking_depth(const Graph& g) {
  if (is_connected(g)) return ranking_depth(g);
  int best = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<Edge> rest;
    for (const Edge& e : g.edges())
      if (e.u != v && e.v != v) rest.push_back({e.u - (e.u > v), e.v - (e.v > v)});
    best = std::min(best, 1 + ranking_depth(Graph::from_edges(g.num_vertices() - 1, std::move(rest))));
  }
  return best;
}

int ceil_log2_plus_one(int n) {
  int k = 0;
  while ((1 << k) < n + 1) ++k;
  return k;
}

void suite_treedepth(VerifyReport& report, const VerifyOptions& options) {
  Rng rng(options.seed);
  auto& known = check_named(report, "known values: matching on [6] is 3, single edge is 2, paths");
  auto& valid = check_named(report, "exact and heuristic forests are valid");
  auto& minimal = check_named(report, "depths match an exhaustive vertex-ranking search (n <= 8)");

  auto describe_graph = [](const Graph& g) {
    return [&g] { return Json{{"instance", instance_json(make_instance(g, std::nullopt, std::nullopt))}}; };
  };

  const Graph m6 = graphs::perfect_matching(3);
  record(known, treedepth_exact(m6).depth == 3, describe_graph(m6));
  const Graph e = graphs::path(2);
  record(known, treedepth_exact(e).depth == 2, describe_graph(e));
  for (int n = 1; n <= 15; ++n) {
    const Graph p = graphs::path(n);
    record(known, treedepth_exact(p).depth == ceil_log2_plus_one(n), describe_graph(p));
  }

  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : graphs_up_to_isomorphism(n, false)) graphs.push_back(std::move(g));
  for (int k = 0; k < 40; ++k) {
    const int n = static_cast<int>(rng.uniform(6, 8));
    graphs.push_back(random_graph(n, static_cast<std::size_t>(rng.uniform(0, n * (n - 1) / 2)), rng));
  }
  for (const Graph& g : graphs) {
    const auto fd = treedepth_exact_forest(g);
    const auto td = treedepth_exact(g);
    const auto h = heuristic_forest(g);
    record(valid,
           validate_forest(g, fd.forest) && fd.forest.height() == fd.depth && validate_forest(g, td.forest) &&
               td.forest.height() == td.depth && td.forest.roots().size() <= 1 && validate_forest(g, h) &&
               h.height() >= fd.depth,
           describe_graph(g));
    record(minimal, ranking_depth(g) == fd.depth && rooted_ranking_depth(g) == td.depth, describe_graph(g));
  }
}

// -------------------------------------------------------------------- gadgets

Value separable_optimum(const Instance& inst) {
  const auto sol = solve_colored_bruteforce(inst.graph, inst.coloring, *inst.vertex_functions);
  if (!sol.feasible) throw Error("internal error: gadget instance is infeasible");
  return sol.value;
}

// Some subset of edges gives every vertex a degree accepted by `ok`.
bool degree_pattern_exists(const Graph& g, const std::function<bool(int, int)>& ok) {
  const std::size_t ne = g.num_edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
    DegreeSequence d(static_cast<std::size_t>(g.num_vertices()), 0);
    for (std::size_t e = 0; e < ne; ++e)
      if (mask >> e & 1) {
        ++d[static_cast<std::size_t>(g.edge(e).u)];
        ++d[static_cast<std::size_t>(g.edge(e).v)];
      }
    bool good = true;
    for (int v = 0; v < g.num_vertices() && good; ++v) good = ok(v, d[static_cast<std::size_t>(v)]);
    if (good) return true;
  }
  return false;
}

bool second_differences(const std::vector<Value>& t, int sign) {
  for (std::size_t z = 1; z + 1 < t.size(); ++z) {
    const Value d2 = t[z + 1] - 2 * t[z] + t[z - 1];
    if (sign < 0 ? d2 > 0 : d2 < 0) return false;
  }
  return true;
}

void suite_gadgets(VerifyReport& report, const VerifyOptions&) {
  auto& zero = check_named(report, "optimum is zero exactly for YES instances");
  auto& shape = check_named(report, "tables have the stated curvature");
  auto& subdiv = check_named(report, "subdivision optimum encodes the all-squares optimum");

  auto zero_check = [&](const Instance& inst, bool yes, Value opt) {
    record(zero, (opt == 0) == yes, [&] { return Json{{"instance", instance_json(inst)}, {"decision", yes}}; });
  };

  // Exact matching on K_{2,2}: colour 1 on {1,1'}, {2,2'}.
  for (const std::vector<int>& m : {std::vector<int>{2, 0}, std::vector<int>{1, 1}}) {
    const Instance inst = exact_matching_instance(2, {0, 1, 1, 0}, m);
    bool yes = false;
    for (const auto& pm : {std::array<std::size_t, 2>{0, 3}, std::array<std::size_t, 2>{1, 2}}) {
      std::vector<int> c(2, 0);
      for (std::size_t e : pm) ++c[static_cast<std::size_t>(inst.coloring->color[e])];
      yes = yes || c == m;
    }
    zero_check(inst, yes, separable_optimum(inst));
    for (const auto& t : inst.vertex_functions->tables())
      record(shape, second_differences(t, -1), [&] { return Json{{"instance", instance_json(inst)}}; });
  }

  // Cubic subgraph.
  for (const Graph& g : {graphs::complete(4), graphs::path(3), graphs::star(3)}) {
    const Instance inst = cubic_subgraph_instance(g);
    zero_check(inst, degree_pattern_exists(g, [](int, int d) { return d == 0 || d == 3; }), separable_optimum(inst));
  }

  // Perfect matching as a general factor with B_i = {1}.
  for (const Graph& g : {graphs::path(3), graphs::path(2)}) {
    const Instance inst =
        general_factor_instance(g, std::vector<std::vector<int>>(static_cast<std::size_t>(g.num_vertices()), {1}));
    zero_check(inst, degree_pattern_exists(g, [](int, int d) { return d == 1; }), separable_optimum(inst));
  }

  // Partition.
  for (const std::vector<Value>& a : {std::vector<Value>{2, 3, 5}, std::vector<Value>{1, 1, 3}, std::vector<Value>{1}}) {
    const Instance inst = partition_gadget(a);
    const Value total = std::accumulate(a.begin(), a.end(), Value{0});
    bool yes = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
      Value s = 0;
      for (std::size_t j = 0; j < a.size(); ++j)
        if (mask >> j & 1) s += a[j];
      yes = yes || 2 * s == total;
    }
    zero_check(inst, yes, weighted_bruteforce(inst.weighted()).value);
  }

  // Bipartite concave/convex on K_{1,3}, centre in J, and on a single edge.
  {
    const Graph star = graphs::star(3);
    const std::vector<bool> side{false, true, true, true};
    const Instance inst = bipartite_concave_convex_instance(star, side);
    zero_check(inst,
               degree_pattern_exists(star, [&](int v, int d) { return side[static_cast<std::size_t>(v)] ? d == 1 : d == 0 || d == 3; }),
               separable_optimum(inst));
    const auto& tables = inst.vertex_functions->tables();
    for (std::size_t v = 0; v < tables.size(); ++v)
      record(shape, second_differences(tables[v], side[v] ? -1 : 1), [&] { return Json{{"instance", instance_json(inst)}}; });
  }

  // lu-factor tables are concave.
  {
    const Graph g = graphs::complete(4);
    const SeparableObjective lu = lu_factor_objective(g, {0, 1, 2, 3}, {1, 2, 3, 3});
    for (const auto& t : lu.tables())
      record(shape, second_differences(t, -1), [&] { return Json{{"instance", instance_json(make_instance(g, std::nullopt, lu))}}; });
  }

  // Subdivision gadget on every graph with at most 4 edges and no isolated
  // vertex: disjoint unions of connected pieces, one per multiset.
  std::vector<Graph> pieces;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : connected_graphs(n))
      if (g.num_edges() <= 4) pieces.push_back(std::move(g));
  std::vector<Graph> hosts;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t edges) {
    if (!chosen.empty()) {
      std::vector<Edge> all;
      int offset = 0;
      for (std::size_t idx : chosen) {
        for (const Edge& e : pieces[idx].edges()) all.push_back({e.u + offset, e.v + offset});
        offset += pieces[idx].num_vertices();
      }
      hosts.push_back(Graph::from_edges(offset, std::move(all)));
    }
    for (std::size_t k = from; k < pieces.size(); ++k)
      if (edges + pieces[k].num_edges() <= 4) {
        chosen.push_back(k);
        extend(k, edges + pieces[k].num_edges());
        chosen.pop_back();
      }
  };
  extend(0, 0);
  for (const Graph& h : hosts) {
    for (int m = 0; m <= static_cast<int>(h.num_edges()); ++m) {
      const Instance inst = subdivision_hardness_instance(h, m);
      auto describe = [&] { return Json{{"instance", instance_json(inst)}, {"m", m}}; };
      const auto lsol = solve_colored_bruteforce(inst.graph, std::nullopt, *inst.vertex_functions);
      // all-squares optimum over m-edge subgraphs of H
      Value best = std::numeric_limits<Value>::min();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.num_edges()); ++mask) {
        if (std::popcount(mask) != m) continue;
        DegreeSequence d(static_cast<std::size_t>(h.num_vertices()), 0);
        for (std::size_t e = 0; e < h.num_edges(); ++e)
          if (mask >> e & 1) {
            ++d[static_cast<std::size_t>(h.edge(e).u)];
            ++d[static_cast<std::size_t>(h.edge(e).v)];
          }
        Value s = 0;
        for (int x : d) s += static_cast<Value>(x) * x;
        best = std::max(best, s);
      }
      const EdgeSubset picked = extract_subdivision_edges(h, inst.graph, lsol.subset);
      Value picked_value = 0;
      for (int x : degree_sequence(h, picked)) picked_value += static_cast<Value>(x) * x;
      record(subdiv, lsol.value == best && picked.count() == static_cast<std::size_t>(m) && picked_value == best,
             describe);
      const auto& tables = inst.vertex_functions->tables();
      const auto n = static_cast<std::size_t>(h.num_vertices());
      for (std::size_t v = n; v < tables.size(); ++v)
        record(shape, second_differences(tables[v], v + 1 == tables.size() ? -1 : 1), describe);
    }
  }
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = suite;
  report.checks.reserve(8);  // suites hold references to their checks
  if (suite == "small-multi") suite_small_multi(report, options);
  else if (suite == "small-colored") suite_small_colored(report, options);
  else if (suite == "ip-equivalence") suite_ip_equivalence(report, options);
  else if (suite == "treedepth") suite_treedepth(report, options);
  else if (suite == "gadgets") suite_gadgets(report, options);
  else throw InputError("unknown suite '" + suite + "'");
  return report;
}

}  // namespace degopt
