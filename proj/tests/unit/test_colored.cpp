#include <gtest/gtest.h>

#include <sstream>

#include "convert.hpp"
#include "degopt/colored.hpp"
#include "degopt/error.hpp"
#include "degopt/generators.hpp"
#include "degopt/instance.hpp"
#include "degopt/ip_model.hpp"
#include "degopt/multicriteria.hpp"

using namespace degopt;
using Tables = std::vector<std::vector<Value>>;

namespace {

Tables zero_tables(const Graph& g) {
  Tables t;
  for (int v = 0; v < g.num_vertices(); ++v) t.emplace_back(static_cast<std::size_t>(g.degree(v) + 1), 0);
  return t;
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t k = 0;
  for (std::string line; std::getline(in, line);) k += line.rfind(prefix, 0) == 0;
  return k;
}

// K_{2,2} with sides {0,1}, {2,3}: {1,1'},{2,2'} colour 1, {1,2'},{2,1'} colour 2.
Instance k22(std::vector<int> m) {
  Instance inst;
  inst.graph = graphs::complete_bipartite(2, 2);  // edges 0-2, 0-3, 1-2, 1-3
  inst.coloring = EdgeColoring{{0, 1, 1, 0}, std::move(m)};
  inst.vertex_functions = SeparableObjective(inst.graph, Tables(4, {-1, 0, -1}));
  return inst;
}

std::optional<Value> reference(const Graph& g, const std::optional<EdgeColoring>& col, const SeparableObjective& f) {
  const auto edges = testutil::edge_list(g);
  if (col) return oracle::best_colored(g.num_vertices(), edges, &col->color, &col->counts, f.tables());
  return oracle::best_colored(g.num_vertices(), edges, nullptr, nullptr, f.tables());
}

}  // namespace

TEST(IpModel, TriangleShape) {
  const Graph k3 = graphs::complete(3);
  const IpModel model = build_colored_ip(k3, EdgeColoring{{0, 0, 0}, {1}}, SeparableObjective(k3, zero_tables(k3)));
  EXPECT_EQ(model.variables.size(), 12u);
  EXPECT_EQ(model.constraints.size(), 7u);
  EXPECT_EQ(model.max_abs_coefficient(), 2);
  const std::string text = serialize_ip(model);
  EXPECT_EQ(count_lines(text, "VAR "), 12u);
  EXPECT_EQ(count_lines(text, "EQ "), 7u);
  EXPECT_EQ(count_lines(text, "MAX"), 1u);
  EXPECT_EQ(serialize_ip(model), text);
}

TEST(IpModel, RowsAndObjective) {
  const Graph p3 = graphs::path(3);
  const SeparableObjective f(p3, {{5, 6}, {1, 2, 3}, {7, 8}});
  const IpModel model = build_colored_ip(p3, EdgeColoring{{0, 1}, {1, 0}}, f);
  ASSERT_EQ(model.constraints.size(), 2u * 3 + 2);
  EXPECT_EQ(model.constraints[0].name, "a_1");
  EXPECT_EQ(model.constraints[3].name, "b_1");
  EXPECT_EQ(model.constraints[6].name, "c_1");
  EXPECT_EQ(model.constraints[6].rhs, 1);
  EXPECT_EQ(model.constraints[7].rhs, 0);
  // a_2: x_12 + x_23 - y_2^1 - 2 y_2^2 = 0
  const auto& a2 = model.constraints[1];
  EXPECT_EQ(a2.rhs, 0);
  ASSERT_EQ(a2.terms.size(), 4u);
  EXPECT_EQ(a2.terms[2].var, model.y_index(1, 1));
  EXPECT_EQ(a2.terms[2].coef, -1);
  EXPECT_EQ(a2.terms[3].coef, -2);
  for (std::size_t e = 0; e < 2; ++e) EXPECT_EQ(model.objective[model.x_index(e)], 0);
  EXPECT_EQ(model.objective[model.y_index(1, 2)], 3);
  EXPECT_EQ(model.objective[model.y_index(2, 0)], 7);
}

TEST(IpModel, SingleEdgeIsForced) {
  const Graph e = graphs::path(2);
  const SeparableObjective f(e, {{0, 4}, {1, -2}});
  const IpModel model = build_colored_ip(e, EdgeColoring{{0}, {1}}, f);
  const auto sol = solve_ip_bruteforce(model);
  ASSERT_TRUE(sol.feasible);
  EXPECT_EQ(sol.value, 4 + -2);
  EXPECT_EQ(sol.assignment[model.x_index(0)], 1);
  EXPECT_EQ(sol.assignment[model.y_index(0, 1)], 1);
  EXPECT_EQ(sol.assignment[model.y_index(1, 1)], 1);
}

TEST(IpModel, EmptyGraph) {
  const Graph g = Graph::from_edges(3, {});
  const IpModel model = build_colored_ip(g, std::nullopt, SeparableObjective(g, {{2}, {3}, {-1}}));
  EXPECT_EQ(model.variables.size(), 3u);
  const std::string text = serialize_ip(model);
  EXPECT_EQ(count_lines(text, "VAR y_"), 3u);
  EXPECT_EQ(count_lines(text, "#"), 1u);
  const auto sol = solve_ip_bruteforce(model);
  ASSERT_TRUE(sol.feasible);
  EXPECT_EQ(sol.value, 4);
}

TEST(IpModel, Infeasible) {
  const Graph p3 = graphs::path(3);
  const SeparableObjective f(p3, zero_tables(p3));
  EXPECT_THROW(build_colored_ip(p3, EdgeColoring{{0, 0}, {3}}, f), InputError);
  // the same row with an unattainable right-hand side, written directly
  IpModel model = build_colored_ip(p3, EdgeColoring{{0, 0}, {2}}, f);
  EXPECT_TRUE(solve_ip_bruteforce(model).feasible);
  model.constraints.back().rhs = 3;
  EXPECT_FALSE(solve_ip_bruteforce(model).feasible);
}

TEST(IpModel, AssignmentMaps) {
  const Graph k3 = graphs::complete(3);
  const SeparableObjective f(k3, {{0, 1, 5}, {0, 2, 3}, {1, 1, 1}});
  const IpModel model = build_colored_ip(k3, std::nullopt, f);
  const EdgeSubset at1 = testutil::subset_of(3, {0, 1});
  const IpAssignment a = subgraph_to_ip_assignment(k3, at1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= 2; ++j) {
      const bool on = (i == 0 && j == 2) || (i != 0 && j == 1);
      EXPECT_EQ(a[model.y_index(i, j)], on ? 1 : 0) << i << "," << j;
    }
  const auto back = ip_assignment_to_subgraph(model, a);
  EXPECT_EQ(back.subset, at1);
  EXPECT_EQ(back.value, evaluate_separable(f, degree_sequence(k3, at1)));
  EXPECT_EQ(ip_objective_value(model, a), back.value);

  IpAssignment broken = a;
  broken[model.y_index(1, 0)] = 1;  // two y's for vertex 2 break b_2 (and a_2 stays satisfied)
  broken[model.y_index(1, 1)] = 1;
  try {
    ip_assignment_to_subgraph(model, broken);
    FAIL() << "expected a violated row";
  } catch (const InfeasibleAssignmentError& e) {
    EXPECT_EQ(e.row(), "b_2");
  }
}

TEST(IpModel, RoundTripAllSubsets) {
  const Graph k4 = graphs::complete(4);
  const IpModel model = build_colored_ip(k4, std::nullopt, SeparableObjective(k4, zero_tables(k4)));
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    EdgeSubset s(6);
    for (std::size_t e = 0; e < 6; ++e) s.set(e, mask >> e & 1);
    const auto a = subgraph_to_ip_assignment(k4, s);
    EXPECT_FALSE(violated_row(model, a));
    EXPECT_EQ(ip_assignment_to_subgraph(model, a).subset, s);
  }
}

TEST(IpModel, BruteForceMatchesSubgraphOracle) {
  Rng rng(77);
  for (int round = 0; round < 120; ++round) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    const std::size_t max_edges = static_cast<std::size_t>(n * (n - 1) / 2);
    const Graph g = random_graph(n, std::min<std::size_t>(max_edges, static_cast<std::size_t>(rng.uniform(0, 4))), rng);
    const int p = static_cast<int>(rng.uniform(0, 2));
    std::optional<EdgeColoring> col;
    if (p > 0) col = random_coloring(g, p, rng);
    const SeparableObjective f(g, random_tables(g, -9, 9, rng));
    const IpModel model = build_colored_ip(g, col, f);
    if (model.variables.size() > kIpBruteForceVariableCap) continue;
    const auto ip = solve_ip_bruteforce(model);
    const auto want = reference(g, col, f);
    ASSERT_EQ(ip.feasible, want.has_value());
    if (!want) continue;
    EXPECT_EQ(ip.value, *want);
    const auto sub = ip_assignment_to_subgraph(model, ip.assignment);
    EXPECT_EQ(evaluate_separable(f, degree_sequence(g, sub.subset)), *want);
  }
}

TEST(IpModel, CapIsEnforced) {
  const Graph k5 = graphs::complete(5);
  const IpModel model = build_colored_ip(k5, std::nullopt, SeparableObjective(k5, zero_tables(k5)));
  EXPECT_THROW(solve_ip_bruteforce(model), LimitError);
}

TEST(ColoredDp, StarSquare) {
  const Graph star = graphs::star(3);
  const SeparableObjective f(star, {{0, 1, 4, 9}, {0, 0}, {0, 0}, {0, 0}});
  const EdgeColoring col{{0, 0, 0}, {2}};
  const auto dp = solve_colored_dp(star, heuristic_forest(star), col, f);
  ASSERT_TRUE(dp.feasible);
  EXPECT_EQ(dp.value, 4);
  EXPECT_EQ(solve_colored_bruteforce(star, col, f).value, 4);
}

TEST(ColoredDp, CubicK4) {
  const Graph k4 = graphs::complete(4);
  const SeparableObjective f(k4, Tables(4, {0, -1, -1, 0}));
  const auto dp = solve_colored_dp(k4, treedepth_exact(k4).forest, std::nullopt, f);
  EXPECT_EQ(dp.value, 0);
  EXPECT_EQ(solve_colored_bruteforce(k4, std::nullopt, f).value, 0);
}

TEST(ColoredDp, ExactMatchingK22) {
  for (auto [m, want] : {std::pair{std::vector<int>{2, 0}, Value{0}}, std::pair{std::vector<int>{1, 1}, Value{-2}}}) {
    const Instance inst = k22(m);
    const auto dp = solve_colored_dp(inst.graph, heuristic_forest(inst.graph), inst.coloring, *inst.vertex_functions);
    ASSERT_TRUE(dp.feasible);
    EXPECT_EQ(dp.value, want);
    EXPECT_EQ(dp.color_counts, m);
    const auto bf = solve_colored_bruteforce(inst.graph, inst.coloring, *inst.vertex_functions);
    EXPECT_EQ(bf.value, want);
    EXPECT_EQ(*reference(inst.graph, inst.coloring, *inst.vertex_functions), want);
  }
}

// Colour classes are disjoint, so every in-range count vector is attainable;
// out-of-range counts are rejected before the DP runs.
TEST(ColoredDp, CountsOutOfRange) {
  const Graph p3 = graphs::path(3);
  const SeparableObjective f(p3, zero_tables(p3));
  const EliminationForest forest({1, -1, 1});
  EXPECT_THROW(solve_colored_dp(p3, forest, EdgeColoring{{0, 0}, {3}}, f), InputError);
  EXPECT_THROW(solve_colored_bruteforce(p3, EdgeColoring{{0, 1}, {1, 2}}, f), InputError);
  const auto dp = solve_colored_dp(p3, forest, EdgeColoring{{0, 0}, {2}}, f);
  EXPECT_TRUE(dp.feasible);
  EXPECT_EQ(dp.subset.count(), 2u);
}

TEST(ColoredDp, InvalidForestNamesAnEdge) {
  const Graph k3 = graphs::complete(3);
  try {
    solve_colored_dp(k3, EliminationForest({-1, 0, 0}), std::nullopt, SeparableObjective(k3, zero_tables(k3)));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("{2,3}"), std::string::npos) << e.what();
  }
}

TEST(ColoredDp, EmptyGraph) {
  const Graph g = Graph::from_edges(2, {});
  const auto dp = solve_colored_dp(g, EliminationForest({-1, -1}), std::nullopt, SeparableObjective(g, {{3}, {-4}}));
  ASSERT_TRUE(dp.feasible);
  EXPECT_EQ(dp.value, -1);
}

TEST(ColoredDp, MatchesOracleOnBoundedTreeDepth) {
  Rng rng(1234);
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    const int d = static_cast<int>(rng.uniform(1, 4));
    auto sample = random_bounded_treedepth(n, d, 0.5, 0.15, rng);
    const Graph& g = sample.graph;
    if (g.num_edges() > 16) continue;
    const int p = static_cast<int>(rng.uniform(0, 3));
    std::optional<EdgeColoring> col;
    if (p > 0) col = random_coloring(g, p, rng);
    const SeparableObjective f(g, random_tables(g, -9, 9, rng));
    const EliminationForest forest(sample.parent);
    const auto dp = solve_colored_dp(g, forest, col, f);
    const auto want = reference(g, col, f);
    ASSERT_EQ(dp.feasible, want.has_value()) << "round " << round;
    if (!want) continue;
    ASSERT_EQ(dp.value, *want) << "round " << round;
    EXPECT_EQ(evaluate_separable(f, degree_sequence(g, dp.subset)), dp.value);
    if (col) EXPECT_EQ(col->counts_of(dp.subset), col->counts);
    EXPECT_LE(dp.forest_height, d);
  }
}

TEST(ColoredDp, HeuristicAndExactForestsAgree) {
  Rng rng(55);
  for (int round = 0; round < 80; ++round) {
    const int n = static_cast<int>(rng.uniform(1, 10));
    const Graph g = random_graph(n, static_cast<std::size_t>(rng.uniform(0, std::min(14, n * (n - 1) / 2))), rng);
    const SeparableObjective f(g, random_tables(g, -5, 5, rng));
    const std::optional<EdgeColoring> col = random_coloring(g, 2, rng);
    const auto a = solve_colored_dp(g, heuristic_forest(g), col, f);
    const auto b = solve_colored_dp(g, treedepth_exact(g).forest, col, f);
    const auto c = solve_colored_bruteforce(g, col, f);
    EXPECT_EQ(a.value, c.value);
    EXPECT_EQ(b.value, c.value);
    EXPECT_EQ(a.feasible, c.feasible);
  }
}

TEST(ColoredDp, ThreadCountDoesNotChangeTheAnswer) {
  Rng rng(66);
  auto sample = random_bounded_treedepth(60, 4, 0.5, 0.1, rng);
  const SeparableObjective f(sample.graph, random_tables(sample.graph, -9, 9, rng));
  const std::optional<EdgeColoring> col = random_coloring(sample.graph, 2, rng);
  ColoredDpOptions four;
  four.threads = 4;
  const EliminationForest forest(sample.parent);
  const auto a = solve_colored_dp(sample.graph, forest, col, f);
  const auto b = solve_colored_dp(sample.graph, forest, col, f, four);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.subset, b.subset);
  EXPECT_EQ(a.feasible, b.feasible);
}

// With one colour and linear tables both solvers reduce to taking the m best
// edges.
TEST(ColoredDp, AgreesWithMulticriteriaOnLinearTables) {
  Rng rng(88);
  for (int round = 0; round < 60; ++round) {
    const int n = static_cast<int>(rng.uniform(2, 9));
    const Graph g = random_graph(n, static_cast<std::size_t>(rng.uniform(0, std::min(14, n * (n - 1) / 2))), rng);
    std::vector<Value> u;
    Tables t;
    for (int v = 0; v < n; ++v) {
      u.push_back(rng.uniform(-5, 5));
      std::vector<Value> row;
      for (int z = 0; z <= g.degree(v); ++z) row.push_back(u.back() * z);
      t.push_back(row);
    }
    const SeparableObjective f(g, t);
    for (int m = 0; m <= static_cast<int>(g.num_edges()); ++m) {
      const EdgeColoring col{std::vector<int>(g.num_edges(), 0), {m}};
      const auto dp = solve_colored_dp(g, heuristic_forest(g), col, f);
      const auto mc = maximize_multicriteria(g, static_cast<std::size_t>(m), {{u}, ConvexFunction::identity()});
      EXPECT_EQ(dp.value, mc.value);
    }
  }
}

TEST(ColoredBrute, CapIsEnforced) {
  const Graph k7 = graphs::complete(7);
  EXPECT_THROW(solve_colored_bruteforce(k7, std::nullopt, SeparableObjective(k7, zero_tables(k7))), LimitError);
}
