#include <gtest/gtest.h>

#include <bit>

#include "convert.hpp"
#include "degopt/colored.hpp"
#include "degopt/error.hpp"
#include "degopt/gadgets.hpp"
#include "degopt/generators.hpp"

using namespace degopt;

namespace {

Value optimum(const Instance& inst) {
  const auto edges = testutil::edge_list(inst.graph);
  const auto& t = inst.vertex_functions->tables();
  if (inst.coloring)
    return *oracle::best_colored(inst.graph.num_vertices(), edges, &inst.coloring->color, &inst.coloring->counts, t);
  return *oracle::best_colored(inst.graph.num_vertices(), edges, nullptr, nullptr, t);
}

bool concave(const std::vector<Value>& t) {
  for (std::size_t z = 1; z + 1 < t.size(); ++z)
    if (t[z + 1] - 2 * t[z] + t[z - 1] > 0) return false;
  return true;
}

bool convex(const std::vector<Value>& t) {
  for (std::size_t z = 1; z + 1 < t.size(); ++z)
    if (t[z + 1] - 2 * t[z] + t[z - 1] < 0) return false;
  return true;
}

std::vector<std::vector<int>> same_set(const Graph& g, std::vector<int> b) {
  return std::vector<std::vector<int>>(static_cast<std::size_t>(g.num_vertices()), b);
}

// Hosts with at most four edges: every graph on up to six vertices, plus
// the two shapes that need more (P_3 + 2K_2 and 4K_2).
std::vector<Graph> small_hosts() {
  std::vector<Graph> out;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n, false))
      if (g.num_edges() <= 4) out.push_back(g);
  out.push_back(Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}}));
  out.push_back(Graph::from_edges(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  return out;
}

}  // namespace

TEST(Factor, Examples) {
  const Graph e = graphs::path(2);
  EXPECT_EQ(optimum(general_factor_instance(e, same_set(e, {1}))), 0);
  const Graph p3 = graphs::path(3);
  EXPECT_EQ(optimum(general_factor_instance(p3, same_set(p3, {1}))), -1);
  const Graph c4 = graphs::cycle(4);
  EXPECT_EQ(optimum(general_factor_instance(c4, same_set(c4, {2}))), 0);
}

TEST(Factor, Tables) {
  const Graph p3 = graphs::path(3);
  const Instance inst = general_factor_instance(p3, {{0}, {0, 2}, {1}});
  EXPECT_EQ(inst.vertex_functions->table(0), (std::vector<Value>{0, -1}));
  EXPECT_EQ(inst.vertex_functions->table(1), (std::vector<Value>{0, -1, 0}));
  EXPECT_EQ(inst.vertex_functions->table(2), (std::vector<Value>{-1, 0}));
  EXPECT_FALSE(inst.coloring);
  EXPECT_EQ(inst.meta["gadget"], "general-factor");
}

TEST(LuFactor, Examples) {
  const Graph p3 = graphs::path(3);
  const auto f = lu_factor_objective(p3, {0, 1, 0}, {1, 1, 1});
  EXPECT_EQ(f.table(1), (std::vector<Value>{-1, 0, -1}));
  const auto free = lu_factor_objective(p3, {0, 0, 0}, {1, 2, 1});
  for (int v = 0; v < 3; ++v)
    for (Value x : free.table(v)) EXPECT_EQ(x, 0);
  EXPECT_THROW(lu_factor_objective(p3, {0, 0, 0}, {1, 3, 1}), InputError);
  EXPECT_THROW(lu_factor_objective(p3, {1, 0, 0}, {0, 2, 1}), InputError);
}

TEST(LuFactor, TablesAreConcave) {
  Rng rng(3);
  for (int round = 0; round < 50; ++round) {
    const Graph g = random_graph(7, static_cast<std::size_t>(rng.uniform(0, 21)), rng);
    std::vector<int> lo, hi;
    for (int v = 0; v < 7; ++v) {
      const int a = static_cast<int>(rng.uniform(0, g.degree(v)));
      const int b = static_cast<int>(rng.uniform(a, g.degree(v)));
      lo.push_back(a);
      hi.push_back(b);
    }
    const auto f = lu_factor_objective(g, lo, hi);
    for (int v = 0; v < 7; ++v) {
      EXPECT_TRUE(concave(f.table(v)));
      EXPECT_EQ(f.table(v).size(), static_cast<std::size_t>(g.degree(v) + 1));
    }
  }
}

TEST(ExactMatching, K22) {
  // K_{2,2} edges in order 1-1', 1-2', 2-1', 2-2'; {1,1'},{2,2'} colour 1
  const std::vector<int> colors{0, 1, 1, 0};
  EXPECT_EQ(optimum(exact_matching_instance(2, colors, {2, 0})), 0);
  EXPECT_EQ(optimum(exact_matching_instance(2, colors, {1, 1})), -2);
  const Instance inst = exact_matching_instance(2, colors, {2, 0});
  for (int v = 0; v < 4; ++v) EXPECT_EQ(inst.vertex_functions->table(v), (std::vector<Value>{-1, 0, -1}));
}

TEST(ExactMatching, SingleEdgeAndWrongTotals) {
  EXPECT_EQ(optimum(exact_matching_instance(1, {0}, {1})), 0);
  Rng rng(12);
  for (int round = 0; round < 30; ++round) {
    const int r = static_cast<int>(rng.uniform(1, 3));
    const int p = static_cast<int>(rng.uniform(1, 3));
    std::vector<int> colors, sizes(static_cast<std::size_t>(p), 0);
    for (int e = 0; e < r * r; ++e) {
      colors.push_back(static_cast<int>(rng.uniform(0, p - 1)));
      ++sizes[static_cast<std::size_t>(colors.back())];
    }
    std::vector<int> m;
    int total = 0;
    for (int k = 0; k < p; ++k) {
      m.push_back(static_cast<int>(rng.uniform(0, sizes[static_cast<std::size_t>(k)])));
      total += m.back();
    }
    const Instance inst = exact_matching_instance(r, colors, m);
    EXPECT_EQ(inst.meta["sum_counts_matches_r"].get<bool>(), total == r);
    if (total != r) EXPECT_LT(optimum(inst), 0);
  }
  EXPECT_THROW(exact_matching_instance(2, {0, 1, 1}, {1, 1}), InputError);
}

TEST(Cubic, Examples) {
  EXPECT_EQ(optimum(cubic_subgraph_instance(graphs::complete(4))), 0);
  EXPECT_EQ(optimum(cubic_subgraph_instance(graphs::path(3))), 0);
  EXPECT_EQ(optimum(cubic_subgraph_instance(graphs::star(3))), 0);
  const Instance k13 = cubic_subgraph_instance(graphs::star(3));
  EXPECT_EQ(k13.vertex_functions->table(0), (std::vector<Value>{0, -1, -1, 0}));
  EXPECT_EQ(k13.vertex_functions->table(1), (std::vector<Value>{0, -1}));
}

TEST(BipartiteConcaveConvex, Examples) {
  const Graph e = graphs::path(2);
  EXPECT_EQ(optimum(bipartite_concave_convex_instance(e, {true, false})), -1);
  const Graph k13 = graphs::star(3);
  const Instance inst = bipartite_concave_convex_instance(k13, {false, true, true, true});
  EXPECT_EQ(optimum(inst), 0);
  EXPECT_TRUE(convex(inst.vertex_functions->table(0)));
  for (int v = 1; v < 4; ++v) EXPECT_TRUE(concave(inst.vertex_functions->table(v)));
  // I empty: every edge would join two J vertices, so only edgeless hosts qualify
  EXPECT_EQ(optimum(bipartite_concave_convex_instance(Graph::from_edges(3, {}), {false, false, false})), 0);
  EXPECT_THROW(bipartite_concave_convex_instance(k13, {false, false, false, false}), InputError);
  EXPECT_THROW(bipartite_concave_convex_instance(graphs::complete(3), {true, false, false}), InputError);
}

TEST(Subdivision, SingleEdge) {
  const Graph e = graphs::path(2);
  const Instance inst = subdivision_hardness_instance(e, 1);
  EXPECT_EQ(inst.graph.num_vertices(), 4);
  EXPECT_EQ(inst.graph.num_edges(), 3u);
  EXPECT_EQ(optimum(inst), 2);
  const auto sol = solve_colored_bruteforce(inst.graph, std::nullopt, *inst.vertex_functions);
  EXPECT_EQ(degree_sequence(inst.graph, sol.subset)[2], 3);
}

TEST(Subdivision, PathWithNoEdges) {
  const Instance inst = subdivision_hardness_instance(graphs::path(3), 0);
  EXPECT_EQ(optimum(inst), 0);
}

TEST(Subdivision, PenaltyAndTables) {
  const Graph p3 = graphs::path(3);
  EXPECT_EQ(subdivision_penalty(p3), 1 + 3 * 4);
  const Instance inst = subdivision_hardness_instance(p3, 1);
  const Value a = subdivision_penalty(p3);
  EXPECT_EQ(inst.meta["a"].get<Value>(), a);
  for (int v = 0; v < 3; ++v) EXPECT_TRUE(convex(inst.vertex_functions->table(v)));
  for (int v = 3; v < 5; ++v) {
    EXPECT_EQ(inst.vertex_functions->table(v), (std::vector<Value>{0, -2 * a, -2 * a, 0}));
    EXPECT_TRUE(convex(inst.vertex_functions->table(v)));
  }
  EXPECT_TRUE(concave(inst.vertex_functions->table(5)));
  EXPECT_THROW(subdivision_hardness_instance(p3, 3), PreconditionError);
}

// The extracted edge set is an m-edge optimum of sum d_i^2 on the host.
TEST(Subdivision, EncodesPrescribedSquaresProblem) {
  std::size_t checked = 0;
  for (const Graph& h : small_hosts()) {
    const auto host_edges = testutil::edge_list(h);
    for (int m = 0; m <= static_cast<int>(h.num_edges()); ++m) {
      const Instance inst = subdivision_hardness_instance(h, m);
      const auto sol = solve_colored_bruteforce(inst.graph, std::nullopt, *inst.vertex_functions);
      ASSERT_EQ(sol.value, optimum(inst));
      const EdgeSubset picked = extract_subdivision_edges(h, inst.graph, sol.subset);
      EXPECT_EQ(picked.count(), static_cast<std::size_t>(m));
      oracle::i64 best = std::numeric_limits<oracle::i64>::min();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << host_edges.size()); ++mask) {
        if (std::popcount(mask) != m) continue;
        oracle::i64 s = 0;
        for (int d : oracle::degrees(h.num_vertices(), host_edges, mask)) s += d * d;
        best = std::max(best, s);
      }
      Value got = 0;
      for (int d : degree_sequence(h, picked)) got += d * d;
      EXPECT_EQ(got, best);
      EXPECT_EQ(sol.value, best);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(Partition, Examples) {
  auto best = [](const std::vector<Value>& a) {
    const Instance inst = partition_gadget(a);
    return weighted_bruteforce(inst.weighted()).value;
  };
  EXPECT_EQ(best({2, 3, 5}), 0);
  EXPECT_LE(best({1, 1, 3}), -1);
  EXPECT_EQ(best({1}), -1);
  EXPECT_EQ(best({3, 1, 1, 2, 2, 1}), 0);
}

TEST(Partition, Shape) {
  const Instance inst = partition_gadget({2, 3, 5});
  EXPECT_EQ(inst.graph, graphs::complete_bipartite(2, 3));
  ASSERT_TRUE(inst.weights);
  EXPECT_EQ(*inst.weights, (std::vector<Value>{2, 3, 5, 2, 3, 5}));
  const auto w = inst.weighted();
  EXPECT_EQ(w.functions[0].at(5), 0);
  EXPECT_EQ(w.functions[0].at(4), -4);
  EXPECT_TRUE(concave(w.functions[0].values));
  EXPECT_THROW(partition_gadget({0, 1}), InputError);
}

TEST(Weighted, ZeroAndUnitWeights) {
  Rng rng(2);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_graph(6, static_cast<std::size_t>(rng.uniform(0, 10)), rng);
    const auto tables = random_tables(g, -5, 5, rng);
    std::vector<OffsetTable> fns;
    for (const auto& t : tables) fns.push_back(OffsetTable{0, t});
    const WeightedInstance unit{g, std::vector<Value>(g.num_edges(), 1), fns};
    const SeparableObjective sep(g, tables);
    std::vector<OffsetTable> at_zero;
    for (const auto& t : tables) at_zero.push_back(OffsetTable{0, {t[0]}});
    const WeightedInstance zero{g, std::vector<Value>(g.num_edges(), 0), at_zero};
    Value base = 0;
    for (const auto& t : tables) base += t[0];
    for (int k = 0; k < 10; ++k) {
      EdgeSubset s(g.num_edges());
      for (std::size_t e = 0; e < g.num_edges(); ++e) s.set(e, rng.chance(0.5));
      EXPECT_EQ(weighted_objective_eval(unit, s), evaluate_separable(sep, degree_sequence(g, s)));
      EXPECT_EQ(weighted_objective_eval(zero, s), base);
    }
    EXPECT_EQ(weighted_bruteforce(unit).value, *oracle::best_colored(6, testutil::edge_list(g), nullptr, nullptr, tables));
  }
}
