#include <gtest/gtest.h>

#include <numeric>

#include "convert.hpp"
#include "degopt/error.hpp"
#include "degopt/generators.hpp"
#include "degopt/instance.hpp"

using namespace degopt;

TEST(Graph, NormalizesEdgeOrder) {
  const Graph g = Graph::from_edges(3, {{2, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{1, 2}));
  EXPECT_EQ(g.degrees(), (DegreeSequence{2, 2, 2}));
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), InputError);
}

TEST(DegreeSequence, Examples) {
  const Graph k3 = graphs::complete(3);
  EXPECT_EQ(degree_sequence(k3, EdgeSubset::all(3)), (DegreeSequence{2, 2, 2}));
  EXPECT_EQ(degree_sequence(k3, EdgeSubset(3)), (DegreeSequence{0, 0, 0}));
  const Graph p3 = graphs::path(3);
  EXPECT_EQ(degree_sequence(p3, testutil::subset_of(2, {0})), (DegreeSequence{1, 1, 0}));
  EXPECT_THROW(degree_sequence(p3, EdgeSubset(3)), PreconditionError);
}

TEST(DegreeSequence, EdgeVectors) {
  const Graph k3 = graphs::complete(3);
  EXPECT_EQ(edge_degree_vector(k3, 0), (DegreeSequence{1, 1, 0}));
  EXPECT_EQ(edge_degree_vector(k3, 2), (DegreeSequence{0, 1, 1}));
  EXPECT_EQ(edge_degree_vector(graphs::path(3), 0), (DegreeSequence{1, 1, 0}));
  EXPECT_THROW(edge_degree_vector(k3, 3), PreconditionError);
}

TEST(DegreeSequence, SumsAndAdditivity) {
  oracle::Gen gen(11);
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(gen.uniform(1, 8));
    const auto edges = gen.random_edges(n, 14);
    const Graph g = testutil::graph_of(n, edges);
    const std::uint64_t mask = static_cast<std::uint64_t>(gen.uniform(0, (1 << g.num_edges()) - 1));
    EdgeSubset s(g.num_edges());
    DegreeSequence sum(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (mask >> e & 1) {
        s.set(e);
        const auto d = edge_degree_vector(g, e);
        for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i)];
      }
    const auto d = degree_sequence(g, s);
    EXPECT_EQ(d, sum);
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), 0), 2 * static_cast<int>(s.count()));
    EXPECT_EQ(d, oracle::degrees(n, testutil::edge_list(g), mask));
  }
}

TEST(Separable, Evaluate) {
  const Graph k3 = graphs::complete(3);
  const SeparableObjective zero(k3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const DegreeSequence d{2, 2, 2};
  EXPECT_EQ(evaluate_separable(zero, d), 0);
  const SeparableObjective sq(k3, {{0, 1, 4}, {0, 1, 4}, {0, 1, 4}});
  EXPECT_EQ(evaluate_separable(sq, d), 12);
  const SeparableObjective em(k3, {{-1, 0, -1}, {-1, 0, -1}, {-1, 0, -1}});
  EXPECT_EQ(evaluate_separable(em, DegreeSequence{1, 1, 1}), 0);
  EXPECT_THROW(evaluate_separable(sq, DegreeSequence{3, 0, 0}), PreconditionError);
}

TEST(Separable, TableLengthMustMatchDomain) {
  const Graph p3 = graphs::path(3);
  EXPECT_THROW(SeparableObjective(p3, {{0, 0}, {0, 0}, {0, 0}}), InputError);
  EXPECT_NO_THROW(SeparableObjective(p3, {{0, 0}, {0, 0, 0}, {0, 0}}));
}

TEST(Separable, OverflowIsReported) {
  const Graph e = graphs::path(2);
  const Value big = std::numeric_limits<Value>::max();
  const SeparableObjective f(e, {{0, big}, {0, big}});
  EXPECT_THROW(evaluate_separable(f, DegreeSequence{1, 1}), OverflowError);
}

TEST(InstanceFile, MinimalDocument) {
  const Instance inst = parse_instance(R"({"n": 1, "edges": []})");
  EXPECT_EQ(inst.graph.num_vertices(), 1);
  EXPECT_EQ(inst.graph.num_edges(), 0u);
}

TEST(InstanceFile, DuplicateEdgeRejected) {
  EXPECT_THROW(parse_instance(R"({"n": 3, "edges": [[1,2],[2,1]]})"), InputError);
}

TEST(InstanceFile, SyntaxErrorCarriesPosition) {
  try {
    parse_instance("{\"n\": 3,\n \"edges\": [[1,2],]}");
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(InstanceFile, SemanticErrors) {
  EXPECT_THROW(parse_instance(R"({"n": 2, "edges": [[1,2]], "colors": [1], "m": [2]})"), InputError);
  EXPECT_THROW(parse_instance(R"({"n": 2, "edges": [[1,2]], "vertex_functions": [[0,1,2],[0,1]]})"), InputError);
  EXPECT_THROW(parse_instance(R"({"n": 2, "edges": [[1,3]]})"), InputError);
}

TEST(InstanceFile, BuiltinFunctions) {
  const Instance inst = parse_instance(R"({"n": 3, "edges": [[1,2],[2,3]],
    "vertex_functions": [{"kind":"square"}, {"kind":"neg_square_shift","c":1},
                         {"kind":"indicator","B":[1]}]})");
  ASSERT_TRUE(inst.vertex_functions);
  EXPECT_EQ(inst.vertex_functions->table(0), (std::vector<Value>{0, 1}));
  EXPECT_EQ(inst.vertex_functions->table(1), (std::vector<Value>{-1, 0, -1}));
  EXPECT_EQ(inst.vertex_functions->table(2), (std::vector<Value>{-1, 0}));
  const Instance lu = parse_instance(R"({"n": 3, "edges": [[1,2],[2,3]],
    "vertex_functions": [{"kind":"interval","l":0,"u":1}, {"kind":"interval","l":1,"u":1},
                         {"kind":"interval","l":1,"u":1}]})");
  EXPECT_EQ(lu.vertex_functions->table(1), (std::vector<Value>{-1, 0, -1}));
}

TEST(InstanceFile, RoundTripRandom) {
  Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    Instance inst;
    const int n = static_cast<int>(rng.uniform(1, 9));
    inst.graph = random_graph(n, static_cast<std::size_t>(rng.uniform(0, n * (n - 1) / 2)), rng);
    inst.vertex_functions = SeparableObjective(inst.graph, random_tables(inst.graph, -9, 9, rng));
    if (rng.chance(0.5)) inst.coloring = random_coloring(inst.graph, static_cast<int>(rng.uniform(1, 3)), rng);
    if (rng.chance(0.5)) {
      const int r = static_cast<int>(rng.uniform(1, 3));
      inst.criteria = MultiCriteriaObjective{random_weights(r, n, -3, 3, rng), random_convex_function(r, rng)};
    }
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(serialize_instance(back), text);
  }
}

TEST(InstanceFile, CanonicalizationIsIdempotent) {
  const std::string messy = R"({"edges": [[3,2],[1,2]], "n": 3, "vertex_functions": [{"kind":"square"},{"kind":"square"},{"kind":"square"}]})";
  const std::string once = serialize_instance(parse_instance(messy));
  EXPECT_EQ(serialize_instance(parse_instance(once)), once);
  EXPECT_EQ(instance_digest(parse_instance(messy)), instance_digest(parse_instance(once)));
}

TEST(ForestFile, ParsesBothShapes) {
  EXPECT_EQ(parse_forest("[0,1,1]", 3), (std::vector<int>{-1, 0, 0}));
  EXPECT_EQ(parse_forest(R"({"parent": [2,0]})", 2), (std::vector<int>{1, -1}));
  EXPECT_THROW(parse_forest("[0,1]", 3), InputError);
  EXPECT_THROW(parse_forest("[0,4,1]", 3), InputError);
}
