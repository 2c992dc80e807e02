#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "degopt/checked.hpp"

namespace degopt {

// Vertices are 0-based internally. Instance files use 1-based labels; the
// file layer adds/subtracts one and nothing else does.
using Vertex = int;

struct Edge {
  Vertex u = 0;  // u < v after normalization
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool contains(Vertex w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Degree of each vertex in a subgraph, indexed by the full vertex set.
using DegreeSequence = std::vector<int>;

// Simple undirected graph with a canonical (lexicographically sorted) edge
// list. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  struct Normalized;

  // Sorts the edges canonically; throws InputError on loops, out-of-range
  // endpoints or duplicate pairs.
  static Normalized normalize(int n, std::vector<Edge> edges);
  static Graph from_edges(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  int degree(Vertex v) const { return degree_.at(static_cast<std::size_t>(v)); }
  const DegreeSequence& degrees() const { return degree_; }
  // Edge indices containing v, ascending.
  std::span<const std::size_t> incident(Vertex v) const { return incident_.at(static_cast<std::size_t>(v)); }
  std::optional<std::size_t> find_edge(Vertex a, Vertex b) const;
  // Neighbours of v, ascending.
  std::vector<Vertex> neighbours(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  DegreeSequence degree_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct Graph::Normalized {
  Graph graph;
  // order[k] is the input position of canonical edge k.
  std::vector<std::size_t> order;
};

// Subset F of the host edge list, as membership flags by edge position.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t num_edges) : bits_(num_edges, false) {}
  static EdgeSubset from_indices(std::size_t num_edges, std::span<const std::size_t> indices);
  static EdgeSubset all(std::size_t num_edges) {
    EdgeSubset s;
    s.bits_.assign(num_edges, true);
    return s;
  }

  std::size_t size() const { return bits_.size(); }
  bool contains(std::size_t e) const { return bits_.at(e); }
  void set(std::size_t e, bool on = true) { bits_.at(e) = on; }
  std::size_t count() const;
  std::vector<std::size_t> indices() const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  // Lexicographic order on the ascending index lists.
  static bool index_order_less(const EdgeSubset& a, const EdgeSubset& b);

 private:
  std::vector<bool> bits_;
};

DegreeSequence degree_sequence(const Graph& host, const EdgeSubset& subset);
DegreeSequence edge_degree_vector(const Graph& host, std::size_t edge_index);

// p-partition of the edge set together with the prescribed per-colour counts.
struct EdgeColoring {
  std::vector<int> color;   // 0-based colour of each edge position
  std::vector<int> counts;  // m_k for each colour

  int num_colors() const { return static_cast<int>(counts.size()); }
  std::vector<int> class_sizes() const;
  // Throws InputError unless colours are in range, every m_k lies in
  // [0, |E_k|] and the colour vector matches the host's edge count.
  void validate(const Graph& host) const;
  // Colour counts realised by a subset.
  std::vector<int> counts_of(const EdgeSubset& subset) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// f(x) = sum_i f_i(x_i), each f_i stored as a value table over
// {0, ..., d_i(H)}. Tables outside that domain are rejected, never extended.
class SeparableObjective {
 public:
  SeparableObjective() = default;
  SeparableObjective(const Graph& host, std::vector<std::vector<Value>> tables);

  std::size_t num_vertices() const { return tables_.size(); }
  const std::vector<Value>& table(Vertex v) const { return tables_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Value>>& tables() const { return tables_; }
  Value at(Vertex v, int degree) const;
  Value evaluate(std::span<const int> degrees) const;

  friend bool operator==(const SeparableObjective&, const SeparableObjective&) = default;

 private:
  std::vector<std::vector<Value>> tables_;
};

Value evaluate_separable(const SeparableObjective& objective, std::span<const int> degrees);

// Small named graph families. Vertices are 0-based.
namespace graphs {
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);  // centre is vertex 0
Graph complete_bipartite(int a, int b);  // sides {0..a-1}, {a..a+b-1}
// Perfect matching on 2k vertices with edges {i, k+i}.
Graph perfect_matching(int k);
}  // namespace graphs

}  // namespace degopt
