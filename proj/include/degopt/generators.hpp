#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "degopt/graph.hpp"
#include "degopt/objective.hpp"

namespace degopt {

// Seeded source whose draws are identical on every platform (the standard
// distributions are implementation-defined, so they are not used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // True with probability p.
  bool chance(double p);
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t k = items.size(); k > 1; --k)
      std::swap(items[k - 1], items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(k) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

// Uniform among graphs on n vertices with exactly `edges` edges.
Graph random_graph(int n, std::size_t edges, Rng& rng);

struct BoundedTreeDepthSample {
  Graph graph;
  std::vector<int> parent;  // -1 for roots; forest height <= d
};

// Vertex i becomes a root with probability root_prob (always when no
// earlier vertex has depth < d), otherwise the child of a uniform earlier
// vertex of depth < d. Each vertex is joined to each proper ancestor with
// probability edge_prob.
BoundedTreeDepthSample random_bounded_treedepth(int n, int d, double edge_prob, double root_prob, Rng& rng);

// Tables with entries uniform in [lo, hi] over {0..d_i(H)}.
std::vector<std::vector<Value>> random_tables(const Graph& host, Value lo, Value hi, Rng& rng);

// Uniform colours in {0..p-1}; counts uniform in [0, |E_k|].
EdgeColoring random_coloring(const Graph& host, int p, Rng& rng);

std::vector<std::vector<Value>> random_weights(int r, int n, Value lo, Value hi, Rng& rng);

// Max-affine with 1-3 terms or a sum of 1-2 squared affine forms;
// coefficients in [-3, 3], offsets in [-5, 5].
ConvexFunction random_convex_function(int r, Rng& rng);

// One representative per isomorphism class of connected graphs on n
// vertices (n <= 6), in increasing order of edge count.
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only);

}  // namespace degopt
