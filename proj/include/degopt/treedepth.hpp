#pragma once

#include <optional>
#include <vector>

#include "degopt/graph.hpp"

namespace degopt {

struct IpModel;

// Rooted forest on {0..n-1} given by parent links (-1 for roots). A forest
// is valid for a graph when every edge joins an ancestor-descendant pair;
// its height (vertices on the longest root-to-leaf path) then bounds the
// tree-depth.
class EliminationForest {
 public:
  EliminationForest() = default;
  // Throws InputError on out-of-range parents or cycles.
  explicit EliminationForest(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& roots() const { return roots_; }
  const std::vector<int>& children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
  // Number of vertices on the path from the root to v (roots have depth 1).
  int depth(int v) const { return depth_.at(static_cast<std::size_t>(v)); }
  int height() const { return height_; }
  // True when a lies on the root path of v (a == v included).
  bool is_ancestor(int a, int v) const;
  // Root path of v without v itself, root first.
  std::vector<int> ancestors(int v) const;

  friend bool operator==(const EliminationForest& a, const EliminationForest& b) { return a.parent_ == b.parent_; }

 private:
  std::vector<int> parent_;
  std::vector<int> roots_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  int height_ = 0;
};

// First edge (in edge order) whose endpoints are not ancestor-related.
std::optional<std::size_t> find_violating_edge(const Graph& g, const EliminationForest& forest);
// Throws PreconditionError if the forest does not cover exactly [n].
bool validate_forest(const Graph& g, const EliminationForest& forest);

struct TreeDepthResult {
  int depth = 0;
  EliminationForest forest;
};

inline constexpr int kExactTreeDepthCap = 15;

// Smallest height of a single rooted tree valid for g (0 for the empty
// graph). For connected g this is the usual recursion
// td(G) = 1 + min_v td(G - v); a disconnected g still needs one root above
// all components, so a perfect matching on 2k >= 4 vertices has depth 3.
// Memoized over vertex subsets; throws LimitError above `cap` vertices.
TreeDepthResult treedepth_exact(const Graph& g, int cap = kExactTreeDepthCap);

// Same over rooted forests: the maximum over components.
TreeDepthResult treedepth_exact_forest(const Graph& g, int cap = kExactTreeDepthCap);

// Deterministic valid forest with no optimality claim: each component is
// rooted at a vertex whose removal leaves the smallest largest component.
EliminationForest heuristic_forest(const Graph& g);

// The forest T' over the rows of the colored IP: c_1 - ... - c_p chain,
// every root of T hung below c_p, T's edges among the a's and a_i - b_i.
// Vertex layout matches the row order: a_i = i, b_i = n + i, c_k = 2n + k.
struct ConstraintTree {
  int n = 0;
  int num_colors = 0;
  EliminationForest forest;

  int a(int i) const { return i; }
  int b(int i) const { return n + i; }
  int c(int k) const { return 2 * n + k; }
};

// Throws PreconditionError when `tree` is not valid for `host`.
ConstraintTree build_constraint_tree(const Graph& host, const EliminationForest& tree, int num_colors);

// G(A^T): constraints adjacent iff they share a variable with nonzero
// coefficients in both rows.
Graph constraint_graph(const IpModel& model);

}  // namespace degopt
