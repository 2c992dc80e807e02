#include "degopt/treedepth.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "degopt/error.hpp"
#include "degopt/ip_model.hpp"

namespace degopt {

EliminationForest::EliminationForest(std::vector<int> parent) : parent_(std::move(parent)) {
  const int n = size();
  children_.assign(parent_.size(), {});
  depth_.assign(parent_.size(), 0);
  for (int v = 0; v < n; ++v) {
    const int p = parent_[static_cast<std::size_t>(v)];
    if (p < -1 || p >= n || p == v)
      throw InputError("forest: vertex " + std::to_string(v + 1) + " has an invalid parent");
    if (p == -1)
      roots_.push_back(v);
    else
      children_[static_cast<std::size_t>(p)].push_back(v);
  }
  // Depths by walking down from the roots; unreached vertices lie on cycles.
  std::vector<int> stack(roots_.begin(), roots_.end());
  for (int r : roots_) depth_[static_cast<std::size_t>(r)] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    height_ = std::max(height_, depth_[static_cast<std::size_t>(v)]);
    for (int c : children_[static_cast<std::size_t>(v)]) {
      depth_[static_cast<std::size_t>(c)] = depth_[static_cast<std::size_t>(v)] + 1;
      stack.push_back(c);
    }
  }
  if (reached != n) throw InputError("forest: parent links contain a cycle");
}

bool EliminationForest::is_ancestor(int a, int v) const {
  const int da = depth(a);
  while (depth(v) > da) v = parent(v);
  return v == a;
}

std::vector<int> EliminationForest::ancestors(int v) const {
  std::vector<int> out;
  for (int p = parent(v); p != -1; p = parent(p)) out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> find_violating_edge(const Graph& g, const EliminationForest& forest) {
  if (forest.size() != g.num_vertices())
    throw PreconditionError("forest covers " + std::to_string(forest.size()) + " vertices but the graph has " +
                            std::to_string(g.num_vertices()));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (!forest.is_ancestor(ed.u, ed.v) && !forest.is_ancestor(ed.v, ed.u)) return e;
  }
  return std::nullopt;
}

bool validate_forest(const Graph& g, const EliminationForest& forest) { return !find_violating_edge(g, forest); }

namespace {

using Mask = std::uint32_t;

class ExactSolver {
 public:
  explicit ExactSolver(const Graph& g) : n_(g.num_vertices()), adj_(static_cast<std::size_t>(n_), 0) {
    for (const Edge& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
      adj_[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    memo_.assign(std::size_t{1} << n_, -1);
    choice_.assign(std::size_t{1} << n_, -1);
  }

  int td(Mask s) {
    if (s == 0) return 0;
    int8_t& slot = memo_[s];
    if (slot >= 0) return slot;
    const auto comps = components(s);
    int best;
    if (comps.size() > 1) {
      best = 0;
      for (Mask c : comps) best = std::max(best, td(c));
    } else {
      best = n_ + 1;
      for (int v = 0; v < n_; ++v) {
        if (!(s >> v & 1)) continue;
        const int t = 1 + td(s & ~(Mask{1} << v));
        if (t < best) {
          best = t;
          choice_[s] = static_cast<int8_t>(v);
        }
      }
    }
    memo_[s] = static_cast<int8_t>(best);
    return best;
  }

  void build(Mask s, int parent, std::vector<int>& out) {
    for (Mask c : components(s)) {
      td(c);
      const int v = choice_[c];
      out[static_cast<std::size_t>(v)] = parent;
      build(c & ~(Mask{1} << v), v, out);
    }
  }

  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> out;
    while (s) {
      Mask comp = s & (~s + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(__builtin_ctz(f))];
        next &= s & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  }

 private:
  int n_;
  std::vector<Mask> adj_;
  std::vector<int8_t> memo_;
  std::vector<int8_t> choice_;
};

// Connected components of the subgraph induced on `alive`, each sorted.
std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& vertices,
                                            const std::vector<char>& alive) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int s : vertices) {
    if (!alive[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s}, stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t e : g.incident(v)) {
        const int w = g.edge(e).other(v);
        if (alive[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

namespace {

void check_exact_cap(int n, int cap) {
  if (n > cap || n > 25)
    throw LimitError("exact tree-depth is capped at " + std::to_string(cap) + " vertices (got " + std::to_string(n) +
                     "); use the heuristic or supply a forest");
}

Mask full_mask(int n) { return n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1); }

}  // namespace

TreeDepthResult treedepth_exact_forest(const Graph& g, int cap) {
  const int n = g.num_vertices();
  check_exact_cap(n, cap);
  ExactSolver solver(g);
  TreeDepthResult res;
  res.depth = solver.td(full_mask(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  solver.build(full_mask(n), -1, parent);
  res.forest = EliminationForest(std::move(parent));
  return res;
}

TreeDepthResult treedepth_exact(const Graph& g, int cap) {
  const int n = g.num_vertices();
  check_exact_cap(n, cap);
  ExactSolver solver(g);
  const Mask all = full_mask(n);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  TreeDepthResult res;
  if (solver.components(all).size() <= 1) {
    res.depth = solver.td(all);
    solver.build(all, -1, parent);
  } else {
    // One tree: some vertex sits above every component of the rest.
    int root = -1;
    res.depth = n + 1;
    for (int v = 0; v < n; ++v) {
      const int t = 1 + solver.td(all & ~(Mask{1} << v));
      if (t < res.depth) {
        res.depth = t;
        root = v;
      }
    }
    solver.build(all & ~(Mask{1} << root), root, parent);
  }
  res.forest = EliminationForest(std::move(parent));
  return res;
}

EliminationForest heuristic_forest(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);

  // Work list of (component, parent of its root).
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  std::vector<std::pair<std::vector<int>, int>> work;
  for (auto& c : components_of(g, all, alive)) work.emplace_back(std::move(c), -1);

  while (!work.empty()) {
    auto [comp, above] = std::move(work.back());
    work.pop_back();
    int best = comp.front();
    std::size_t best_largest = comp.size() + 1;
    int best_degree = -1;
    if (comp.size() > 2) {
      for (int v : comp) {
        alive[static_cast<std::size_t>(v)] = 0;
        std::size_t largest = 0;
        for (const auto& c : components_of(g, comp, alive)) largest = std::max(largest, c.size());
        alive[static_cast<std::size_t>(v)] = 1;
        const int deg = g.degree(v);
        if (largest < best_largest || (largest == best_largest && deg > best_degree)) {
          best = v;
          best_largest = largest;
          best_degree = deg;
        }
      }
    }
    parent[static_cast<std::size_t>(best)] = above;
    alive[static_cast<std::size_t>(best)] = 0;
    for (auto& c : components_of(g, comp, alive)) work.emplace_back(std::move(c), best);
  }
  EliminationForest forest(std::move(parent));
  if (!validate_forest(g, forest)) throw Error("internal error: heuristic forest is not valid");
  return forest;
}

ConstraintTree build_constraint_tree(const Graph& host, const EliminationForest& tree, int num_colors) {
  if (auto bad = find_violating_edge(host, tree))
    throw PreconditionError("forest is not valid: edge {" + std::to_string(host.edge(*bad).u + 1) + "," +
                            std::to_string(host.edge(*bad).v + 1) + "} joins vertices that are not ancestor-related");
  if (num_colors < 0) throw PreconditionError("colour count must be nonnegative");
  ConstraintTree t;
  t.n = host.num_vertices();
  t.num_colors = num_colors;
  std::vector<int> parent(static_cast<std::size_t>(2 * t.n + num_colors), -1);
  for (int k = 1; k < num_colors; ++k) parent[static_cast<std::size_t>(t.c(k))] = t.c(k - 1);
  const int hang = num_colors > 0 ? t.c(num_colors - 1) : -1;
  for (int i = 0; i < t.n; ++i) {
    const int p = tree.parent(i);
    parent[static_cast<std::size_t>(t.a(i))] = p == -1 ? hang : t.a(p);
    parent[static_cast<std::size_t>(t.b(i))] = t.a(i);
  }
  t.forest = EliminationForest(std::move(parent));
  return t;
}

Graph constraint_graph(const IpModel& model) {
  const std::size_t rows = model.constraints.size();
  std::vector<std::vector<int>> rows_of_var(model.variables.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& t : model.constraints[r].terms)
      if (t.coef != 0) rows_of_var[t.var].push_back(static_cast<int>(r));
  std::vector<Edge> edges;
  for (auto& list : rows_of_var) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t x = 0; x < list.size(); ++x)
      for (std::size_t y = x + 1; y < list.size(); ++y) edges.push_back({list[x], list[y]});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(static_cast<int>(rows), std::move(edges));
}

}  // namespace degopt
