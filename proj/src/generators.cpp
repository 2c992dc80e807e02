#include "degopt/generators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

#include "degopt/error.hpp"

namespace degopt {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw PreconditionError("empty range for a random draw");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

bool Rng::chance(double p) {
  const double x = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return x < p;
}

Graph random_graph(int n, std::size_t edges, Rng& rng) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  if (edges > pairs.size())
    throw PreconditionError("a graph on " + std::to_string(n) + " vertices has at most " +
                            std::to_string(pairs.size()) + " edges");
  rng.shuffle(pairs);
  pairs.resize(edges);
  return Graph::from_edges(n, std::move(pairs));
}

BoundedTreeDepthSample random_bounded_treedepth(int n, int d, double edge_prob, double root_prob, Rng& rng) {
  if (n < 0 || d < 1) throw PreconditionError("need n >= 0 and d >= 1");
  std::vector<int> parent(static_cast<std::size_t>(n), -1), depth(static_cast<std::size_t>(n), 1);
  std::vector<int> open;  // earlier vertices of depth < d
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    if (!open.empty() && !rng.chance(root_prob)) {
      const int p = open[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(open.size()) - 1))];
      parent[static_cast<std::size_t>(v)] = p;
      depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(p)] + 1;
    }
    for (int a = parent[static_cast<std::size_t>(v)]; a != -1; a = parent[static_cast<std::size_t>(a)])
      if (rng.chance(edge_prob)) edges.push_back({a, v});
    if (depth[static_cast<std::size_t>(v)] < d) open.push_back(v);
  }
  return {Graph::from_edges(n, std::move(edges)), std::move(parent)};
}

std::vector<std::vector<Value>> random_tables(const Graph& host, Value lo, Value hi, Rng& rng) {
  std::vector<std::vector<Value>> tables;
  for (Vertex v = 0; v < host.num_vertices(); ++v) {
    std::vector<Value> t;
    for (int z = 0; z <= host.degree(v); ++z) t.push_back(rng.uniform(lo, hi));
    tables.push_back(std::move(t));
  }
  return tables;
}

EdgeColoring random_coloring(const Graph& host, int p, Rng& rng) {
  if (p < 1) throw PreconditionError("need at least one colour");
  EdgeColoring c;
  for (std::size_t e = 0; e < host.num_edges(); ++e) c.color.push_back(static_cast<int>(rng.uniform(0, p - 1)));
  std::vector<int> sizes(static_cast<std::size_t>(p), 0);
  for (int k : c.color) ++sizes[static_cast<std::size_t>(k)];
  for (int s : sizes) c.counts.push_back(static_cast<int>(rng.uniform(0, s)));
  return c;
}

std::vector<std::vector<Value>> random_weights(int r, int n, Value lo, Value hi, Rng& rng) {
  std::vector<std::vector<Value>> w(static_cast<std::size_t>(r), std::vector<Value>(static_cast<std::size_t>(n)));
  for (auto& row : w)
    for (auto& x : row) x = rng.uniform(lo, hi);
  return w;
}

ConvexFunction random_convex_function(int r, Rng& rng) {
  auto term = [&] {
    AffineTerm t;
    for (int k = 0; k < r; ++k) t.alpha.push_back(rng.uniform(-3, 3));
    t.beta = rng.uniform(-5, 5);
    return t;
  };
  if (rng.chance(0.5)) {
    MaxAffine f;
    const auto count = rng.uniform(1, 3);
    for (std::int64_t k = 0; k < count; ++k) f.terms.push_back(term());
    return f;
  }
  SumSquaredAffine f;
  const auto count = rng.uniform(1, 2);
  for (std::int64_t k = 0; k < count; ++k) f.terms.push_back(term());
  return f;
}

namespace {

bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
    return x;
  };
  int parts = n;
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      comp[static_cast<std::size_t>(a)] = b;
      --parts;
    }
  }
  return parts <= 1;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) { return graphs_up_to_isomorphism(n, true); }

std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
  if (n < 1 || n > 6) throw PreconditionError("graph enumeration supports 1 <= n <= 6");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::size_t np = pairs.size();
  // pair_index[u][v] for relabelled pairs
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t k = 0; k < np; ++k) {
    pair_index[static_cast<std::size_t>(pairs[k].u)][static_cast<std::size_t>(pairs[k].v)] = static_cast<int>(k);
    pair_index[static_cast<std::size_t>(pairs[k].v)][static_cast<std::size_t>(pairs[k].u)] = static_cast<int>(k);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<std::pair<int, std::uint32_t>> reps;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << np); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& p : perms) {
      std::uint32_t img = 0;
      for (std::size_t k = 0; k < np; ++k)
        if (mask >> k & 1)
          img |= std::uint32_t{1}
                 << pair_index[static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[k].u)])]
                              [static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[k].v)])];
      canon = std::min(canon, img);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < np; ++k)
      if (canon >> k & 1) edges.push_back(pairs[k]);
    if (!connected_only || connected(n, edges)) reps.push_back({std::popcount(canon), canon});
  }
  std::stable_sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (const auto& [count, mask] : reps) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < np; ++k)
      if (mask >> k & 1) edges.push_back(pairs[k]);
    out.push_back(Graph::from_edges(n, std::move(edges)));
  }
  return out;
}

}  // namespace degopt
