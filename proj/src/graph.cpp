#include "degopt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degopt/error.hpp"

namespace degopt {

Graph::Normalized Graph::normalize(int n, std::vector<Edge> edges) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    Edge& e = edges[k];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge " + std::to_string(k + 1) + " has an endpoint outside 1.." + std::to_string(n));
    if (e.u == e.v) throw InputError("edge " + std::to_string(k + 1) + " is a loop");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

  Normalized out;
  out.order = order;
  Graph& g = out.graph;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (std::size_t k : order) {
    if (!g.edges_.empty() && g.edges_.back() == edges[k])
      throw InputError("duplicate edge {" + std::to_string(edges[k].u + 1) + "," + std::to_string(edges[k].v + 1) + "}");
    g.edges_.push_back(edges[k]);
  }
  g.degree_.assign(static_cast<std::size_t>(n), 0);
  g.incident_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    for (Vertex w : {g.edges_[e].u, g.edges_[e].v}) {
      ++g.degree_[static_cast<std::size_t>(w)];
      g.incident_[static_cast<std::size_t>(w)].push_back(e);
    }
  }
  return out;
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) { return normalize(n, std::move(edges)).graph; }

std::optional<std::size_t> Graph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (std::size_t e : incident(v)) out.push_back(edges_[e].other(v));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSubset EdgeSubset::from_indices(std::size_t num_edges, std::span<const std::size_t> indices) {
  EdgeSubset s(num_edges);
  for (std::size_t e : indices) {
    if (e >= num_edges) throw PreconditionError("edge index " + std::to_string(e) + " out of range");
    s.bits_[e] = true;
  }
  return s;
}

std::size_t EdgeSubset::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::size_t> EdgeSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < bits_.size(); ++e)
    if (bits_[e]) out.push_back(e);
  return out;
}

bool EdgeSubset::index_order_less(const EdgeSubset& a, const EdgeSubset& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

DegreeSequence degree_sequence(const Graph& host, const EdgeSubset& subset) {
  if (subset.size() != host.num_edges())
    throw PreconditionError("edge subset has " + std::to_string(subset.size()) + " flags but the graph has " +
                            std::to_string(host.num_edges()) + " edges");
  DegreeSequence d(static_cast<std::size_t>(host.num_vertices()), 0);
  for (std::size_t e = 0; e < host.num_edges(); ++e) {
    if (!subset.contains(e)) continue;
    ++d[static_cast<std::size_t>(host.edge(e).u)];
    ++d[static_cast<std::size_t>(host.edge(e).v)];
  }
  return d;
}

DegreeSequence edge_degree_vector(const Graph& host, std::size_t edge_index) {
  if (edge_index >= host.num_edges())
    throw PreconditionError("edge index " + std::to_string(edge_index) + " out of range");
  DegreeSequence d(static_cast<std::size_t>(host.num_vertices()), 0);
  d[static_cast<std::size_t>(host.edge(edge_index).u)] = 1;
  d[static_cast<std::size_t>(host.edge(edge_index).v)] = 1;
  return d;
}

std::vector<int> EdgeColoring::class_sizes() const {
  std::vector<int> sizes(counts.size(), 0);
  for (int c : color)
    if (c >= 0 && c < num_colors()) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

void EdgeColoring::validate(const Graph& host) const {
  if (color.size() != host.num_edges())
    throw InputError("colour list has " + std::to_string(color.size()) + " entries but the graph has " +
                     std::to_string(host.num_edges()) + " edges");
  for (std::size_t e = 0; e < color.size(); ++e)
    if (color[e] < 0 || color[e] >= num_colors())
      throw InputError("edge " + std::to_string(e + 1) + " has colour " + std::to_string(color[e] + 1) +
                       " outside 1.." + std::to_string(num_colors()));
  const auto sizes = class_sizes();
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] < 0 || counts[k] > sizes[k])
      throw InputError("count m_" + std::to_string(k + 1) + "=" + std::to_string(counts[k]) + " is outside [0, " +
                       std::to_string(sizes[k]) + "]");
}

std::vector<int> EdgeColoring::counts_of(const EdgeSubset& subset) const {
  std::vector<int> out(counts.size(), 0);
  for (std::size_t e = 0; e < subset.size(); ++e)
    if (subset.contains(e)) ++out.at(static_cast<std::size_t>(color.at(e)));
  return out;
}

SeparableObjective::SeparableObjective(const Graph& host, std::vector<std::vector<Value>> tables)
    : tables_(std::move(tables)) {
  if (tables_.size() != static_cast<std::size_t>(host.num_vertices()))
    throw InputError("expected " + std::to_string(host.num_vertices()) + " vertex functions, got " +
                     std::to_string(tables_.size()));
  for (Vertex v = 0; v < host.num_vertices(); ++v) {
    const auto want = static_cast<std::size_t>(host.degree(v)) + 1;
    if (tables_[static_cast<std::size_t>(v)].size() != want)
      throw InputError("function table of vertex " + std::to_string(v + 1) + " has " +
                       std::to_string(tables_[static_cast<std::size_t>(v)].size()) + " entries; its domain {0.." +
                       std::to_string(host.degree(v)) + "} needs " + std::to_string(want));
  }
}

Value SeparableObjective::at(Vertex v, int degree) const {
  const auto& t = table(v);
  if (degree < 0 || static_cast<std::size_t>(degree) >= t.size())
    throw PreconditionError("degree " + std::to_string(degree) + " of vertex " + std::to_string(v + 1) +
                            " is outside its function domain");
  return t[static_cast<std::size_t>(degree)];
}

Value SeparableObjective::evaluate(std::span<const int> degrees) const {
  if (degrees.size() != tables_.size()) throw PreconditionError("degree sequence length does not match the objective");
  Value total = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) total = checked::add(total, at(static_cast<Vertex>(i), degrees[i]));
  return total;
}

Value evaluate_separable(const SeparableObjective& objective, std::span<const int> degrees) {
  return objective.evaluate(degrees);
}

namespace graphs {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, std::move(e));
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(e));
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, std::move(e));
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::from_edges(a + b, std::move(e));
}

Graph perfect_matching(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, k + i});
  return Graph::from_edges(2 * k, std::move(e));
}

}  // namespace graphs
}  // namespace degopt
