#include "degopt/gadgets.hpp"

#include <algorithm>
#include <string>

#include "degopt/error.hpp"

namespace degopt {

namespace {

template <typename Fn>
std::vector<std::vector<Value>> tables_by_degree(const Graph& host, Fn fn) {
  std::vector<std::vector<Value>> tables;
  for (Vertex v = 0; v < host.num_vertices(); ++v) {
    std::vector<Value> t;
    for (int z = 0; z <= host.degree(v); ++z) t.push_back(fn(v, static_cast<Value>(z)));
    tables.push_back(std::move(t));
  }
  return tables;
}

Value neg_square_shift(Value z, Value c) {
  const Value t = checked::sub(z, c);
  return checked::neg(checked::mul(t, t));
}

Instance separable(const Graph& host, std::vector<std::vector<Value>> tables, const char* gadget) {
  Instance inst;
  inst.graph = host;
  inst.vertex_functions = SeparableObjective(host, std::move(tables));
  inst.meta = nlohmann::ordered_json::object();
  inst.meta["gadget"] = gadget;
  return inst;
}

}  // namespace

Instance general_factor_instance(const Graph& host, const std::vector<std::vector<int>>& admissible) {
  if (admissible.size() != static_cast<std::size_t>(host.num_vertices()))
    throw InputError("need one admissible degree set per vertex");
  for (Vertex v = 0; v < host.num_vertices(); ++v) {
    const auto& b = admissible[static_cast<std::size_t>(v)];
    if (b.empty()) throw InputError("admissible set of vertex " + std::to_string(v + 1) + " is empty");
    for (int z : b)
      if (z < 0 || z > host.degree(v))
        throw InputError("admissible degree " + std::to_string(z) + " of vertex " + std::to_string(v + 1) +
                         " is outside {0.." + std::to_string(host.degree(v)) + "}");
  }
  return separable(host,
                   tables_by_degree(host,
                                    [&](Vertex v, Value z) -> Value {
                                      const auto& b = admissible[static_cast<std::size_t>(v)];
                                      return std::find(b.begin(), b.end(), static_cast<int>(z)) != b.end() ? 0 : -1;
                                    }),
                   "general-factor");
}

SeparableObjective lu_factor_objective(const Graph& host, const std::vector<int>& lower, const std::vector<int>& upper) {
  const auto n = static_cast<std::size_t>(host.num_vertices());
  if (lower.size() != n || upper.size() != n) throw InputError("need one bound pair per vertex");
  for (std::size_t i = 0; i < n; ++i) {
    if (lower[i] < 0 || lower[i] > upper[i])
      throw InputError("vertex " + std::to_string(i + 1) + ": bounds must satisfy 0 <= l <= u");
    if (upper[i] > host.degree(static_cast<Vertex>(i)))
      throw InputError("vertex " + std::to_string(i + 1) + ": upper bound " + std::to_string(upper[i]) +
                       " exceeds its degree " + std::to_string(host.degree(static_cast<Vertex>(i))));
  }
  return SeparableObjective(host, tables_by_degree(host, [&](Vertex v, Value z) -> Value {
                              const Value l = lower[static_cast<std::size_t>(v)];
                              const Value u = upper[static_cast<std::size_t>(v)];
                              if (z <= l) return z - l;
                              if (z <= u) return 0;
                              return u - z;
                            }));
}

Instance exact_matching_instance(int r, const std::vector<int>& edge_colors, const std::vector<int>& counts) {
  if (r < 1) throw InputError("exact matching needs r >= 1");
  const Graph h = graphs::complete_bipartite(r, r);
  if (edge_colors.size() != h.num_edges())
    throw InputError("partition must assign a colour to each of the " + std::to_string(h.num_edges()) + " edges");
  Instance inst = separable(h, tables_by_degree(h, [](Vertex, Value z) { return neg_square_shift(z, 1); }),
                            "exact-matching");
  EdgeColoring col{edge_colors, counts};
  col.validate(h);
  inst.coloring = std::move(col);
  Value total = 0;
  for (int m : counts) total += m;
  inst.meta["r"] = r;
  inst.meta["sum_counts_matches_r"] = total == r;
  return inst;
}

Instance cubic_subgraph_instance(const Graph& host) {
  return separable(host, tables_by_degree(host, [](Vertex, Value z) -> Value { return z == 0 || z == 3 ? 0 : -1; }),
                   "cubic-subgraph");
}

Instance bipartite_concave_convex_instance(const Graph& host, const std::vector<bool>& side) {
  if (side.size() != static_cast<std::size_t>(host.num_vertices())) throw InputError("need a side for every vertex");
  for (const Edge& e : host.edges())
    if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)])
      throw InputError("not bipartite: edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                       "} lies inside one side");
  Instance inst = separable(host,
                            tables_by_degree(host,
                                             [&](Vertex v, Value z) -> Value {
                                               if (side[static_cast<std::size_t>(v)]) return neg_square_shift(z, 1);
                                               return checked::mul(z, z - 3);
                                             }),
                            "bipartite-concave-convex");
  nlohmann::ordered_json left = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < host.num_vertices(); ++v)
    if (side[static_cast<std::size_t>(v)]) left.push_back(v + 1);
  inst.meta["side_I"] = std::move(left);
  return inst;
}

Value subdivision_penalty(const Graph& host) {
  const Value n = host.num_vertices();
  const Value nm1 = std::max<Value>(0, n - 1);
  return checked::add(Value{1}, checked::mul(n, checked::mul(nm1, nm1)));
}

Instance subdivision_hardness_instance(const Graph& host, int m) {
  if (m < 0 || static_cast<std::size_t>(m) > host.num_edges())
    throw PreconditionError("m=" + std::to_string(m) + " is outside [0, " + std::to_string(host.num_edges()) + "]");
  const int n = host.num_vertices();
  const int ne = static_cast<int>(host.num_edges());
  const int apex = n + ne;
  std::vector<Edge> edges;
  for (int e = 0; e < ne; ++e) {
    edges.push_back({host.edge(static_cast<std::size_t>(e)).u, n + e});
    edges.push_back({host.edge(static_cast<std::size_t>(e)).v, n + e});
    edges.push_back({n + e, apex});
  }
  const Graph l = Graph::from_edges(apex + 1, std::move(edges));
  const Value a = subdivision_penalty(host);
  Instance inst = separable(l,
                            tables_by_degree(l,
                                             [&](Vertex v, Value z) -> Value {
                                               if (v < n) return checked::mul(z, z);
                                               if (v == apex) return checked::mul(a, neg_square_shift(z, m));
                                               return checked::mul(a, checked::mul(z, z - 3));
                                             }),
                            "subdivision");
  inst.meta["a"] = a;
  inst.meta["m"] = m;
  inst.meta["original_n"] = n;
  return inst;
}

EdgeSubset extract_subdivision_edges(const Graph& host, const Graph& subdivided, const EdgeSubset& subset) {
  const DegreeSequence d = degree_sequence(subdivided, subset);
  EdgeSubset out(host.num_edges());
  for (std::size_t e = 0; e < host.num_edges(); ++e)
    if (d.at(static_cast<std::size_t>(host.num_vertices()) + e) == 3) out.set(e);
  return out;
}

Instance partition_gadget(const std::vector<Value>& sizes) {
  if (sizes.empty()) throw InputError("partition needs at least one number");
  Value total = 0;
  for (Value a : sizes) {
    if (a < 1) throw InputError("partition sizes must be positive");
    total = checked::add(total, a);
  }
  const int q = static_cast<int>(sizes.size());
  std::vector<Edge> edges;
  std::vector<Value> weights;
  for (int j = 0; j < q; ++j) {
    edges.push_back({0, 2 + j});
    weights.push_back(sizes[static_cast<std::size_t>(j)]);
    edges.push_back({1, 2 + j});
    weights.push_back(sizes[static_cast<std::size_t>(j)]);
  }
  Instance inst;
  auto norm = Graph::normalize(q + 2, std::move(edges));
  inst.graph = std::move(norm.graph);
  std::vector<Value> w(weights.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = weights[norm.order[k]];
  inst.weights = std::move(w);
  WeightedInstance probe{inst.graph, *inst.weights, {}};
  std::vector<OffsetTable> functions;
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
    const auto [lo, hi] = probe.domain(v);
    OffsetTable t{lo, {}};
    for (Value z = lo; z <= hi; ++z)
      t.values.push_back(v == 0 ? neg_square_shift(checked::mul(Value{2}, z), total) : 0);
    functions.push_back(std::move(t));
  }
  inst.weighted_functions = std::move(functions);
  inst.meta = nlohmann::ordered_json::object();
  inst.meta["gadget"] = "partition";
  inst.meta["sizes"] = sizes;
  return inst;
}

Value weighted_objective_eval(const WeightedInstance& instance, const EdgeSubset& subset) {
  const auto z = instance.weighted_degrees(subset);
  Value total = 0;
  for (std::size_t i = 0; i < z.size(); ++i) total = checked::add(total, instance.functions.at(i).at(z[i]));
  return total;
}

WeightedOptimum weighted_bruteforce(const WeightedInstance& instance, const std::optional<EdgeColoring>& coloring,
                                    std::size_t edge_cap) {
  instance.validate();
  const std::size_t ne = instance.graph.num_edges();
  if (ne > edge_cap || ne >= 63)
    throw LimitError("weighted brute force is capped at " + std::to_string(edge_cap) + " edges; got " +
                     std::to_string(ne));
  if (coloring) coloring->validate(instance.graph);
  WeightedOptimum best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
    EdgeSubset s(ne);
    for (std::size_t e = 0; e < ne; ++e)
      if (mask >> e & 1) s.set(e);
    if (coloring && coloring->counts_of(s) != coloring->counts) continue;
    const Value v = weighted_objective_eval(instance, s);
    if (!best.feasible || v > best.value) {
      best.feasible = true;
      best.value = v;
      best.subset = std::move(s);
    }
  }
  return best;
}

}  // namespace degopt
