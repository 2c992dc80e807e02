#include "degopt/linear_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degopt/error.hpp"

namespace degopt {

std::vector<Value> primitive_form(std::vector<Value> v) {
  Value g = 0;
  for (Value x : v) g = std::gcd(g, x);  // std::gcd works on absolute values
  if (g == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](Value x) { return x != 0; });
  if (*first < 0) g = -g;
  for (Value& x : v) x /= g;
  return v;
}

namespace {

void sort_unique(std::vector<std::vector<Value>>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

LinOptResult make_result(const Graph& host, EdgeSubset subset, std::span<const Value> u) {
  LinOptResult r;
  r.point = degree_sequence(host, subset);
  for (std::size_t i = 0; i < r.point.size(); ++i)
    r.value = checked::add(r.value, checked::mul(u[i], static_cast<Value>(r.point[i])));
  r.subset = std::move(subset);
  return r;
}

void check_functional(const Graph& host, std::span<const Value> u) {
  if (u.size() != static_cast<std::size_t>(host.num_vertices()))
    throw PreconditionError("functional has length " + std::to_string(u.size()) + "; expected n=" +
                            std::to_string(host.num_vertices()));
}

}  // namespace

DirectionSet directions_prescribed(const Graph& host) {
  DirectionSet out;
  out.kind = DirectionKind::prescribed;
  const std::size_t m = host.num_edges();
  if (m < 2) {
    out.degenerate = true;
    return out;
  }
  const auto n = static_cast<std::size_t>(host.num_vertices());
  out.vectors.reserve(m * (m - 1) / 2);
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = e + 1; f < m; ++f) {
      std::vector<Value> d(n, 0);
      d[static_cast<std::size_t>(host.edge(e).u)] += 1;
      d[static_cast<std::size_t>(host.edge(e).v)] += 1;
      d[static_cast<std::size_t>(host.edge(f).u)] -= 1;
      d[static_cast<std::size_t>(host.edge(f).v)] -= 1;
      out.vectors.push_back(primitive_form(std::move(d)));
    }
  }
  sort_unique(out.vectors);
  return out;
}

DirectionSet directions_unprescribed(const Graph& host) {
  DirectionSet out;
  out.kind = DirectionKind::unprescribed;
  const auto n = static_cast<std::size_t>(host.num_vertices());
  for (std::size_t e = 0; e < host.num_edges(); ++e) {
    std::vector<Value> d(n, 0);
    d[static_cast<std::size_t>(host.edge(e).u)] = 1;
    d[static_cast<std::size_t>(host.edge(e).v)] = 1;
    out.vectors.push_back(std::move(d));
  }
  sort_unique(out.vectors);
  return out;
}

std::vector<Value> edge_values(const Graph& host, std::span<const Value> u) {
  check_functional(host, u);
  std::vector<Value> vals(host.num_edges());
  for (std::size_t e = 0; e < host.num_edges(); ++e)
    vals[e] = checked::add(u[static_cast<std::size_t>(host.edge(e).u)], u[static_cast<std::size_t>(host.edge(e).v)]);
  return vals;
}

LinOptResult linopt_prescribed(const Graph& host, std::size_t m, std::span<const Value> u) {
  if (m > host.num_edges())
    throw PreconditionError("m=" + std::to_string(m) + " exceeds the edge count " + std::to_string(host.num_edges()));
  const auto vals = edge_values(host, u);
  std::vector<std::size_t> order(vals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // stable: equal values keep ascending index order
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  EdgeSubset chosen(host.num_edges());
  for (std::size_t k = 0; k < m; ++k) chosen.set(order[k]);
  return make_result(host, std::move(chosen), u);
}

LinOptResult linopt_unprescribed(const Graph& host, std::span<const Value> u) {
  const auto vals = edge_values(host, u);
  EdgeSubset chosen(host.num_edges());
  for (std::size_t e = 0; e < vals.size(); ++e)
    if (vals[e] > 0) chosen.set(e);
  return make_result(host, std::move(chosen), u);
}

}  // namespace degopt
