#pragma once

#include <span>
#include <vector>

#include "degopt/graph.hpp"

namespace degopt {

enum class DirectionKind { prescribed, unprescribed };

// Integer vectors in Z^n, each containing a direction of some edge of the
// degree-sequence polytope. Stored primitive (gcd 1, first nonzero
// coordinate positive), deduplicated and sorted.
struct DirectionSet {
  DirectionKind kind = DirectionKind::prescribed;
  std::vector<std::vector<Value>> vectors;
  // Prescribed set of a graph with fewer than two edges.
  bool degenerate = false;

  std::size_t size() const { return vectors.size(); }
};

// Divides by the gcd of the entries and flips the sign so the first nonzero
// entry is positive. The zero vector is returned unchanged.
std::vector<Value> primitive_form(std::vector<Value> v);

// One representative of +-(d(e) - d(f)) per pair of distinct edges.
DirectionSet directions_prescribed(const Graph& host);
// {d(e) : e in E}.
DirectionSet directions_unprescribed(const Graph& host);

struct LinOptResult {
  EdgeSubset subset;
  DegreeSequence point;  // d(subset)
  Value value = 0;       // u . point
};

// u . d(e) for every edge.
std::vector<Value> edge_values(const Graph& host, std::span<const Value> u);

// Maximizes u . d(F) over |F| = m by taking the m largest edge values;
// ties go to the lower edge index.
LinOptResult linopt_prescribed(const Graph& host, std::size_t m, std::span<const Value> u);
// Maximizes u . d(F) over all F by taking every edge with u . d(e) > 0.
LinOptResult linopt_unprescribed(const Graph& host, std::span<const Value> u);

}  // namespace degopt
