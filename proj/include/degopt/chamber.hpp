#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "degopt/linear_oracle.hpp"

namespace degopt {

// Images (w_1 . g, ..., w_r . g) of direction vectors g, reduced to primitive
// sign-normalized form, zeros dropped, deduplicated.
struct ProjectedGenerators {
  int ambient_dim = 0;                          // r
  std::vector<std::vector<Value>> generators;   // each of length r
  int span_dim = 0;                             // s = rank of the generators

  std::size_t size() const { return generators.size(); }
};

// A functional c interior to one full-dimensional cell of the central
// arrangement { c : c . g_j = 0 }. c is an exact rational vector stored as
// its primitive integer multiple (positive rescaling does not change a cell).
struct ChamberWitness {
  std::vector<Value> functional;
  std::vector<std::int8_t> signs;  // sign(c . g_j), all nonzero
};

ProjectedGenerators project_directions(const DirectionSet& directions, std::span<const std::vector<Value>> weights);

// Exact rank of a set of integer vectors.
int exact_rank(std::span<const std::vector<Value>> vectors, int dim);

// One witness per cell of the arrangement, via recursive facet descent:
// every cell has a facet on some hyperplane g_i^perp, so each witness c' of
// the arrangement induced on g_i^perp yields the two adjacent cells
// c' +- eps g_i with eps = min_j |c'.g_j| / (2 max_j |g_i.g_j|).
// Witnesses lie in the span of the generators. s = 0 gives the single zero
// witness.
std::vector<ChamberWitness> enumerate_chamber_witnesses(const ProjectedGenerators& generators);

// Upper bound 2 * sum_{k<s} C(g-1, k) on the number of cells of a central
// arrangement of g hyperplanes of rank s (attained in general position).
std::uint64_t chamber_count_bound(std::size_t num_generators, int span_dim);

}  // namespace degopt
