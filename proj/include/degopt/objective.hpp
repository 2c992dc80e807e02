#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "degopt/graph.hpp"

namespace degopt {

// alpha . y + beta on Z^r.
struct AffineTerm {
  std::vector<Value> alpha;
  Value beta = 0;

  Value operator()(std::span<const Value> y) const;
  friend bool operator==(const AffineTerm&, const AffineTerm&) = default;
};

// f(y) = max_t (alpha_t . y + beta_t)
struct MaxAffine {
  std::vector<AffineTerm> terms;
  friend bool operator==(const MaxAffine&, const MaxAffine&) = default;
};

// f(y) = sum_t (alpha_t . y + beta_t)^2
struct SumSquaredAffine {
  std::vector<AffineTerm> terms;
  friend bool operator==(const SumSquaredAffine&, const SumSquaredAffine&) = default;
};

// Caller-supplied evaluation oracle. Convexity is trusted, never checked;
// `convex = false` marks results as lower bounds only.
struct OracleFunction {
  std::function<Value(std::span<const Value>)> evaluate;
  bool convex = true;
  friend bool operator==(const OracleFunction&, const OracleFunction&) { return false; }
};

class ConvexFunction {
 public:
  using Repr = std::variant<MaxAffine, SumSquaredAffine, OracleFunction>;

  ConvexFunction() : repr_(MaxAffine{}) {}
  ConvexFunction(MaxAffine f) : repr_(std::move(f)) {}
  ConvexFunction(SumSquaredAffine f) : repr_(std::move(f)) {}
  ConvexFunction(OracleFunction f) : repr_(std::move(f)) {}

  static ConvexFunction identity();  // r = 1, f(y) = y
  static ConvexFunction zero(int r);

  Value operator()(std::span<const Value> y) const;
  // True for the builtin families and for oracles the caller vouched for.
  bool trusted_convex() const;
  bool is_builtin() const { return !std::holds_alternative<OracleFunction>(repr_); }
  const Repr& repr() const { return repr_; }
  // Throws InputError unless every affine term has r coefficients.
  void validate(int r) const;

  friend bool operator==(const ConvexFunction& a, const ConvexFunction& b) { return a.repr_ == b.repr_; }

 private:
  Repr repr_;
};

// Criteria w_1..w_r in Z^n balanced by a convex f on Z^r.
struct MultiCriteriaObjective {
  std::vector<std::vector<Value>> weights;  // r rows of length n
  ConvexFunction f;

  int num_criteria() const { return static_cast<int>(weights.size()); }
  void validate(int n) const;
  // (w_1 . d, ..., w_r . d)
  std::vector<Value> criteria_point(std::span<const int> degrees) const;
  Value evaluate(std::span<const int> degrees) const { return f(criteria_point(degrees)); }

  friend bool operator==(const MultiCriteriaObjective&, const MultiCriteriaObjective&) = default;
};

// Table of a univariate function over the integer interval [low, low + size).
struct OffsetTable {
  Value low = 0;
  std::vector<Value> values;

  Value high() const { return low + static_cast<Value>(values.size()) - 1; }
  Value at(Value z) const;
  friend bool operator==(const OffsetTable&, const OffsetTable&) = default;
};

// Host graph with edge weights; vertex i is scored on its weighted degree
// sum { w(e) : e in F, i in e }. Each table covers exactly the achievable
// range [sum of negative incident weights, sum of positive incident weights].
struct WeightedInstance {
  Graph graph;
  std::vector<Value> weights;
  std::vector<OffsetTable> functions;

  // Achievable weighted-degree interval of vertex v.
  std::pair<Value, Value> domain(Vertex v) const;
  void validate() const;
  std::vector<Value> weighted_degrees(const EdgeSubset& subset) const;
};

}  // namespace degopt
