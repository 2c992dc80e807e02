#include "degopt/objective.hpp"

#include <algorithm>
#include <string>

#include "degopt/error.hpp"

namespace degopt {

Value AffineTerm::operator()(std::span<const Value> y) const {
  if (y.size() != alpha.size()) throw PreconditionError("affine term has wrong arity");
  Value acc = beta;
  for (std::size_t k = 0; k < y.size(); ++k) acc = checked::add(acc, checked::mul(alpha[k], y[k]));
  return acc;
}

ConvexFunction ConvexFunction::identity() { return MaxAffine{{AffineTerm{{1}, 0}}}; }

ConvexFunction ConvexFunction::zero(int r) {
  return MaxAffine{{AffineTerm{std::vector<Value>(static_cast<std::size_t>(r), 0), 0}}};
}

Value ConvexFunction::operator()(std::span<const Value> y) const {
  struct Visitor {
    std::span<const Value> y;
    Value operator()(const MaxAffine& f) const {
      if (f.terms.empty()) throw PreconditionError("max-affine function has no terms");
      Value best = f.terms.front()(y);
      for (const auto& t : f.terms) best = std::max(best, t(y));
      return best;
    }
    Value operator()(const SumSquaredAffine& f) const {
      Value acc = 0;
      for (const auto& t : f.terms) {
        const Value a = t(y);
        acc = checked::add(acc, checked::mul(a, a));
      }
      return acc;
    }
    Value operator()(const OracleFunction& f) const {
      if (!f.evaluate) throw PreconditionError("oracle function is empty");
      return f.evaluate(y);
    }
  };
  return std::visit(Visitor{y}, repr_);
}

bool ConvexFunction::trusted_convex() const {
  if (const auto* o = std::get_if<OracleFunction>(&repr_)) return o->convex;
  return true;
}

void ConvexFunction::validate(int r) const {
  auto check_terms = [r](const std::vector<AffineTerm>& terms, const char* kind) {
    for (std::size_t t = 0; t < terms.size(); ++t)
      if (terms[t].alpha.size() != static_cast<std::size_t>(r))
        throw InputError(std::string(kind) + " term " + std::to_string(t + 1) + " has " +
                         std::to_string(terms[t].alpha.size()) + " coefficients; expected r=" + std::to_string(r));
  };
  if (const auto* f = std::get_if<MaxAffine>(&repr_)) {
    if (f->terms.empty()) throw InputError("max_affine needs at least one term");
    check_terms(f->terms, "max_affine");
  } else if (const auto* g = std::get_if<SumSquaredAffine>(&repr_)) {
    check_terms(g->terms, "sum_sq_affine");
  }
}

void MultiCriteriaObjective::validate(int n) const {
  if (weights.empty()) throw InputError("multi-criteria objective needs at least one criterion (r >= 1)");
  for (std::size_t k = 0; k < weights.size(); ++k)
    if (weights[k].size() != static_cast<std::size_t>(n))
      throw InputError("criterion " + std::to_string(k + 1) + " has " + std::to_string(weights[k].size()) +
                       " weights; expected n=" + std::to_string(n));
  f.validate(num_criteria());
}

std::vector<Value> MultiCriteriaObjective::criteria_point(std::span<const int> degrees) const {
  std::vector<Value> y(weights.size(), 0);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k].size() != degrees.size()) throw PreconditionError("criterion length does not match n");
    for (std::size_t i = 0; i < degrees.size(); ++i)
      y[k] = checked::add(y[k], checked::mul(weights[k][i], static_cast<Value>(degrees[i])));
  }
  return y;
}

Value OffsetTable::at(Value z) const {
  if (z < low || z > high())
    throw PreconditionError("argument " + std::to_string(z) + " outside table domain [" + std::to_string(low) + ", " +
                            std::to_string(high()) + "]");
  return values[static_cast<std::size_t>(z - low)];
}

std::pair<Value, Value> WeightedInstance::domain(Vertex v) const {
  Value lo = 0, hi = 0;
  for (std::size_t e : graph.incident(v)) {
    const Value w = weights.at(e);
    if (w < 0)
      lo = checked::add(lo, w);
    else
      hi = checked::add(hi, w);
  }
  return {lo, hi};
}

void WeightedInstance::validate() const {
  if (weights.size() != graph.num_edges())
    throw InputError("weight list has " + std::to_string(weights.size()) + " entries but the graph has " +
                     std::to_string(graph.num_edges()) + " edges");
  if (functions.size() != static_cast<std::size_t>(graph.num_vertices()))
    throw InputError("expected one weighted-degree function per vertex");
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    const auto [lo, hi] = domain(v);
    const auto& t = functions[static_cast<std::size_t>(v)];
    if (t.low != lo || t.high() != hi)
      throw InputError("function of vertex " + std::to_string(v + 1) + " must cover exactly [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
  }
}

std::vector<Value> WeightedInstance::weighted_degrees(const EdgeSubset& subset) const {
  if (subset.size() != graph.num_edges()) throw PreconditionError("edge subset size does not match the graph");
  std::vector<Value> z(static_cast<std::size_t>(graph.num_vertices()), 0);
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    if (!subset.contains(e)) continue;
    const Edge& ed = graph.edge(e);
    z[static_cast<std::size_t>(ed.u)] = checked::add(z[static_cast<std::size_t>(ed.u)], weights[e]);
    z[static_cast<std::size_t>(ed.v)] = checked::add(z[static_cast<std::size_t>(ed.v)], weights[e]);
  }
  return z;
}

}  // namespace degopt
