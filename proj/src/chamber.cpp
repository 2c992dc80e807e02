#include "degopt/chamber.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "degopt/error.hpp"

namespace degopt {

namespace {

using Wide = __int128;
using WideVec = std::vector<Wide>;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Wide wide_abs(Wide a) { return checked::abs(a); }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Wide dot(const WideVec& a, const WideVec& b) {
  Wide acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc = checked::add(acc, checked::mul(a[k], b[k]));
  return acc;
}

bool is_zero(const WideVec& v) {
  return std::all_of(v.begin(), v.end(), [](Wide x) { return x == 0; });
}

// Divides out the gcd of the entries; direction is kept.
WideVec reduce(WideVec v) {
  Wide g = 0;
  for (Wide x : v) g = wide_gcd(g, x);
  if (g > 1)
    for (Wide& x : v) x /= g;
  return v;
}

// reduce() plus sign normalization (first nonzero entry positive).
WideVec primitive(WideVec v) {
  v = reduce(std::move(v));
  const auto first = std::find_if(v.begin(), v.end(), [](Wide x) { return x != 0; });
  if (first != v.end() && *first < 0)
    for (Wide& x : v) x = -x;
  return v;
}

// Drops zeros, reduces to primitive sign-normalized form, deduplicates.
std::vector<WideVec> normalize_generators(std::vector<WideVec> gens) {
  std::vector<WideVec> out;
  out.reserve(gens.size());
  for (auto& g : gens)
    if (!is_zero(g)) out.push_back(primitive(std::move(g)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string sign_key(const WideVec& c, const std::vector<WideVec>& gens) {
  std::string key(gens.size(), '0');
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Wide s = dot(c, gens[j]);
    key[j] = s > 0 ? '+' : (s < 0 ? '-' : '0');
  }
  return key;
}

// Witnesses of the cells of the arrangement of `gens` in Z^dim (generators
// already normalized).
std::vector<WideVec> cells(const std::vector<WideVec>& gens, std::size_t dim) {
  if (gens.empty()) return {WideVec(dim, 0)};
  if (gens.size() == 1) {
    WideVec neg = gens[0];
    for (Wide& x : neg) x = -x;
    return {gens[0], neg};
  }

  std::unordered_set<std::string> seen;
  std::vector<WideVec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const WideVec& gi = gens[i];
    const std::size_t pivot =
        static_cast<std::size_t>(std::find_if(gi.begin(), gi.end(), [](Wide x) { return x != 0; }) - gi.begin());

    // Integer basis of gi^perp: b_k = gi[pivot] e_k - gi[k] e_pivot, k != pivot.
    // Coordinates of g_j against that basis: gi[pivot] g_j[k] - gi[k] g_j[pivot].
    std::vector<WideVec> restricted;
    restricted.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == i) continue;
      WideVec t;
      t.reserve(dim - 1);
      for (std::size_t k = 0; k < dim; ++k) {
        if (k == pivot) continue;
        t.push_back(checked::sub(checked::mul(gi[pivot], gens[j][k]), checked::mul(gi[k], gens[j][pivot])));
      }
      restricted.push_back(std::move(t));
    }
    const auto sub_witnesses = cells(normalize_generators(std::move(restricted)), dim - 1);

    Wide max_cross = 0;
    for (const auto& gj : gens) max_cross = std::max(max_cross, wide_abs(dot(gi, gj)));

    for (const WideVec& lambda : sub_witnesses) {
      // Lift back to Z^dim; the result is orthogonal to gi.
      WideVec base(dim, 0);
      std::size_t idx = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        if (k == pivot) continue;
        base[k] = checked::mul(lambda[idx], gi[pivot]);
        base[pivot] = checked::sub(base[pivot], checked::mul(lambda[idx], gi[k]));
        ++idx;
      }
      Wide min_other = 0;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j == i) continue;
        const Wide v = wide_abs(dot(base, gens[j]));
        if (v != 0 && (min_other == 0 || v < min_other)) min_other = v;
      }
      // c = base +- eps gi, eps = min_other / (2 max_cross), scaled by the denominator.
      const Wide scale = checked::mul(Wide{2}, max_cross);
      for (int sign : {+1, -1}) {
        WideVec c(dim);
        for (std::size_t k = 0; k < dim; ++k)
          c[k] = checked::add(checked::mul(scale, base[k]), checked::mul(Wide{sign} * min_other, gi[k]));
        c = reduce(std::move(c));
        std::string key = sign_key(c, gens);
        if (key.find('0') != std::string::npos)
          throw Error("internal error: chamber witness lies on a hyperplane");
        if (seen.insert(std::move(key)).second) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> to_rational_rows(std::span<const std::vector<Value>> vectors) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (Value x : v) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Indices of a maximal linearly independent subset, greedy in input order.
std::vector<std::size_t> independent_subset(std::span<const std::vector<Value>> vectors, int dim) {
  std::vector<std::vector<Rational>> basis;  // reduced rows in echelon form
  std::vector<std::size_t> pivots, chosen;
  auto rows = to_rational_rows(vectors);
  for (std::size_t r = 0; r < rows.size() && static_cast<int>(basis.size()) < dim; ++r) {
    auto row = rows[r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = row[pivots[b]];
      if (f == 0) continue;
      for (int k = 0; k < dim; ++k) row[static_cast<std::size_t>(k)] -= f * basis[b][static_cast<std::size_t>(k)];
    }
    const auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    if (it == row.end()) continue;
    const auto p = static_cast<std::size_t>(it - row.begin());
    const Rational lead = row[p];
    for (auto& x : row) x /= lead;
    // keep earlier basis rows reduced in the new pivot column
    for (auto& brow : basis) {
      const Rational f = brow[p];
      if (f == 0) continue;
      for (int k = 0; k < dim; ++k) brow[static_cast<std::size_t>(k)] -= f * row[static_cast<std::size_t>(k)];
    }
    basis.push_back(std::move(row));
    pivots.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

BigInt to_big(Wide v) {
  const bool negative = v < 0;
  const auto mag = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<unsigned long long>(mag >> 64);
  out <<= 64;
  out += static_cast<unsigned long long>(mag);
  return negative ? BigInt(-out) : out;
}

// Orthogonal projection of c onto span(basis), rescaled to a primitive
// integer vector.
WideVec project_onto_span(const WideVec& c, const std::vector<std::vector<Value>>& basis) {
  const std::size_t s = basis.size();
  const std::size_t dim = c.size();
  // Solve (B^T B) x = B^T c.
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s + 1));
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t q = 0; q < s; ++q) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < dim; ++k) acc += BigInt(basis[p][k]) * BigInt(basis[q][k]);
      a[p][q] = Rational(acc);
    }
    BigInt rhs = 0;
    for (std::size_t k = 0; k < dim; ++k) {
      rhs += BigInt(basis[p][k]) * to_big(c[k]);
    }
    a[p][s] = Rational(rhs);
  }
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;  // Gram matrix of independent vectors is nonsingular
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < s; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= s; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> x(s);
  for (std::size_t p = 0; p < s; ++p) x[p] = a[p][s] / a[p][p];

  BigInt denom = 1;
  for (const auto& xi : x) denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(xi));
  std::vector<BigInt> out(dim, 0);
  for (std::size_t p = 0; p < s; ++p) {
    const BigInt coef = boost::multiprecision::numerator(x[p]) * (denom / boost::multiprecision::denominator(x[p]));
    for (std::size_t k = 0; k < dim; ++k) out[k] += coef * BigInt(basis[p][k]);
  }
  BigInt g = 0;
  for (const auto& v : out) g = boost::multiprecision::gcd(g, v);
  WideVec result(dim, 0);
  const BigInt limit = BigInt(std::numeric_limits<long long>::max());
  for (std::size_t k = 0; k < dim; ++k) {
    const BigInt v = g == 0 ? out[k] : BigInt(out[k] / g);
    if (boost::multiprecision::abs(v) > limit) throw OverflowError("chamber witness exceeds the 64-bit range");
    result[k] = static_cast<long long>(v);
  }
  return result;
}

}  // namespace

ProjectedGenerators project_directions(const DirectionSet& directions, std::span<const std::vector<Value>> weights) {
  ProjectedGenerators out;
  out.ambient_dim = static_cast<int>(weights.size());
  for (const auto& d : directions.vectors) {
    std::vector<Value> y(weights.size(), 0);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k].size() != d.size()) throw PreconditionError("weight vector length does not match direction length");
      for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) y[k] = checked::add(y[k], checked::mul(weights[k][i], d[i]));
    }
    if (std::all_of(y.begin(), y.end(), [](Value v) { return v == 0; })) continue;
    out.generators.push_back(primitive_form(std::move(y)));
  }
  std::sort(out.generators.begin(), out.generators.end());
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
  out.span_dim = exact_rank(out.generators, out.ambient_dim);
  return out;
}

int exact_rank(std::span<const std::vector<Value>> vectors, int dim) {
  return static_cast<int>(independent_subset(vectors, dim).size());
}

std::vector<ChamberWitness> enumerate_chamber_witnesses(const ProjectedGenerators& generators) {
  const auto dim = static_cast<std::size_t>(generators.ambient_dim);
  std::vector<WideVec> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators.generators) gens.emplace_back(g.begin(), g.end());
  gens = normalize_generators(std::move(gens));

  std::vector<WideVec> raw = cells(gens, dim);
  if (generators.span_dim > 0 && generators.span_dim < generators.ambient_dim) {
    std::vector<std::vector<Value>> basis;
    for (std::size_t idx : independent_subset(generators.generators, generators.ambient_dim))
      basis.push_back(generators.generators[idx]);
    for (auto& c : raw) c = project_onto_span(c, basis);
  }

  std::vector<ChamberWitness> out;
  out.reserve(raw.size());
  for (const auto& c : raw) {
    ChamberWitness w;
    for (Wide x : c) w.functional.push_back(checked::narrow<Value>(x));
    for (const auto& g : gens) {
      const Wide s = dot(c, g);
      if (s == 0) throw Error("internal error: chamber witness lies on a hyperplane");
      w.signs.push_back(s > 0 ? 1 : -1);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::uint64_t chamber_count_bound(std::size_t num_generators, int span_dim) {
  if (span_dim <= 0 || num_generators == 0) return 1;
  // C(g-1, k) by the multiplicative formula, saturating.
  const std::uint64_t g1 = num_generators - 1;
  std::uint64_t total = 0, binom = 1;
  for (int k = 0; k < span_dim; ++k) {
    if (k > 0) {
      if (static_cast<std::uint64_t>(k) > g1) break;
      unsigned __int128 next = static_cast<unsigned __int128>(binom) * (g1 - static_cast<std::uint64_t>(k) + 1) /
                               static_cast<std::uint64_t>(k);
      binom = next > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(next);
    }
    total = total > UINT64_MAX - binom ? UINT64_MAX : total + binom;
  }
  return total > UINT64_MAX / 2 ? UINT64_MAX : 2 * total;
}

}  // namespace degopt
