#include "degopt/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "degopt/error.hpp"

namespace degopt {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

Value get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(where, "integer too large");
  return j.get<Value>();
}

int get_small(const json& j, const std::string& where) {
  const Value v = get_int(j, where);
  if (v < INT32_MIN || v > INT32_MAX) fail(where, "integer out of range");
  return static_cast<int>(v);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Value> get_int_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<Value> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(get_int(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

// Evaluates a named builtin over [lo, hi].
std::vector<Value> expand_builtin(const json& spec, Value lo, Value hi, const std::string& where) {
  const json& kind_j = require(spec, "kind", where);
  if (!kind_j.is_string()) fail(where + ".kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  std::vector<Value> out;
  if (kind == "square") {
    for (Value z = lo; z <= hi; ++z) out.push_back(checked::mul(z, z));
  } else if (kind == "neg_square_shift") {
    const Value c = get_int(require(spec, "c", where), where + ".c");
    for (Value z = lo; z <= hi; ++z) {
      const Value t = checked::sub(z, c);
      out.push_back(checked::neg(checked::mul(t, t)));
    }
  } else if (kind == "interval") {
    const Value l = get_int(require(spec, "l", where), where + ".l");
    const Value u = get_int(require(spec, "u", where), where + ".u");
    if (l < 0 || l > u) fail(where, "interval needs 0 <= l <= u");
    for (Value z = lo; z <= hi; ++z) out.push_back(z <= l ? z - l : (z <= u ? 0 : u - z));
  } else if (kind == "indicator") {
    const auto b = get_int_array(require(spec, "B", where), where + ".B");
    const std::set<Value> members(b.begin(), b.end());
    for (Value z = lo; z <= hi; ++z) out.push_back(members.count(z) ? 0 : -1);
  } else {
    fail(where + ".kind", "unknown vertex function kind '" + kind + "'");
  }
  return out;
}

std::vector<Value> parse_vertex_function(const json& j, Value lo, Value hi, const std::string& where) {
  if (j.is_object()) return expand_builtin(j, lo, hi, where);
  auto table = get_int_array(j, where);
  const auto want = static_cast<std::size_t>(hi - lo + 1);
  if (table.size() != want)
    fail(where, "table has " + std::to_string(table.size()) + " entries but the domain [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "] has " + std::to_string(want));
  return table;
}

std::vector<AffineTerm> parse_terms(const json& j, int r, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [alpha, beta] pairs");
  std::vector<AffineTerm> terms;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string w = where + "[" + std::to_string(t) + "]";
    if (!j[t].is_array() || j[t].size() != 2) fail(w, "expected [alpha, beta]");
    AffineTerm term;
    if (j[t][0].is_array())
      term.alpha = get_int_array(j[t][0], w + "[0]");
    else
      term.alpha = {get_int(j[t][0], w + "[0]")};
    if (term.alpha.size() != static_cast<std::size_t>(r))
      fail(w, "alpha has " + std::to_string(term.alpha.size()) + " coefficients; expected r=" + std::to_string(r));
    term.beta = get_int(j[t][1], w + "[1]");
    terms.push_back(std::move(term));
  }
  return terms;
}

MultiCriteriaObjective parse_criteria(const json& j, int n) {
  if (!j.is_object()) fail("criteria", "expected an object");
  const json& wj = require(j, "w", "criteria");
  if (!wj.is_array() || wj.empty()) fail("criteria.w", "expected a nonempty r x n matrix");
  MultiCriteriaObjective obj;
  for (std::size_t k = 0; k < wj.size(); ++k) {
    auto row = get_int_array(wj[k], "criteria.w[" + std::to_string(k) + "]");
    if (row.size() != static_cast<std::size_t>(n))
      fail("criteria.w[" + std::to_string(k) + "]", "expected " + std::to_string(n) + " weights");
    obj.weights.push_back(std::move(row));
  }
  const int r = obj.num_criteria();
  const json& fj = require(j, "f", "criteria");
  const json& kind = require(fj, "kind", "criteria.f");
  if (!kind.is_string()) fail("criteria.f.kind", "expected a string");
  const auto terms = parse_terms(require(fj, "terms", "criteria.f"), r, "criteria.f.terms");
  if (kind == "max_affine") {
    if (terms.empty()) fail("criteria.f.terms", "max_affine needs at least one term");
    obj.f = MaxAffine{terms};
  } else if (kind == "sum_sq_affine") {
    obj.f = SumSquaredAffine{terms};
  } else {
    fail("criteria.f.kind", "unknown convex family '" + kind.get<std::string>() + "'");
  }
  return obj;
}

json terms_json(const std::vector<AffineTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(json::array({json(t.alpha), t.beta}));
  return out;
}

std::vector<int> forest_from_json(const json& j, int n, const std::string& where) {
  const json& arr = j.is_object() ? require(j, "parent", where) : j;
  if (!arr.is_array()) fail(where, "expected a parent array");
  if (arr.size() != static_cast<std::size_t>(n))
    fail(where, "parent array has " + std::to_string(arr.size()) + " entries; expected n=" + std::to_string(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int p = get_small(arr[static_cast<std::size_t>(v)], where + "[" + std::to_string(v) + "]");
    if (p < 0 || p > n) fail(where + "[" + std::to_string(v) + "]", "parent must be 0 (root) or in 1..n");
    if (p == v + 1) fail(where + "[" + std::to_string(v) + "]", "vertex is its own parent");
    parent[static_cast<std::size_t>(v)] = p - 1;
  }
  return parent;
}

}  // namespace

WeightedInstance Instance::weighted() const {
  WeightedInstance w;
  w.graph = graph;
  if (weights) {
    w.weights = *weights;
    if (!weighted_functions) throw InputError("weighted instance has no vertex_functions");
    w.functions = *weighted_functions;
  } else {
    w.weights.assign(graph.num_edges(), 1);
    if (!vertex_functions) throw InputError("instance has no vertex_functions");
    for (const auto& t : vertex_functions->tables()) w.functions.push_back(OffsetTable{0, t});
  }
  return w;
}

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected a JSON object");
  Instance inst;

  const int n = get_small(require(doc, "n", "document"), "n");
  if (n < 0) fail("n", "must be nonnegative");
  const json& ej = require(doc, "edges", "document");
  if (!ej.is_array()) fail("edges", "expected an array of [i, j] pairs");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < ej.size(); ++k) {
    const std::string w = "edges[" + std::to_string(k) + "]";
    if (!ej[k].is_array() || ej[k].size() != 2) fail(w, "expected [i, j]");
    edges.push_back({get_small(ej[k][0], w + "[0]") - 1, get_small(ej[k][1], w + "[1]") - 1});
  }
  Graph::Normalized norm;
  try {
    norm = Graph::normalize(n, std::move(edges));
  } catch (const InputError& e) {
    fail("edges", e.what());
  }
  inst.graph = std::move(norm.graph);
  const auto& order = norm.order;
  const std::size_t m_edges = inst.graph.num_edges();

  // Per-edge arrays are given in file order; permute them with the edges.
  auto permute = [&](const auto& per_edge) {
    std::remove_cvref_t<decltype(per_edge)> out(per_edge.size());
    for (std::size_t k = 0; k < m_edges; ++k) out[k] = per_edge[order[k]];
    return out;
  };

  const bool has_colors = doc.contains("colors");
  if (has_colors != doc.contains("m")) fail("document", "'colors' and 'm' must be given together");
  if (has_colors) {
    const auto raw = get_int_array(doc["colors"], "colors");
    if (raw.size() != m_edges) fail("colors", "expected one colour per edge");
    EdgeColoring col;
    for (Value c : raw) col.color.push_back(static_cast<int>(std::clamp<Value>(c, INT32_MIN + 1, INT32_MAX)) - 1);
    col.color = permute(col.color);
    for (Value c : get_int_array(doc["m"], "m")) col.counts.push_back(static_cast<int>(std::clamp<Value>(c, -1, INT32_MAX)));
    try {
      col.validate(inst.graph);
    } catch (const InputError& e) {
      fail("colors/m", e.what());
    }
    inst.coloring = std::move(col);
  }

  if (doc.contains("weights")) {
    auto w = get_int_array(doc["weights"], "weights");
    if (w.size() != m_edges) fail("weights", "expected one weight per edge");
    inst.weights = permute(w);
  }

  if (doc.contains("vertex_functions")) {
    const json& vf = doc["vertex_functions"];
    if (!vf.is_array() || vf.size() != static_cast<std::size_t>(n))
      fail("vertex_functions", "expected an array with one entry per vertex");
    if (inst.weights) {
      WeightedInstance probe{inst.graph, *inst.weights, {}};
      std::vector<OffsetTable> tables;
      for (int v = 0; v < n; ++v) {
        const auto [lo, hi] = probe.domain(v);
        tables.push_back({lo, parse_vertex_function(vf[static_cast<std::size_t>(v)], lo, hi,
                                                    "vertex_functions[" + std::to_string(v) + "]")});
      }
      inst.weighted_functions = std::move(tables);
    } else {
      std::vector<std::vector<Value>> tables;
      for (int v = 0; v < n; ++v)
        tables.push_back(parse_vertex_function(vf[static_cast<std::size_t>(v)], 0, inst.graph.degree(v),
                                               "vertex_functions[" + std::to_string(v) + "]"));
      inst.vertex_functions = SeparableObjective(inst.graph, std::move(tables));
    }
  }

  if (doc.contains("criteria")) inst.criteria = parse_criteria(doc["criteria"], n);
  if (doc.contains("forest")) inst.forest = forest_from_json(doc["forest"], n, "forest");
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) fail("meta", "expected an object");
    inst.meta = doc["meta"];
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::vector<std::pair<std::string, json>> fields;
  fields.emplace_back("n", inst.graph.num_vertices());
  json edges = json::array();
  for (const Edge& e : inst.graph.edges()) edges.push_back(json::array({e.u + 1, e.v + 1}));
  fields.emplace_back("edges", std::move(edges));
  if (inst.coloring) {
    json colors = json::array();
    for (int c : inst.coloring->color) colors.push_back(c + 1);
    fields.emplace_back("colors", std::move(colors));
    fields.emplace_back("m", json(inst.coloring->counts));
  }
  if (inst.vertex_functions) fields.emplace_back("vertex_functions", json(inst.vertex_functions->tables()));
  if (inst.weights) {
    fields.emplace_back("weights", json(*inst.weights));
    if (inst.weighted_functions) {
      json tables = json::array();
      for (const auto& t : *inst.weighted_functions) tables.push_back(json(t.values));
      fields.emplace_back("vertex_functions", std::move(tables));
    }
  }
  if (inst.criteria) {
    json f;
    if (const auto* ma = std::get_if<MaxAffine>(&inst.criteria->f.repr())) {
      f["kind"] = "max_affine";
      f["terms"] = terms_json(ma->terms);
    } else if (const auto* sq = std::get_if<SumSquaredAffine>(&inst.criteria->f.repr())) {
      f["kind"] = "sum_sq_affine";
      f["terms"] = terms_json(sq->terms);
    } else {
      throw InputError("oracle-presented functions cannot be serialized");
    }
    json c;
    c["w"] = inst.criteria->weights;
    c["f"] = std::move(f);
    fields.emplace_back("criteria", std::move(c));
  }
  if (inst.forest) {
    json parent = json::array();
    for (int p : *inst.forest) parent.push_back(p + 1);
    fields.emplace_back("forest", std::move(parent));
  }
  if (!inst.meta.is_null()) fields.emplace_back("meta", inst.meta);

  std::string out = "{\n";
  for (std::size_t k = 0; k < fields.size(); ++k) {
    out += "  " + json(fields[k].first).dump() + ": " + fields[k].second.dump();
    out += k + 1 < fields.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write instance file '" + path + "'");
  out << serialize_instance(instance);
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_instance(instance)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> parse_forest(std::string_view text, int n) { return forest_from_json(parse_json(text), n, "forest"); }

std::string serialize_forest(const std::vector<int>& parent) {
  json arr = json::array();
  for (int p : parent) arr.push_back(p + 1);
  json doc;
  doc["parent"] = std::move(arr);
  return doc.dump() + "\n";
}

}  // namespace degopt
