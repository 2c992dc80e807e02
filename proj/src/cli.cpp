#include "degopt/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "degopt/commands.hpp"
#include "degopt/error.hpp"
#include "degopt/gadgets.hpp"
#include "degopt/generators.hpp"
#include "degopt/instance.hpp"
#include "degopt/verify.hpp"

namespace degopt {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw InputError(what + ": '" + s + "' is not an integer");
  return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int(p, what));
  return out;
}

std::vector<int> to_int(const std::vector<std::int64_t>& v, const std::string& what) {
  std::vector<int> out;
  for (auto x : v) {
    if (x < INT32_MIN || x > INT32_MAX) throw InputError(what + ": value out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

// Per-vertex list: one entry broadcast to all vertices, or exactly n.
std::vector<int> per_vertex(const std::string& text, int n, const std::string& what) {
  auto v = to_int(parse_int_list(text, what), what);
  if (v.size() == 1) return std::vector<int>(static_cast<std::size_t>(n), v[0]);
  if (v.size() != static_cast<std::size_t>(n))
    throw InputError(what + ": expected 1 or " + std::to_string(n) + " values, got " + std::to_string(v.size()));
  return v;
}

struct GraphChoice {
  std::string file, edge_list, bipartite;
  int n = -1, complete = -1, path = -1, cycle = -1, star = -1, matching = -1;

  void add_to(CLI::App* app) {
    auto* g = app->add_option_group("graph", "host graph");
    g->add_option("--graph", file, "take the graph of an instance file");
    g->add_option("--complete", complete, "K_N");
    g->add_option("--path", path, "path on N vertices");
    g->add_option("--cycle", cycle, "cycle on N vertices");
    g->add_option("--star", star, "star with K leaves (centre is vertex 1)");
    g->add_option("--bipartite", bipartite, "K_{A,B} as A,B");
    g->add_option("--matching", matching, "perfect matching {i, K+i} on 2K vertices");
    g->add_option("--edge-list", edge_list, "edges as 1-2,2-3,... (with --n)");
    app->add_option("--n", n, "vertex count");
  }

  Graph build() const {
    int chosen = 0;
    Graph g;
    if (!file.empty()) ++chosen, g = load_instance(file).graph;
    if (complete >= 0) ++chosen, g = graphs::complete(complete);
    if (path >= 0) ++chosen, g = graphs::path(path);
    if (cycle >= 0) {
      if (cycle < 3) throw InputError("--cycle needs at least 3 vertices");
      ++chosen, g = graphs::cycle(cycle);
    }
    if (star >= 0) ++chosen, g = graphs::star(star);
    if (matching >= 0) ++chosen, g = graphs::perfect_matching(matching);
    if (!bipartite.empty()) {
      const auto ab = to_int(parse_int_list(bipartite, "--bipartite"), "--bipartite");
      if (ab.size() != 2 || ab[0] < 0 || ab[1] < 0) throw InputError("--bipartite expects A,B");
      ++chosen, g = graphs::complete_bipartite(ab[0], ab[1]);
    }
    if (!edge_list.empty()) {
      if (n < 0) throw InputError("--edge-list needs --n");
      std::vector<Edge> edges;
      for (const auto& item : split(edge_list, ',')) {
        const auto uv = split(item, '-');
        if (uv.size() != 2) throw InputError("--edge-list: '" + item + "' is not of the form u-v");
        edges.push_back({static_cast<int>(parse_int(uv[0], "--edge-list")) - 1,
                         static_cast<int>(parse_int(uv[1], "--edge-list")) - 1});
      }
      ++chosen, g = Graph::from_edges(n, std::move(edges));
    }
    if (chosen != 1) throw InputError("choose exactly one host graph (--graph, --complete, --path, ...)");
    return g;
  }
};

struct GenArgs {
  std::string kind, out;
  std::uint64_t seed = 1;
  GraphChoice graph;
  // exact-matching
  int r = -1, colors = -1;
  std::string counts;
  bool random_colors = false;
  // factor / lu-factor / bipartite-cc / subdivision / partition
  std::string admissible, lower, upper, side_i, sizes;
  int m = -1;
  // random generators
  int edges = -1, d = -1, criteria = 0;
  double edge_prob = 0.5, root_prob = 0.1;
  std::string tables = "-9,9";
};

Instance gen_exact_matching(const GenArgs& a) {
  if (a.r < 1) throw InputError("exact-matching needs --r >= 1");
  const int p = a.colors < 0 ? 2 : a.colors;
  if (p < 1) throw InputError("--colors must be positive");
  Rng rng(a.seed);
  const Graph h = graphs::complete_bipartite(a.r, a.r);
  std::vector<int> color;
  for (const Edge& e : h.edges())
    color.push_back(a.random_colors ? static_cast<int>(rng.uniform(0, p - 1)) : ((e.v - a.r - e.u + a.r) % a.r) % p);
  std::vector<int> m;
  if (!a.counts.empty()) {
    m = to_int(parse_int_list(a.counts, "--m"), "--m");
  } else {
    // counts of a random perfect matching, so the instance answers YES
    std::vector<int> perm(static_cast<std::size_t>(a.r));
    for (int i = 0; i < a.r; ++i) perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
    m.assign(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < a.r; ++i) {
      const auto e = h.find_edge(i, a.r + perm[static_cast<std::size_t>(i)]);
      ++m[static_cast<std::size_t>(color[*e])];
    }
  }
  if (m.size() != static_cast<std::size_t>(p))
    throw InputError("--m must give " + std::to_string(p) + " counts");
  return exact_matching_instance(a.r, color, m);
}

std::vector<bool> default_sides(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbours(v)) {
        if (side[static_cast<std::size_t>(w)] == -1) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          throw InputError("not bipartite: odd cycle through vertex " + std::to_string(w + 1));
        }
      }
    }
  }
  std::vector<bool> out;
  for (int s : side) out.push_back(s == 1);
  return out;
}

Instance generate(const GenArgs& a) {
  const std::string& k = a.kind;
  if (k == "exact-matching") return gen_exact_matching(a);
  if (k == "factor") {
    const Graph g = a.graph.build();
    if (a.admissible.empty()) throw InputError("factor needs --admissible (e.g. 1 or 0,2;1;1)");
    std::vector<std::vector<int>> sets;
    for (const auto& part : split(a.admissible, ';')) sets.push_back(to_int(parse_int_list(part, "--admissible"), "--admissible"));
    if (sets.size() == 1) sets.assign(static_cast<std::size_t>(g.num_vertices()), sets[0]);
    return general_factor_instance(g, sets);
  }
  if (k == "lu-factor") {
    const Graph g = a.graph.build();
    const auto lower = a.lower.empty() ? std::vector<int>(static_cast<std::size_t>(g.num_vertices()), 0)
                                       : per_vertex(a.lower, g.num_vertices(), "--lower");
    const auto upper = a.upper.empty() ? std::vector<int>(g.degrees().begin(), g.degrees().end())
                                       : per_vertex(a.upper, g.num_vertices(), "--upper");
    Instance inst;
    inst.graph = g;
    inst.vertex_functions = lu_factor_objective(g, lower, upper);
    inst.meta = Json::object();
    inst.meta["gadget"] = "lu-factor";
    return inst;
  }
  if (k == "cubic") return cubic_subgraph_instance(a.graph.build());
  if (k == "bipartite-cc") {
    const Graph g = a.graph.build();
    std::vector<bool> side;
    if (a.side_i.empty()) {
      side = default_sides(g);
    } else {
      side.assign(static_cast<std::size_t>(g.num_vertices()), false);
      for (int v : to_int(parse_int_list(a.side_i, "--side-I"), "--side-I")) {
        if (v < 1 || v > g.num_vertices()) throw InputError("--side-I: vertex " + std::to_string(v) + " out of range");
        side[static_cast<std::size_t>(v - 1)] = true;
      }
    }
    return bipartite_concave_convex_instance(g, side);
  }
  if (k == "subdivision") {
    if (a.m < 0) throw InputError("subdivision needs --m");
    return subdivision_hardness_instance(a.graph.build(), a.m);
  }
  if (k == "partition") {
    if (a.sizes.empty()) throw InputError("partition needs --sizes a1,a2,...");
    return partition_gadget(parse_int_list(a.sizes, "--sizes"));
  }

  const auto range = parse_int_list(a.tables, "--tables");
  if (range.size() != 2 || range[0] > range[1]) throw InputError("--tables expects LO,HI");
  const int p = a.colors < 0 ? 0 : a.colors;
  Rng rng(a.seed);
  Instance inst;
  inst.meta = Json::object();
  inst.meta["generator"] = k;
  inst.meta["seed"] = a.seed;
  if (k == "random") {
    if (a.graph.n < 1) throw InputError("random needs --n >= 1");
    const int n = a.graph.n;
    const std::size_t max_edges = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t ne = a.edges < 0 ? std::min(max_edges, static_cast<std::size_t>(2 * n)) : static_cast<std::size_t>(a.edges);
    if (ne > max_edges) throw InputError("--edges exceeds n(n-1)/2");
    inst.graph = random_graph(n, ne, rng);
  } else if (k == "random-bounded-td") {
    if (a.graph.n < 0 || a.d < 1) throw InputError("random-bounded-td needs --n and --d >= 1");
    if (a.edge_prob < 0 || a.edge_prob > 1 || a.root_prob < 0 || a.root_prob > 1)
      throw InputError("probabilities must lie in [0, 1]");
    auto sample = random_bounded_treedepth(a.graph.n, a.d, a.edge_prob, a.root_prob, rng);
    inst.graph = std::move(sample.graph);
    inst.forest = std::move(sample.parent);
    inst.meta["height_bound"] = a.d;
  } else {
    throw InputError("unknown generator kind '" + k + "'");
  }
  inst.vertex_functions = SeparableObjective(inst.graph, random_tables(inst.graph, range[0], range[1], rng));
  if (p > 0) inst.coloring = random_coloring(inst.graph, p, rng);
  if (a.criteria > 0) {
    inst.criteria = MultiCriteriaObjective{random_weights(a.criteria, inst.graph.num_vertices(), -3, 3, rng),
                                           random_convex_function(a.criteria, rng)};
  }
  return inst;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree sequence optimization: exact solvers, gadget generators and oracle checks", "degopt"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

  std::string instance_path, out_path, forest_path, suite;
  std::size_t m = 0;
  bool unprescribed = false, brute = false, exact_td = false, heuristic = false;
  int max_criteria = 4;
  std::uint64_t verify_seed = VerifyOptions{}.seed;

  auto* multi = app.add_subcommand("solve-multi", "maximize f(W d(F)) over m-edge or all subgraphs");
  multi->add_option("instance", instance_path, "instance file")->required();
  auto* m_opt = multi->add_option("--m", m, "edge count");
  auto* unp_opt = multi->add_flag("--unprescribed", unprescribed, "no edge-count constraint");
  m_opt->excludes(unp_opt);
  multi->add_flag("--brute", brute, "exhaustive search instead of chamber enumeration");
  multi->add_option("--max-criteria", max_criteria, "largest accepted r");
  multi->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

  auto* colored = app.add_subcommand("solve-colored", "colored separable problem over an elimination forest");
  colored->add_option("instance", instance_path, "instance file")->required();
  auto* f_opt = colored->add_option("--forest", forest_path, "forest file (parent array, 0 = root)");
  auto* e_opt = colored->add_flag("--exact-treedepth", exact_td, "use an optimal tree (n <= 15)");
  auto* h_opt = colored->add_flag("--heuristic", heuristic, "use the separator heuristic");
  auto* b_opt = colored->add_flag("--brute", brute, "exhaustive search instead of the DP");
  f_opt->excludes(e_opt)->excludes(h_opt)->excludes(b_opt);
  e_opt->excludes(h_opt)->excludes(b_opt);
  h_opt->excludes(b_opt);
  colored->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

  auto* emit = app.add_subcommand("emit-ip", "write the colored IP model");
  emit->add_option("instance", instance_path, "instance file")->required();
  emit->add_option("-o,--out", out_path, "output file (default stdout)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("kind", gen_args.kind,
                  "exact-matching, factor, lu-factor, cubic, bipartite-cc, subdivision, partition, random, "
                  "random-bounded-td")
      ->required();
  gen->add_option("-o,--out", gen_args.out, "output file (default stdout)");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen_args.graph.add_to(gen);
  gen->add_option("--r", gen_args.r, "K_{r,r} side size (exact-matching)");
  gen->add_option("--colors", gen_args.colors, "number of colours");
  gen->add_option("--m", gen_args.counts, "per-colour counts c1,c2,... (exact-matching); edge count (subdivision)");
  gen->add_flag("--random-colors", gen_args.random_colors, "random colour classes (exact-matching)");
  gen->add_option("--admissible", gen_args.admissible, "degree sets, ';' between vertices (factor)");
  gen->add_option("--lower", gen_args.lower, "lower bounds, one value or one per vertex (lu-factor)");
  gen->add_option("--upper", gen_args.upper, "upper bounds, one value or one per vertex (lu-factor)");
  gen->add_option("--side-I", gen_args.side_i, "1-based vertices of the concave side (bipartite-cc)");
  gen->add_option("--edges", gen_args.edges, "edge count (random)");
  gen->add_option("--sizes", gen_args.sizes, "numbers a1,a2,... (partition)");
  gen->add_option("--d", gen_args.d, "height bound (random-bounded-td)");
  gen->add_option("--edge-prob", gen_args.edge_prob, "probability of each ancestor edge (random-bounded-td)");
  gen->add_option("--root-prob", gen_args.root_prob, "probability that a vertex starts a new tree");
  gen->add_option("--criteria", gen_args.criteria, "add r random criteria and a random convex f");
  gen->add_option("--tables", gen_args.tables, "range LO,HI of random table entries");

  auto* verify = app.add_subcommand("verify", "run an oracle-equivalence suite");
  verify->add_option("suite", suite, "small-multi, small-colored, ip-equivalence, treedepth, gadgets")->required();
  verify->add_option("--seed", verify_seed, "corpus seed");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

  auto* td = app.add_subcommand("treedepth", "tree-depth and an optimal tree for small graphs");
  td->add_option("instance", instance_path, "instance file")->required();
  td->add_flag("--heuristic", heuristic, "heuristic forest instead of the exact search");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Json echo = Json::array();
  for (std::size_t k = 1; k < args.size(); ++k) echo.push_back(args[k]);

  try {
    if (multi->parsed()) {
      SolveMultiOptions o;
      if (m_opt->count() > 0) o.m = m;
      o.unprescribed = unprescribed;
      o.brute = brute;
      o.threads = threads;
      o.max_criteria = max_criteria;
      Json r{{"command", echo}};
      r.update(solve_multi_report(load_instance(instance_path), o));
      out << dump(r);
    } else if (colored->parsed()) {
      const Instance inst = load_instance(instance_path);
      SolveColoredOptions o;
      o.brute = brute;
      o.threads = threads;
      if (!forest_path.empty()) {
        o.source = ForestSource::given;
        o.forest = parse_forest(read_file(forest_path), inst.graph.num_vertices());
      } else if (exact_td) {
        o.source = ForestSource::exact;
      } else if (heuristic) {
        o.source = ForestSource::heuristic;
      }
      Json r{{"command", echo}};
      r.update(solve_colored_report(inst, o));
      out << dump(r);
    } else if (emit->parsed()) {
      write_output(emit_ip_text(load_instance(instance_path)), out_path, out);
    } else if (gen->parsed()) {
      if (gen_args.kind == "subdivision" && !gen_args.counts.empty())
        gen_args.m = static_cast<int>(parse_int(gen_args.counts, "--m"));
      write_output(serialize_instance(generate(gen_args)), gen_args.out, out);
    } else if (verify->parsed()) {
      VerifyOptions o;
      o.seed = verify_seed;
      o.threads = threads;
      const VerifyReport report = run_verify_suite(suite, o);
      Json r{{"command", echo}};
      r.update(report.to_json());
      out << dump(r);
      return report.passed() ? 0 : 1;
    } else if (td->parsed()) {
      Json r{{"command", echo}};
      r.update(treedepth_report(load_instance(instance_path), heuristic));
      out << dump(r);
    }
  } catch (const InputError& e) {
    err << "degopt: input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "degopt: precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const OverflowError& e) {
    err << "degopt: arithmetic overflow: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "degopt: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace degopt
