#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "degopt/cli.hpp"
#include "degopt/colored.hpp"
#include "degopt/commands.hpp"
#include "degopt/error.hpp"
#include "degopt/instance.hpp"
#include "degopt/treedepth.hpp"

namespace py = pybind11;
using namespace degopt;

namespace {

using PyEdges = std::vector<std::pair<int, int>>;

Graph make_graph(int n, const PyEdges& edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back({a, b});
  return Graph::from_edges(n, std::move(es));
}

py::dict colored_result(const Graph& g, const ColoredSolution& s) {
  py::dict d;
  d["feasible"] = s.feasible;
  d["value"] = s.value;
  std::vector<std::pair<int, int>> chosen;
  for (std::size_t e : s.subset.indices()) chosen.push_back({g.edge(e).u, g.edge(e).v});
  d["edges"] = chosen;
  d["color_counts"] = s.color_counts;
  d["forest_height"] = s.forest_height;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "degree sequence optimization solvers";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<LimitError>(m, "LimitError", precondition.ptr());
  py::register_exception<OverflowError>(m, "ValueOverflowError", base.ptr());

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "degopt");
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit code, stdout, stderr).");

  m.def(
      "solve_multi",
      [](const std::string& instance, std::optional<std::size_t> edges, bool unprescribed, bool brute, int threads,
         int max_criteria) {
        SolveMultiOptions o;
        o.m = edges;
        o.unprescribed = unprescribed;
        o.brute = brute;
        o.threads = threads;
        o.max_criteria = max_criteria;
        const Instance inst = parse_instance(instance);
        py::gil_scoped_release release;
        return solve_multi_report(inst, o).dump();
      },
      py::arg("instance"), py::arg("m") = py::none(), py::arg("unprescribed") = false, py::arg("brute") = false,
      py::arg("threads") = 1, py::arg("max_criteria") = 4);

  m.def(
      "solve_colored",
      [](const std::string& instance, std::optional<std::vector<int>> forest, const std::string& method, bool brute,
         int threads) {
        const Instance inst = parse_instance(instance);
        SolveColoredOptions o;
        o.brute = brute;
        o.threads = threads;
        if (forest) {
          o.source = ForestSource::given;
          o.forest = *forest;
        } else if (method == "exact") {
          o.source = ForestSource::exact;
        } else if (method == "heuristic") {
          o.source = ForestSource::heuristic;
        } else if (method != "auto") {
          throw InputError("method must be auto, exact or heuristic");
        }
        py::gil_scoped_release release;
        return solve_colored_report(inst, o).dump();
      },
      py::arg("instance"), py::arg("forest") = py::none(), py::arg("method") = "auto", py::arg("brute") = false,
      py::arg("threads") = 1);

  m.def(
      "treedepth_report", [](const std::string& instance, bool heuristic) {
        return treedepth_report(parse_instance(instance), heuristic).dump();
      },
      py::arg("instance"), py::arg("heuristic") = false);

  m.def("emit_ip", [](const std::string& instance) { return emit_ip_text(parse_instance(instance)); },
        py::arg("instance"));
  m.def("canonicalize", [](const std::string& instance) { return serialize_instance(parse_instance(instance)); },
        py::arg("instance"));
  m.def("digest", [](const std::string& instance) { return instance_digest(parse_instance(instance)); },
        py::arg("instance"));

  // Typed entry points on 0-based edge lists.
  m.def(
      "treedepth",
      [](int n, const PyEdges& edges, bool forest) {
        const Graph g = make_graph(n, edges);
        const TreeDepthResult r = forest ? treedepth_exact_forest(g) : treedepth_exact(g);
        return std::make_pair(r.depth, r.forest.parents());
      },
      py::arg("n"), py::arg("edges"), py::arg("forest") = false,
      "Exact tree-depth and an optimal parent array (-1 marks roots).");

  m.def(
      "heuristic_forest",
      [](int n, const PyEdges& edges) { return heuristic_forest(make_graph(n, edges)).parents(); }, py::arg("n"),
      py::arg("edges"));

  m.def(
      "solve_separable",
      [](int n, const PyEdges& edges, std::vector<std::vector<Value>> tables, std::optional<std::vector<int>> colors,
         std::optional<std::vector<int>> counts, std::optional<std::vector<int>> forest, bool brute) {
        std::vector<Edge> es;
        for (auto [a, b] : edges) es.push_back({a, b});
        // The graph stores edges sorted; colours follow the caller's order.
        const auto norm = Graph::normalize(n, std::move(es));
        const Graph& g = norm.graph;
        std::optional<EdgeColoring> col;
        if (colors.has_value() != counts.has_value()) throw InputError("colors and counts go together");
        if (colors) {
          if (colors->size() != edges.size()) throw InputError("one colour per edge expected");
          EdgeColoring c{std::vector<int>(edges.size()), *counts};
          for (std::size_t k = 0; k < edges.size(); ++k) c.color[k] = (*colors)[norm.order[k]];
          col = std::move(c);
        }
        const SeparableObjective f(g, std::move(tables));
        ColoredSolution s;
        {
          py::gil_scoped_release release;
          s = brute ? solve_colored_bruteforce(g, col, f)
                    : solve_colored_dp(g, forest ? EliminationForest(*forest) : heuristic_forest(g), col, f);
        }
        return colored_result(g, s);
      },
      py::arg("n"), py::arg("edges"), py::arg("tables"), py::arg("colors") = py::none(),
      py::arg("counts") = py::none(), py::arg("forest") = py::none(), py::arg("brute") = false,
      "max sum_i tables[i][d_i(F)] over edge subsets F, optionally with exact per-colour counts.");
}
