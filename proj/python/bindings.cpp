#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ufscc/bench.hpp"
#include "ufscc/generate.hpp"
#include "ufscc/io.hpp"
#include "ufscc/oracle.hpp"
#include "ufscc/solver.hpp"

namespace py = pybind11;
using namespace ufscc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strongly connected components via a level-keyed union-find";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<DirectedGraph>(m, "DirectedGraph")
      .def(py::init<VertexId>(), py::arg("vertex_count"))
      .def("add_edge", &DirectedGraph::add_edge, py::arg("u"), py::arg("v"))
      .def("neighbors",
           [](const DirectedGraph& g, VertexId u) {
             auto view = g.neighbors(u);
             return std::vector<VertexId>(view.begin(), view.end());
           },
           py::arg("u"))
      .def_property_readonly("num_vertices", &DirectedGraph::num_vertices)
      .def_property_readonly("num_edges", &DirectedGraph::num_edges)
      .def(py::self == py::self)
      .def("__repr__", [](const DirectedGraph& g) {
        std::ostringstream out;
        out << "DirectedGraph(" << g.num_vertices() << " vertices, "
            << g.num_edges() << " edges)";
        return out.str();
      });

  py::class_<SccPartition>(m, "SccPartition")
      .def_readonly("component_count", &SccPartition::component_count)
      .def_readonly("component_of", &SccPartition::component_of)
      .def_readonly("members", &SccPartition::members)
      .def(py::self == py::self)
      .def("__repr__", [](const SccPartition& p) {
        return "SccPartition(" + std::to_string(p.component_count) +
               " components)";
      });

  py::class_<OpCounters>(m, "OpCounters")
      .def_readonly("find_link_traversals", &OpCounters::find_link_traversals)
      .def_readonly("unions_performed", &OpCounters::unions_performed)
      .def_readonly("merge_checks", &OpCounters::merge_checks)
      .def_readonly("dfs_pushes", &OpCounters::dfs_pushes);

  m.def("solve",
        [](const DirectedGraph& g) { return solve(g); },
        py::arg("graph"), "Partition a graph into strongly connected components.");
  m.def("solve_with_counters",
        [](const DirectedGraph& g) {
          OpCounters counters;
          SccPartition p = solve(g, &counters);
          return py::make_tuple(p, counters);
        },
        py::arg("graph"), "solve plus the operation tallies of the run.");

  m.def("reachability_partition", &reachability_partition, py::arg("graph"),
        "Definitional oracle: group by mutual reachability (small graphs).");
  m.def("tarjan_scc", &tarjan_scc, py::arg("graph"),
        "Classical iterative index/lowlink reference.");

  m.def("parse_edge_list",
        [](const std::string& text) { return parse_edge_list(text); },
        py::arg("text"));
  m.def("format_edge_list",
        [](const DirectedGraph& g) { return format_edge_list(g); },
        py::arg("graph"));
  m.def("format_partition",
        [](const SccPartition& p) { return format_partition(p); },
        py::arg("partition"));

  m.def("random_graph",
        [](VertexId n, std::size_t edges, std::uint64_t seed) {
          return generate_graph({GraphKind::Random, n, edges, 0, seed});
        },
        py::arg("n"), py::arg("m"), py::arg("seed") = 0);
  m.def("cycle_graph",
        [](VertexId n) { return generate_graph({GraphKind::Cycle, n, 0, 0, 0}); },
        py::arg("n"));
  m.def("path_graph",
        [](VertexId n) { return generate_graph({GraphKind::Path, n, 0, 0, 0}); },
        py::arg("n"));
  m.def("dag_graph",
        [](VertexId n, std::size_t edges, std::uint64_t seed) {
          return generate_graph({GraphKind::Dag, n, edges, 0, seed});
        },
        py::arg("n"), py::arg("m"), py::arg("seed") = 0);
  m.def("cycle_chain_graph",
        [](VertexId n, VertexId k) {
          return generate_graph({GraphKind::CycleChain, n, 0, k, 0});
        },
        py::arg("n"), py::arg("k"));

  m.def("run_benchmark",
        [](const std::string& kind, const std::vector<std::uint64_t>& params,
           std::uint64_t seed, std::uint32_t reps) {
          auto results = run_benchmark(make_generator_spec(kind, params, seed), reps);
          std::vector<std::string> lines;
          lines.reserve(results.size());
          for (const auto& result : results) {
            lines.push_back(format_report_line(result));
          }
          return lines;
        },
        py::arg("kind"), py::arg("params"), py::arg("seed") = 0,
        py::arg("reps") = 1,
        "One tab-separated report line per run: kind n m seed wall_ns "
        "find_links unions checks pushes.");

#ifdef UFSCC_VERSION
  m.attr("__version__") = UFSCC_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
