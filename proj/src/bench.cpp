#include "ufscc/bench.hpp"

#include <chrono>
#include <sstream>

#include "ufscc/solver.hpp"

namespace ufscc {

std::vector<BenchResult> run_benchmark(const GeneratorSpec& spec,
                                       std::uint32_t repetitions) {
  std::vector<BenchResult> results;
  results.reserve(repetitions);

  for (std::uint32_t rep = 0; rep < repetitions; ++rep) {
    GeneratorSpec rep_spec = spec;
    rep_spec.seed = spec.seed + rep;
    DirectedGraph graph = generate_graph(rep_spec);

    BenchResult result;
    result.kind = spec.kind;
    result.n = graph.num_vertices();
    result.m = graph.num_edges();
    result.seed = rep_spec.seed;

    auto start = std::chrono::steady_clock::now();
    SccPartition partition = solve(graph, &result.counters);
    auto stop = std::chrono::steady_clock::now();

    result.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    result.component_count = partition.component_count;
    results.push_back(result);
  }
  return results;
}

std::string format_report_line(const BenchResult& result) {
  std::ostringstream line;
  line << kind_name(result.kind) << '\t' << result.n << '\t' << result.m
       << '\t' << result.seed << '\t' << result.wall_ns << '\t'
       << result.counters.find_link_traversals << '\t'
       << result.counters.unions_performed << '\t'
       << result.counters.merge_checks << '\t'
       << result.counters.dfs_pushes;
  return line.str();
}

}  // namespace ufscc
