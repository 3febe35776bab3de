#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ufscc/bench.hpp"
#include "ufscc/commands.hpp"
#include "ufscc/generate.hpp"
#include "ufscc/io.hpp"

namespace {

int run_gen(const std::string& kind, const std::vector<std::uint64_t>& params,
            std::uint64_t seed, const std::string& output_path) {
  ufscc::DirectedGraph graph;
  try {
    auto spec = ufscc::make_generator_spec(kind, params, seed);
    graph = ufscc::generate_graph(spec);
  } catch (const std::invalid_argument& error) {
    std::cerr << error.what() << '\n';
    return 1;
  }

  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "IoError: cannot open output file \"" << output_path << "\"\n";
    return 2;
  }
  ufscc::format_edge_list(graph, out);
  return 0;
}

int run_bench(const std::string& kind, const std::vector<std::uint64_t>& params,
              std::uint64_t seed, std::uint32_t repetitions) {
  std::vector<ufscc::BenchResult> results;
  try {
    auto spec = ufscc::make_generator_spec(kind, params, seed);
    results = ufscc::run_benchmark(spec, repetitions);
  } catch (const std::invalid_argument& error) {
    std::cerr << error.what() << '\n';
    return 1;
  }
  for (const auto& result : results) {
    std::cout << ufscc::format_report_line(result) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly connected components via a level-keyed union-find"};
  app.require_subcommand(1);

  std::string input_path;
  std::string output_path;
  std::string kind;
  std::vector<std::uint64_t> params;
  std::uint64_t seed = 0;
  std::uint32_t repetitions = 1;

  auto* solve_cmd = app.add_subcommand(
      "solve", "read an edge list, write the component partition");
  solve_cmd->add_option("input", input_path, "edge-list file")->required();
  solve_cmd->add_option("output", output_path, "partition file")->required();

  auto* gen_cmd = app.add_subcommand(
      "gen", "generate a graph (random n m | cycle n | path n | dag n m | cycle_chain n k)");
  gen_cmd->add_option("kind", kind, "generator kind")->required();
  gen_cmd->add_option("params", params, "generator parameters");
  gen_cmd->add_option("--seed", seed, "rng seed");
  gen_cmd->add_option("-o,--output", output_path, "edge-list file to write")->required();

  auto* bench_cmd = app.add_subcommand(
      "bench", "generate, solve and report operation counts, one line per run");
  bench_cmd->add_option("kind", kind, "generator kind")->required();
  bench_cmd->add_option("params", params, "generator parameters");
  bench_cmd->add_option("--seed", seed, "base rng seed; run r uses seed + r");
  bench_cmd->add_option("--reps", repetitions, "number of runs");

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    return ufscc::run_solve_command(input_path, output_path, std::cerr);
  }
  if (gen_cmd->parsed()) {
    return run_gen(kind, params, seed, output_path);
  }
  return run_bench(kind, params, seed, repetitions);
}
