#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ufscc/counters.hpp"
#include "ufscc/generate.hpp"

namespace ufscc {

// One timed, counted solve of one generated graph.
struct BenchResult {
  GraphKind kind;
  VertexId n = 0;
  std::size_t m = 0;            // edges actually generated
  std::uint64_t seed = 0;       // seed used for this repetition
  std::uint64_t wall_ns = 0;
  OpCounters counters;
  std::uint32_t component_count = 0;
};

// Generates and solves `repetitions` graphs from the spec, one result per
// run. Repetition r uses seed spec.seed + r so every line is independently
// reproducible.
std::vector<BenchResult> run_benchmark(const GeneratorSpec& spec,
                                       std::uint32_t repetitions);

// Tab-separated: kind n m seed wall_ns find_links unions checks pushes
std::string format_report_line(const BenchResult& result);

}  // namespace ufscc
