#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "ufscc/graph.hpp"

namespace ufscc {

enum class GraphKind {
  Random,      // n, m: m ordered pairs uniform with replacement
  Cycle,       // n: one directed n-cycle, a single component
  Path,        // n: a directed path, all singletons
  Dag,         // n, m: m edges from lower to higher id, all singletons
  CycleChain,  // n, k: k disjoint (n/k)-cycles linked acyclically
};

std::string_view kind_name(GraphKind kind);
std::optional<GraphKind> kind_from_name(std::string_view name);

struct GeneratorSpec {
  GraphKind kind = GraphKind::Random;
  VertexId n = 0;
  std::size_t m = 0;       // Random, Dag
  VertexId k = 0;          // CycleChain
  std::uint64_t seed = 0;  // Random, Dag; ignored by the deterministic kinds
};

// Builds a GeneratorSpec from the CLI's positional shape: random n m,
// cycle n, path n, dag n m, cycle_chain n k. Throws std::invalid_argument
// on an unknown kind or wrong parameter count.
GeneratorSpec make_generator_spec(std::string_view kind,
                                  std::span<const std::uint64_t> params,
                                  std::uint64_t seed);

// Deterministic for a given spec (the same seed always yields the same
// graph, on every platform). Throws std::invalid_argument on specs that
// cannot be realized: edges requested on an empty graph, a cycle of zero
// vertices, or cycle_chain with k = 0 or k not dividing n.
DirectedGraph generate_graph(const GeneratorSpec& spec);

}  // namespace ufscc
