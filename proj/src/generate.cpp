#include "ufscc/generate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace ufscc {

std::string_view kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Random: return "random";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Path: return "path";
    case GraphKind::Dag: return "dag";
    case GraphKind::CycleChain: return "cycle_chain";
  }
  return "unknown";
}

std::optional<GraphKind> kind_from_name(std::string_view name) {
  if (name == "random") return GraphKind::Random;
  if (name == "cycle") return GraphKind::Cycle;
  if (name == "path") return GraphKind::Path;
  if (name == "dag") return GraphKind::Dag;
  if (name == "cycle_chain") return GraphKind::CycleChain;
  return std::nullopt;
}

namespace {

// Unbiased bounded draw via rejection, so generated graphs do not depend
// on the standard library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t raw = rng();
    if (raw >= threshold) {
      return raw % bound;
    }
  }
}

[[noreturn]] void reject(const std::string& why) {
  throw std::invalid_argument("invalid generator spec: " + why);
}

DirectedGraph random_graph(VertexId n, std::size_t m, std::uint64_t seed) {
  if (n == 0 && m > 0) reject("edges requested on an empty graph");
  DirectedGraph g(n);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    auto u = static_cast<VertexId>(bounded(rng, n));
    auto v = static_cast<VertexId>(bounded(rng, n));
    g.add_edge(u, v);
  }
  return g;
}

DirectedGraph cycle_graph(VertexId n) {
  if (n == 0) reject("a cycle needs at least one vertex");
  DirectedGraph g(n);
  for (VertexId v = 0; v < n; ++v) {
    g.add_edge(v, (v + 1) % n);
  }
  return g;
}

DirectedGraph path_graph(VertexId n) {
  DirectedGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) {
    g.add_edge(v, v + 1);
  }
  return g;
}

DirectedGraph dag_graph(VertexId n, std::size_t m, std::uint64_t seed) {
  if (m > 0 && n < 2) reject("a dag edge needs two distinct vertices");
  DirectedGraph g(n);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    VertexId a, b;
    do {
      a = static_cast<VertexId>(bounded(rng, n));
      b = static_cast<VertexId>(bounded(rng, n));
    } while (a == b);
    g.add_edge(std::min(a, b), std::max(a, b));
  }
  return g;
}

DirectedGraph cycle_chain_graph(VertexId n, VertexId k) {
  if (k == 0) reject("cycle_chain needs k >= 1");
  if (n == 0 || n % k != 0) reject("cycle_chain needs k to divide a positive n");
  const VertexId block = n / k;
  DirectedGraph g(n);
  for (VertexId j = 0; j < k; ++j) {
    const VertexId base = j * block;
    for (VertexId v = 0; v < block; ++v) {
      g.add_edge(base + v, base + (v + 1) % block);
    }
    if (j + 1 < k) {
      g.add_edge(base, base + block);  // forward link keeps blocks separate
    }
  }
  return g;
}

}  // namespace

GeneratorSpec make_generator_spec(std::string_view kind,
                                  std::span<const std::uint64_t> params,
                                  std::uint64_t seed) {
  auto parsed = kind_from_name(kind);
  if (!parsed) {
    reject("unknown kind \"" + std::string(kind) + "\"");
  }
  GeneratorSpec spec;
  spec.kind = *parsed;
  spec.seed = seed;

  auto expect = [&](std::size_t count, const char* shape) {
    if (params.size() != count) {
      reject(std::string(kind) + " takes parameters: " + shape);
    }
  };
  auto as_vertex_count = [&](std::uint64_t value) {
    if (value > std::numeric_limits<VertexId>::max()) {
      reject("vertex count " + std::to_string(value) + " too large");
    }
    return static_cast<VertexId>(value);
  };

  switch (spec.kind) {
    case GraphKind::Random:
    case GraphKind::Dag:
      expect(2, "n m");
      spec.n = as_vertex_count(params[0]);
      spec.m = params[1];
      break;
    case GraphKind::Cycle:
    case GraphKind::Path:
      expect(1, "n");
      spec.n = as_vertex_count(params[0]);
      break;
    case GraphKind::CycleChain:
      expect(2, "n k");
      spec.n = as_vertex_count(params[0]);
      spec.k = as_vertex_count(params[1]);
      break;
  }
  return spec;
}

DirectedGraph generate_graph(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GraphKind::Random: return random_graph(spec.n, spec.m, spec.seed);
    case GraphKind::Cycle: return cycle_graph(spec.n);
    case GraphKind::Path: return path_graph(spec.n);
    case GraphKind::Dag: return dag_graph(spec.n, spec.m, spec.seed);
    case GraphKind::CycleChain: return cycle_chain_graph(spec.n, spec.k);
  }
  reject("unhandled kind");
}

}  // namespace ufscc
