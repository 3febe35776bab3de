#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ufscc/graph.hpp"
#include "ufscc/partition.hpp"

namespace ufscc::test {

inline DirectedGraph make_graph(
    VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  DirectedGraph g(n);
  for (auto [u, v] : edges) {
    g.add_edge(u, v);
  }
  return g;
}

inline DirectedGraph permuted_graph(const DirectedGraph& g,
                                    const std::vector<VertexId>& perm) {
  DirectedGraph h(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      h.add_edge(perm[u], perm[v]);
    }
  }
  return h;
}

// The partition induced on the renamed vertices.
inline SccPartition permuted_partition(const SccPartition& p,
                                       const std::vector<VertexId>& perm) {
  std::vector<std::uint32_t> labels(p.component_of.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    labels[perm[v]] = p.component_of[v];
  }
  return canonical_partition(labels);
}

inline std::vector<VertexId> random_permutation(VertexId n, std::mt19937_64& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Reference union-find: no compression, no balancing, nothing shared with
// the real structure. Partition oracle only.
struct NaiveDsu {
  std::vector<VertexId> parent;

  explicit NaiveDsu(VertexId n) : parent(n) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }
  VertexId find(VertexId x) const {
    while (parent[x] != x) {
      x = parent[x];
    }
    return x;
  }
  void unite(VertexId x, VertexId y) {
    VertexId rx = find(x);
    VertexId ry = find(y);
    if (rx != ry) {
      parent[ry] = rx;
    }
  }
  SccPartition partition() const {
    std::vector<std::uint32_t> labels(parent.size());
    for (VertexId v = 0; v < parent.size(); ++v) {
      labels[v] = find(v);
    }
    return canonical_partition(labels);
  }
};

}  // namespace ufscc::test
