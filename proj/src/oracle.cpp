#include "ufscc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace ufscc {

SccPartition reachability_partition(const DirectedGraph& g) {
  const VertexId n = g.num_vertices();

  // reach[u][w]: a path (possibly empty) from u to w exists
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<VertexId> worklist;
  for (VertexId source = 0; source < n; ++source) {
    auto& seen = reach[source];
    seen[source] = true;
    worklist.assign(1, source);
    while (!worklist.empty()) {
      VertexId u = worklist.back();
      worklist.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          worklist.push_back(w);
        }
      }
    }
  }

  // label each vertex with the smallest mutually reachable vertex
  std::vector<std::uint32_t> labels(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexId rep = v;
    for (VertexId u = 0; u < v; ++u) {
      if (reach[u][v] && reach[v][u]) {
        rep = u;
        break;
      }
    }
    labels[v] = rep;
  }
  return canonical_partition(labels);
}

SccPartition tarjan_scc(const DirectedGraph& g) {
  const VertexId n = g.num_vertices();
  constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> index(n, unvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> scc_stack;
  std::vector<std::uint32_t> labels(n, 0);
  std::uint32_t next_index = 0;
  std::uint32_t next_component = 0;

  struct Frame {
    VertexId vertex;
    std::size_t next_neighbor;
  };
  std::vector<Frame> call_stack;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unvisited) {
      continue;
    }
    index[root] = lowlink[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = true;
    call_stack.push_back({root, 0});

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      VertexId v = frame.vertex;
      auto edges = g.neighbors(v);

      if (frame.next_neighbor < edges.size()) {
        VertexId w = edges[frame.next_neighbor++];
        if (index[w] == unvisited) {
          index[w] = lowlink[w] = next_index++;
          scc_stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          while (true) {
            VertexId w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = false;
            labels[w] = next_component;
            if (w == v) {
              break;
            }
          }
          ++next_component;
        }
        call_stack.pop_back();
        if (!call_stack.empty()) {
          VertexId parent = call_stack.back().vertex;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }

  return canonical_partition(labels);
}

}  // namespace ufscc
