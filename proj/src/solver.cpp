#include "ufscc/solver.hpp"

#include <cassert>

namespace ufscc {

void dfs_visit(const DirectedGraph& g, LevelUnionFind& ds, VisitedSet& visited,
               VertexId start, OpCounters* counters, const SolveHooks* hooks) {
  assert(!visited[start]);

  if (counters != nullptr) {
    ds.attach_counters(counters);
  }

  std::vector<DfsFrame> stack;
  visited[start] = true;
  ds.lower_min_level(start, 1);
  stack.push_back({start, 1, 0});
  if (counters != nullptr) {
    ++counters->dfs_pushes;
  }

  while (!stack.empty()) {
    DfsFrame& frame = stack.back();
    auto edges = g.neighbors(frame.vertex);

    if (frame.next_neighbor < edges.size()) {
      VertexId neighbor = edges[frame.next_neighbor++];
      if (hooks != nullptr && hooks->before_neighbor) {
        hooks->before_neighbor(ds, stack, neighbor);
      }
      if (!visited[neighbor]) {
        // Descend; the merge test for this neighbor runs when its frame
        // pops. frame is dead after push_back (possible reallocation).
        visited[neighbor] = true;
        LevelValue child_level = frame.level + 1;
        ds.lower_min_level(neighbor, child_level);
        stack.push_back({neighbor, child_level, 0});
        if (counters != nullptr) {
          ++counters->dfs_pushes;
        }
      } else {
        if (counters != nullptr) {
          ++counters->merge_checks;
        }
        if (ds.min_level_of(neighbor) < frame.level) {
          ds.unite(frame.vertex, neighbor);
        }
      }
    } else {
      // Neighbors exhausted: give up the min level if this vertex owns it,
      // pop, then run the deferred merge test against the parent.
      ds.reset_level_if_owner(frame.vertex, frame.level);
      VertexId finished = frame.vertex;
      stack.pop_back();
      if (!stack.empty()) {
        DfsFrame& parent = stack.back();
        if (counters != nullptr) {
          ++counters->merge_checks;
        }
        if (ds.min_level_of(finished) < parent.level) {
          ds.unite(parent.vertex, finished);
        }
      }
    }
  }
}

SccPartition assemble_partition(LevelUnionFind& ds, VertexId vertex_count) {
  std::vector<std::uint32_t> labels(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) {
    labels[v] = ds.find(v);
  }
  return canonical_partition(labels);
}

SccPartition solve(const DirectedGraph& g, OpCounters* counters,
                   const SolveHooks* hooks) {
  const VertexId n = g.num_vertices();
  LevelUnionFind ds(n);
  ds.attach_counters(counters);
  VisitedSet visited(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (!visited[v]) {
      dfs_visit(g, ds, visited, v, counters, hooks);
    }
  }
  return assemble_partition(ds, n);
}

}  // namespace ufscc
