#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ufscc/counters.hpp"
#include "ufscc/graph.hpp"
#include "ufscc/partition.hpp"
#include "ufscc/union_find.hpp"

namespace ufscc {

// One frame of the explicit traversal stack. Frames stack with levels
// 1, 2, 3, ... from bottom to top; next_neighbor is the cursor into the
// vertex's adjacency list.
struct DfsFrame {
  VertexId vertex;
  LevelValue level;
  std::size_t next_neighbor;
};

using VisitedSet = std::vector<bool>;

// Instrumentation hooks for white-box checks. before_neighbor fires right
// before each neighbor is examined, with the live traversal stack and the
// set structure; it must not mutate either.
struct SolveHooks {
  std::function<void(const LevelUnionFind& sets,
                     std::span<const DfsFrame> stack,
                     VertexId neighbor)>
      before_neighbor;
};

// Runs one depth-first traversal from start (which must be unvisited),
// merging components in ds as it goes:
//
//   on first entry to v at level L: lower v's set min level to L;
//   for each neighbor w in adjacency order: descend first if w is
//     unvisited, then merge v's and w's sets iff w's set min level < L;
//   once v's neighbors are exhausted: reset the set min level to the
//     sentinel iff v owned it (it equals L), then pop v.
//
// Iterative on an explicit frame stack, so traversal depth is bounded by
// memory, not the call stack. The merge test for a freshly descended child
// runs at the resume point after its frame pops, which is the same moment
// a recursive formulation would perform it.
//
// When counters are given they are also attached to ds, so union and find
// tallies land in the same place as the push and check tallies.
void dfs_visit(const DirectedGraph& g, LevelUnionFind& ds, VisitedSet& visited,
               VertexId start, OpCounters* counters = nullptr,
               const SolveHooks* hooks = nullptr);

// Reads the component of every vertex out of ds and returns the canonical
// partition. Call after all traversals are done.
SccPartition assemble_partition(LevelUnionFind& ds, VertexId vertex_count);

// Full run: scans vertices in ascending id, starts a level-1 traversal at
// every unvisited one, then assembles the partition.
SccPartition solve(const DirectedGraph& g, OpCounters* counters = nullptr,
                   const SolveHooks* hooks = nullptr);

}  // namespace ufscc
