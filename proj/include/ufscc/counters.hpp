#pragma once

#include <cstdint>

namespace ufscc {

// Operation tallies for the empirical complexity checks. All counters are
// monotone within a run.
struct OpCounters {
  // Parent links followed while ascending to the root inside find().
  std::uint64_t find_link_traversals = 0;
  // Effective unions only; calls that find both arguments already in the
  // same set do not count.
  std::uint64_t unions_performed = 0;
  // One per neighbor the solver examines against the merge condition.
  std::uint64_t merge_checks = 0;
  // DFS frames pushed.
  std::uint64_t dfs_pushes = 0;
};

}  // namespace ufscc
