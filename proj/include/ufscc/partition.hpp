#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ufscc/types.hpp"

namespace ufscc {

// A partition of the vertices into strongly connected components, in
// canonical form: components are indexed by first appearance when scanning
// vertex ids in ascending order (equivalently, sorted by minimum member),
// and each member list ascends. Two partitions are the same grouping iff
// the canonical values compare equal.
struct SccPartition {
  std::uint32_t component_count = 0;
  std::vector<std::uint32_t> component_of;    // per vertex, in [0, component_count)
  std::vector<std::vector<VertexId>> members; // per component, ascending ids

  bool operator==(const SccPartition&) const = default;
};

// Canonicalizes a labeling (equal label == same component, every label
// < labels.size()): relabels by first appearance over ascending vertex ids
// and collects the member lists.
SccPartition canonical_partition(std::span<const std::uint32_t> labels);

}  // namespace ufscc
