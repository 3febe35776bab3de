#pragma once

#include <cstdint>

namespace ufscc {

// Vertex ids are dense and 0-based. External text formats are 1-based and
// convert at the io boundary.
using VertexId = std::uint32_t;

// DFS depth; the root call of a traversal has level 1. Values above the
// owning structure's sentinel_level() never occur; the sentinel itself
// represents "no vertex of this component is on the stack".
using LevelValue = std::uint32_t;

}  // namespace ufscc
