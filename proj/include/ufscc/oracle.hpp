#pragma once

#include "ufscc/graph.hpp"
#include "ufscc/partition.hpp"

namespace ufscc {

// Reference implementations used for differential testing. Both are pure
// functions of the graph and share no merge logic with the solver.

// Groups vertices by mutual reachability, straight from the definition:
// full per-source reachability, then u ~ v iff reach(u,v) and reach(v,u).
// Quadratic memory; intended for small graphs (a few hundred vertices).
SccPartition reachability_partition(const DirectedGraph& g);

// Classical index/lowlink computation, iterative, for cross-checking at
// sizes the definitional oracle cannot reach.
SccPartition tarjan_scc(const DirectedGraph& g);

}  // namespace ufscc
