#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ufscc/types.hpp"

namespace ufscc {

// Adjacency-list digraph. Out-neighbors keep insertion order, duplicate
// edges and self-loops are stored as given; every downstream traversal
// iterates neighbors in that order, which makes results reproducible.
//
// Build single-threaded, then share freely: all accessors are const.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(VertexId vertex_count) : adjacency_(vertex_count) {}

  VertexId num_vertices() const { return static_cast<VertexId>(adjacency_.size()); }
  std::size_t num_edges() const { return edge_count_; }

  // Appends v to u's out-neighbor list. Throws std::out_of_range if either
  // endpoint is not a vertex of this graph.
  void add_edge(VertexId u, VertexId v);

  // Out-neighbors of u in insertion order.
  std::span<const VertexId> neighbors(VertexId u) const;

  bool operator==(const DirectedGraph&) const = default;

 private:
  void check_vertex(VertexId u) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace ufscc
