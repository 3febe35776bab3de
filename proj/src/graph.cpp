#include "ufscc/graph.hpp"

#include <stdexcept>
#include <string>

namespace ufscc {

void DirectedGraph::check_vertex(VertexId u) const {
  if (u >= num_vertices()) {
    throw std::out_of_range("vertex id " + std::to_string(u) +
                            " out of range for graph with " +
                            std::to_string(num_vertices()) + " vertices");
  }
}

void DirectedGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  adjacency_[u].push_back(v);
  ++edge_count_;
}

std::span<const VertexId> DirectedGraph::neighbors(VertexId u) const {
  check_vertex(u);
  return adjacency_[u];
}

}  // namespace ufscc
