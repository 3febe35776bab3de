#pragma once

#include <cstdint>
#include <vector>

#include "ufscc/counters.hpp"
#include "ufscc/types.hpp"

namespace ufscc {

// Disjoint-set forest over vertex ids with union by height and full
// two-pass path compression, augmented with one level value per set: the
// minimum DFS stack level among the set's on-stack members. The solver
// drives its merge decisions off that value.
//
// The sentinel level is vertex_count + 1, which compares greater than any
// reachable DFS level (a traversal can never go deeper than vertex_count).
//
// height and min_level are meaningful at roots only; values left behind at
// non-roots are never read.
//
// find mutates parent links, so even read-heavy use needs exclusive access.
class LevelUnionFind {
 public:
  explicit LevelUnionFind(VertexId count);

  // Builds an explicit parent forest; parents[i] == i marks a root. Heights
  // are derived from the actual trees, min levels start at the sentinel.
  // Exists so tests can assert compression postconditions on known shapes.
  // Throws std::invalid_argument if the links do not form a forest.
  static LevelUnionFind from_parent_forest(std::vector<VertexId> parents);

  VertexId size() const { return static_cast<VertexId>(parent_.size()); }
  LevelValue sentinel_level() const { return sentinel_; }

  // Root of x's set. Every vertex on the walked path is re-linked directly
  // to the root before returning.
  VertexId find(VertexId x);

  // Joins the sets of x and y. The root of greater height survives; on
  // equal heights x's root survives and its height grows by one. The
  // surviving root keeps the smaller of the two min levels. No-op when the
  // sets are already one.
  void unite(VertexId x, VertexId y);

  // Min level of x's set (resolves the root via find, compressing).
  LevelValue min_level_of(VertexId x);

  // Lowers the min level of x's set to min(current, level). level must be
  // a real level, not the sentinel.
  void lower_min_level(VertexId x, LevelValue level);

  // If the min level of x's set equals level exactly, resets it to the
  // sentinel and returns true; otherwise leaves it alone and returns false.
  bool reset_level_if_owner(VertexId x, LevelValue level);

  // Read-only inspection; never compresses. Used by instrumentation and
  // tests that must not disturb the structure.
  VertexId parent_of(VertexId x) const;
  VertexId root_of(VertexId x) const;
  bool is_root(VertexId x) const { return parent_of(x) == x; }
  LevelValue peek_min_level(VertexId x) const;
  std::uint32_t height_of(VertexId x) const;

  // Attach tallies; find reports ascent hops, unite reports effective
  // merges. Pass nullptr to detach.
  void attach_counters(OpCounters* counters) { counters_ = counters; }

 private:
  void check_index(VertexId x) const;

  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> height_;
  std::vector<LevelValue> min_level_;
  LevelValue sentinel_ = 1;
  OpCounters* counters_ = nullptr;
};

}  // namespace ufscc
