#include "ufscc/union_find.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace ufscc {

LevelUnionFind::LevelUnionFind(VertexId count)
    : parent_(count),
      height_(count, 0),
      min_level_(count, count + 1),
      sentinel_(count + 1) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

LevelUnionFind LevelUnionFind::from_parent_forest(std::vector<VertexId> parents) {
  const auto n = static_cast<VertexId>(parents.size());
  for (VertexId v = 0; v < n; ++v) {
    if (parents[v] >= n) {
      throw std::invalid_argument("parent link out of range");
    }
    // A walk longer than n links can only mean a cycle.
    VertexId cur = v;
    for (VertexId steps = 0; parents[cur] != cur; ++steps) {
      if (steps >= n) {
        throw std::invalid_argument("parent links contain a cycle");
      }
      cur = parents[cur];
    }
  }

  LevelUnionFind ds(n);
  ds.parent_ = std::move(parents);
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t depth = 0;
    for (VertexId cur = v; ds.parent_[cur] != cur; cur = ds.parent_[cur]) {
      ++depth;
    }
    VertexId root = ds.root_of(v);
    ds.height_[root] = std::max(ds.height_[root], depth);
  }
  return ds;
}

void LevelUnionFind::check_index(VertexId x) const {
  if (x >= size()) {
    throw std::out_of_range("element " + std::to_string(x) +
                            " out of range for structure of size " +
                            std::to_string(size()));
  }
}

VertexId LevelUnionFind::find(VertexId x) {
  check_index(x);
  VertexId root = x;
  std::uint64_t hops = 0;
  while (parent_[root] != root) {
    root = parent_[root];
    ++hops;
  }
  while (x != root) {
    VertexId next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  if (counters_ != nullptr) {
    counters_->find_link_traversals += hops;
  }
  return root;
}

void LevelUnionFind::unite(VertexId x, VertexId y) {
  VertexId root_x = find(x);
  VertexId root_y = find(y);
  if (root_x == root_y) {
    return;
  }
  if (height_[root_x] < height_[root_y]) {
    std::swap(root_x, root_y);
  }
  if (height_[root_x] == height_[root_y]) {
    ++height_[root_x];
  }
  parent_[root_y] = root_x;
  min_level_[root_x] = std::min(min_level_[root_x], min_level_[root_y]);
  if (counters_ != nullptr) {
    ++counters_->unions_performed;
  }
}

LevelValue LevelUnionFind::min_level_of(VertexId x) {
  return min_level_[find(x)];
}

void LevelUnionFind::lower_min_level(VertexId x, LevelValue level) {
  assert(level < sentinel_);
  VertexId root = find(x);
  min_level_[root] = std::min(min_level_[root], level);
}

bool LevelUnionFind::reset_level_if_owner(VertexId x, LevelValue level) {
  VertexId root = find(x);
  if (min_level_[root] != level) {
    return false;
  }
  min_level_[root] = sentinel_;
  return true;
}

VertexId LevelUnionFind::parent_of(VertexId x) const {
  check_index(x);
  return parent_[x];
}

VertexId LevelUnionFind::root_of(VertexId x) const {
  check_index(x);
  while (parent_[x] != x) {
    x = parent_[x];
  }
  return x;
}

LevelValue LevelUnionFind::peek_min_level(VertexId x) const {
  return min_level_[root_of(x)];
}

std::uint32_t LevelUnionFind::height_of(VertexId x) const {
  check_index(x);
  return height_[x];
}

}  // namespace ufscc
