#include "ufscc/partition.hpp"

namespace ufscc {

SccPartition canonical_partition(std::span<const std::uint32_t> labels) {
  constexpr std::uint32_t unassigned = ~std::uint32_t{0};
  const auto n = static_cast<VertexId>(labels.size());

  // first-appearance relabeling over an ascending scan; member lists come
  // out ascending for free
  std::vector<std::uint32_t> remap(n, unassigned);
  SccPartition result;
  result.component_of.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t label = labels[v];
    if (remap[label] == unassigned) {
      remap[label] = result.component_count++;
      result.members.emplace_back();
    }
    result.component_of[v] = remap[label];
    result.members[remap[label]].push_back(v);
  }
  return result;
}

}  // namespace ufscc
