#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/helpers.hpp"
#include "ufscc/generate.hpp"
#include "ufscc/oracle.hpp"

using namespace ufscc;
using test::make_graph;

TEST_CASE("reachability oracle basics") {
  CHECK(reachability_partition(DirectedGraph(1)).members ==
        std::vector<std::vector<VertexId>>{{0}});

  auto two_cycle = make_graph(2, {{0, 1}, {1, 0}});
  CHECK(reachability_partition(two_cycle).members ==
        std::vector<std::vector<VertexId>>{{0, 1}});

  // 3-cycle with a tail, grouped by hand from mutual reachability
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  auto p = reachability_partition(g);
  CHECK(p.component_count == 2);
  CHECK(p.members == std::vector<std::vector<VertexId>>{{0, 1, 2}, {3}});
  CHECK(p.component_of == std::vector<std::uint32_t>{0, 0, 0, 1});
}

TEST_CASE("tarjan basics") {
  CHECK(tarjan_scc(DirectedGraph(0)).component_count == 0);

  auto chain = make_graph(3, {{0, 1}, {1, 2}});
  auto p = tarjan_scc(chain);
  CHECK(p.component_count == 3);
  CHECK(p.members == std::vector<std::vector<VertexId>>{{0}, {1}, {2}});
}

TEST_CASE("tarjan handles duplicates and self-loops") {
  auto g = make_graph(3, {{0, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 2}});
  auto p = tarjan_scc(g);
  CHECK(p.members == std::vector<std::vector<VertexId>>{{0, 1}, {2}});
  CHECK(p == reachability_partition(g));
}

TEST_CASE("the two oracles agree on random graphs") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 200; ++round) {
    const VertexId n = 1 + rng() % 50;
    auto g = generate_graph({GraphKind::Random, n, rng() % (4 * n + 1), 0, rng()});
    REQUIRE(tarjan_scc(g) == reachability_partition(g));
  }
}

TEST_CASE("oracle partitions are canonical") {
  std::mt19937_64 rng(9);
  auto g = generate_graph({GraphKind::Random, 50, 120, 0, 4});
  auto p = tarjan_scc(g);
  std::uint32_t seen = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    // component indices appear in ascending-scan order
    REQUIRE(p.component_of[v] <= seen);
    if (p.component_of[v] == seen) {
      ++seen;
    }
  }
  CHECK(seen == p.component_count);
  for (const auto& members : p.members) {
    REQUIRE(std::is_sorted(members.begin(), members.end()));
    REQUIRE_FALSE(members.empty());
  }
}
