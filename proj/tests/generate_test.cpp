#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ufscc/bench.hpp"
#include "ufscc/generate.hpp"
#include "ufscc/solver.hpp"

using namespace ufscc;

TEST_CASE("structured kinds deliver their guaranteed shapes") {
  auto cycle = generate_graph({GraphKind::Cycle, 5, 0, 0, 0});
  CHECK(cycle.num_edges() == 5);
  auto p = solve(cycle);
  CHECK(p.component_count == 1);
  CHECK(p.members[0].size() == 5);

  CHECK(solve(generate_graph({GraphKind::Cycle, 1, 0, 0, 0})).component_count == 1);

  auto path = generate_graph({GraphKind::Path, 10, 0, 0, 0});
  CHECK(path.num_edges() == 9);
  CHECK(solve(path).component_count == 10);

  auto dag = generate_graph({GraphKind::Dag, 50, 200, 0, 42});
  CHECK(dag.num_edges() == 200);
  CHECK(solve(dag).component_count == 50);

  auto chain = generate_graph({GraphKind::CycleChain, 100, 0, 10, 0});
  auto cp = solve(chain);
  CHECK(cp.component_count == 10);
  for (const auto& members : cp.members) {
    CHECK(members.size() == 10);
  }
}

TEST_CASE("random graphs have the exact requested size") {
  auto g = generate_graph({GraphKind::Random, 100, 250, 0, 7});
  CHECK(g.num_vertices() == 100);
  CHECK(g.num_edges() == 250);
}

TEST_CASE("the same seed reproduces the same graph") {
  GeneratorSpec spec{GraphKind::Random, 64, 256, 0, 1234};
  CHECK(generate_graph(spec) == generate_graph(spec));

  GeneratorSpec other = spec;
  other.seed = 1235;
  CHECK(generate_graph(spec) != generate_graph(other));
}

TEST_CASE("unrealizable specs are rejected") {
  CHECK_THROWS_AS(generate_graph({GraphKind::Random, 0, 5, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_graph({GraphKind::Cycle, 0, 0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_graph({GraphKind::Dag, 1, 3, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_graph({GraphKind::CycleChain, 100, 0, 7, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_graph({GraphKind::CycleChain, 100, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("spec parsing checks kind and arity") {
  std::vector<std::uint64_t> two{10, 20};
  auto spec = make_generator_spec("random", two, 9);
  CHECK(spec.kind == GraphKind::Random);
  CHECK(spec.n == 10);
  CHECK(spec.m == 20);
  CHECK(spec.seed == 9);

  std::vector<std::uint64_t> one{10};
  CHECK_THROWS_AS(make_generator_spec("nonsense", one, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_generator_spec("cycle", two, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_generator_spec("random", one, 0), std::invalid_argument);
}

TEST_CASE("kind names round-trip") {
  for (auto kind : {GraphKind::Random, GraphKind::Cycle, GraphKind::Path,
                    GraphKind::Dag, GraphKind::CycleChain}) {
    CHECK(kind_from_name(kind_name(kind)) == kind);
  }
  CHECK_FALSE(kind_from_name("tree").has_value());
}

TEST_CASE("benchmark emits one reproducible line per run") {
  auto results = run_benchmark({GraphKind::Random, 1000, 5000, 0, 21}, 3);
  REQUIRE(results.size() == 3);
  for (std::size_t rep = 0; rep < results.size(); ++rep) {
    const auto& r = results[rep];
    CHECK(r.seed == 21 + rep);
    CHECK(r.n == 1000);
    CHECK(r.m == 5000);
    CHECK(r.counters.find_link_traversals > 0);
    CHECK(r.counters.merge_checks == r.m);
    CHECK(r.counters.unions_performed == r.n - r.component_count);
  }

  // kind n m seed wall_ns find_links unions checks pushes
  const std::string text = format_report_line(results[0]);
  std::istringstream line(text);
  std::string kind;
  std::uint64_t n, m, seed, wall, links, unions, checks, pushes;
  line >> kind >> n >> m >> seed >> wall >> links >> unions >> checks >> pushes;
  CHECK(kind == "random");
  CHECK(n == 1000);
  CHECK(m == 5000);
  CHECK(seed == 21);
  CHECK(links == results[0].counters.find_link_traversals);
  CHECK(pushes == 1000);
  CHECK(std::count(text.begin(), text.end(), '\t') == 8);
}

TEST_CASE("paths merge nothing, cycles merge all but one") {
  auto path_runs = run_benchmark({GraphKind::Path, 10, 0, 0, 0}, 1);
  CHECK(path_runs[0].counters.unions_performed == 0);

  auto cycle_runs = run_benchmark({GraphKind::Cycle, 10, 0, 0, 0}, 1);
  CHECK(cycle_runs[0].counters.unions_performed == 9);
}
