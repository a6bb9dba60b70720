#include <doctest.h>

#include <random>
#include <set>

#include "k33/immersion.hpp"
#include "k33/named_graphs.hpp"
#include "oracles.hpp"
#include "router_checks.hpp"

using namespace k33;

TEST_CASE("route examples") {
  const auto c4 = named::cycle(4);
  auto r = route(c4, {{Terminal::at(0), Terminal::at(2)}});
  REQUIRE(r);
  CHECK(r->front().size() == 2);

  const auto d = named::dipole(2);
  r = route(d, {{Terminal::at(0), Terminal::at(1)}, {Terminal::at(0), Terminal::at(1)}});
  REQUIRE(r);
  CHECK((*r)[0] != (*r)[1]);
  CHECK_FALSE(route(d, {{Terminal::at(0), Terminal::at(1)},
                        {Terminal::at(0), Terminal::at(1)},
                        {Terminal::at(0), Terminal::at(1)}}));

  const auto k4 = named::complete(4);
  std::vector<Demand> all;
  for (const auto& e : k4.edges()) all.push_back({Terminal::at(e.u), Terminal::at(e.v)});
  r = route(k4, all);
  REQUIRE(r);
  CHECK(testing_support::walks_valid(k4, all, *r));
}

TEST_CASE("route rejects malformed demands") {
  const auto k4 = named::complete(4);
  CHECK_THROWS_AS(route(k4, {{Terminal::at(1), Terminal::at(1)}}), GraphError);
  CHECK_THROWS_AS(route(k4, {{Terminal::at(0), Terminal::at(9)}}), GraphError);
  const EdgeRef e = EdgeRef::make(0, 1);
  CHECK_THROWS_AS(route(k4, {{Terminal::through(e, 2), Terminal::at(3)}}), GraphError);
  CHECK_THROWS_AS(route(k4, {{Terminal::through(e, 0), Terminal::at(3)},
                             {Terminal::through(e, 0), Terminal::at(2)}}),
                  GraphError);
  std::vector<Demand> many(33, {Terminal::at(0), Terminal::at(1)});
  CHECK_THROWS_AS(route(k4, many), GraphError);
}

TEST_CASE("route agrees with exhaustive path families") {
  std::mt19937 rng(31);
  int feasible = 0, instances = 0;
  for (int it = 0; it < 400; ++it) {
    const Multigraph g = testing_support::small_instance_graph(rng, 12);
    if (g.num_edges() == 0) continue;
    for (int rep = 0; rep < 3; ++rep) {
      const auto demands = testing_support::random_demands(rng, g, 4);
      if (demands.empty()) continue;
      const bool expect = oracle::path_family_exists(g, testing_support::to_oracle(demands));
      for (bool prune : {true, false}) {
        RouteOptions o;
        o.cut_pruning = prune;
        o.memoize = prune;
        const auto got = route(g, demands, o);
        CHECK(got.has_value() == expect);
        if (got) CHECK(testing_support::walks_valid(g, demands, *got));
      }
      feasible += expect;
      ++instances;
    }
  }
  CHECK(instances > 500);
  CHECK(feasible > instances / 5);
  CHECK(feasible < instances);
}

TEST_CASE("pruning never changes the answer on larger graphs") {
  std::mt19937 rng(77);
  for (int it = 0; it < 60; ++it) {
    const int n = 8 + static_cast<int>(rng() % 7);
    const Multigraph g = oracle::random_connected(rng, n, 0.25, 2);
    const auto demands = testing_support::random_demands(rng, g, 6);
    if (demands.empty()) continue;
    RouteOptions off;
    off.cut_pruning = false;
    const auto a = route(g, demands);
    const auto b = route(g, demands, off);
    CHECK(a.has_value() == b.has_value());
    if (a) CHECK(testing_support::walks_valid(g, demands, *a));
  }
}
