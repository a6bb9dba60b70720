#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "k33/connectivity.hpp"
#include "k33/named_graphs.hpp"
#include "k33/surgery.hpp"
#include "oracles.hpp"

using namespace k33;

namespace {

unsigned mask_of(const std::vector<int>& side) {
  unsigned m = 0;
  for (int v : side) m |= 1u << v;
  return m;
}

bool separation_is_sound(const Multigraph& g, const Separation& s) {
  if (s.side_a.empty() || s.side_b.empty()) return false;
  if (static_cast<int>(s.side_a.size() + s.side_b.size()) != g.num_vertices()) return false;
  const unsigned a = mask_of(s.side_a);
  if (a & mask_of(s.side_b)) return false;
  for (const auto& e : s.cut)
    if (((a >> e.u) & 1u) == ((a >> e.v) & 1u) || !g.has_edge(e)) return false;
  return s.order() == oracle::cut_order(g, a);
}

}  // namespace

TEST_CASE("max_flow examples") {
  CHECK(max_flow(named::dipole(2), 0, 1).value == 2);
  const Multigraph k4 = named::complete(4);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      if (s != t) CHECK(max_flow(k4, s, t).value == 3);
  const Multigraph k = named::k24_prime();
  CHECK(max_flow(k, 0, 1).value == 4);
}

TEST_CASE("max_flow equals the brute-force minimum cut") {
  std::mt19937 rng(21);
  for (int it = 0; it < 400; ++it) {
    const Multigraph g = oracle::random_multigraph(rng, 7, 3, 2);
    const int n = g.num_vertices();
    const int s = static_cast<int>(rng() % n);
    int t = static_cast<int>(rng() % (n - 1));
    if (t >= s) ++t;
    int best = 1 << 30;
    for (unsigned m = 0; m < (1u << n); ++m)
      if (((m >> s) & 1u) && !((m >> t) & 1u)) best = std::min(best, oracle::cut_order(g, m));
    const FlowResult f = max_flow(g, s, t);
    CHECK(f.value == best);
    CHECK(separation_is_sound(g, f.cut));
    CHECK(f.cut.order() == f.value);
    CHECK(std::binary_search(f.cut.side_a.begin(), f.cut.side_a.end(), s));
  }
}

TEST_CASE("enumerate_separations examples") {
  CHECK(enumerate_separations(named::cycle(4), 2, 1, 1).size() == 6);
  CHECK(enumerate_separations(named::complete(4), 3, 2, 2).empty());
  CHECK(enumerate_separations(named::wheel(5), 4, 3, 3).empty());
}

TEST_CASE("enumerate_separations matches the brute-force list") {
  std::mt19937 rng(3);
  for (int it = 0; it < 300; ++it) {
    const Multigraph g = oracle::random_multigraph(rng, 7, 2, 2);
    const int n = g.num_vertices();
    const int k = 1 + static_cast<int>(rng() % 5);
    const int a_min = 1 + static_cast<int>(rng() % 2);
    const int b_min = 1 + static_cast<int>(rng() % 2);
    std::set<unsigned> expect;
    for (unsigned m = 1; m + 1 < (1u << n); ++m) {
      const int a = __builtin_popcount(m);
      if (oracle::cut_order(g, m) > k) continue;
      const bool fwd = a >= a_min && n - a >= b_min;
      const bool rev = n - a >= a_min && a >= b_min;
      if (!fwd && !rev) continue;
      const unsigned comp = ((1u << n) - 1) & ~m;
      expect.insert(std::min(m, comp));
    }
    std::set<unsigned> got;
    for (const auto& s : enumerate_separations(g, k, a_min, b_min)) {
      CHECK(separation_is_sound(g, s));
      CHECK(static_cast<int>(s.side_a.size()) >= a_min);
      CHECK(static_cast<int>(s.side_b.size()) >= b_min);
      const unsigned m = mask_of(s.side_a);
      const unsigned comp = ((1u << n) - 1) & ~m;
      CHECK(got.insert(std::min(m, comp)).second);
    }
    CHECK(got == expect);
  }
}

TEST_CASE("scan and branching strategies agree") {
  std::mt19937 rng(8);
  for (int it = 0; it < 60; ++it) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Multigraph g = oracle::random_connected(rng, n, 0.3, 2);
    for (int k = 2; k <= 4; ++k) {
      const auto a = enumerate_separations(g, k, 1, 1, CutStrategy::scan);
      const auto b = enumerate_separations(g, k, 1, 1, CutStrategy::branching);
      CHECK(a == b);
    }
  }
}

TEST_CASE("classify examples") {
  const ConnectivityReport k4 = classify(named::complete(4));
  CHECK(k4.lambda == 3);
  CHECK(k4.is_internally_4ec);
  CHECK(k4.is_weakly_5ec);

  const ConnectivityReport prism = classify(named::prism());
  CHECK(prism.is_3ec);
  CHECK_FALSE(prism.is_internally_4ec);
  REQUIRE(prism.witness_internally_4ec);
  CHECK(prism.witness_internally_4ec->side_a == std::vector<int>{0, 1, 2});
  CHECK(prism.witness_internally_4ec->order() == 3);

  CHECK(classify(named::k24_prime()).is_weakly_5ec);
  CHECK(classify(named::wheel(5)).is_weakly_5ec);

  Multigraph bowtie(5);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) bowtie.add_edge(u, v);
  const auto two = two_vertex_connectivity(bowtie);
  CHECK(two.cut_vertex == 2);
  CHECK_FALSE(is_2_vertex_connected(bowtie));
  CHECK(is_2_vertex_connected(named::cycle(5)));
  CHECK(is_2_vertex_connected(named::wheel(5)));

  const ConnectivityReport split = classify(disjoint_union(named::complete(4), named::complete(4)));
  CHECK(split.lambda == 0);
  CHECK(split.witness_3ec->side_a == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("classify matches brute-force cuts") {
  std::mt19937 rng(99);
  for (int it = 0; it < 500; ++it) {
    const Multigraph g = oracle::random_multigraph(rng, 7, 3, 2);
    const auto r = classify(g);
    const auto f = oracle::cut_facts(g);
    CHECK(r.lambda == f.lambda);
    CHECK(r.is_3ec == f.is_3ec);
    CHECK(r.is_internally_4ec == f.is_internally_4ec);
    CHECK(r.is_weakly_5ec == f.is_weakly_5ec);
    CHECK(r.is_2_vertex_connected == f.is_2_vertex_connected);
    CHECK(is_internally_4ec(g) == f.is_internally_4ec);
    CHECK(is_weakly_5ec(g) == f.is_weakly_5ec);
    // A failed flag carries a witness that violates it.
    if (!r.is_weakly_5ec) {
      REQUIRE(r.witness_weakly_5ec);
      const auto& w = *r.witness_weakly_5ec;
      CHECK(separation_is_sound(g, w));
      const int small = static_cast<int>(std::min(w.side_a.size(), w.side_b.size()));
      CHECK_FALSE(acceptable_side(w.order(), small));
    }
  }
}

TEST_CASE("splitting off lowers edge connectivity by at most two") {
  std::mt19937 rng(4);
  int trials = 0;
  for (int it = 0; it < 400; ++it) {
    const Multigraph g = oracle::random_connected(rng, 3 + static_cast<int>(rng() % 5), 0.5, 2);
    const int v = static_cast<int>(rng() % g.num_vertices());
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (inc[i].other(v) != inc[j].other(v)) {
          const Multigraph h = split_off(g, inc[i], inc[j], v);
          CHECK(h.degree(v) == g.degree(v) - 2);
          CHECK(edge_connectivity(h) >= edge_connectivity(g) - 2);
          ++trials;
          i = inc.size();
          break;
        }
  }
  CHECK(trials > 100);
}

TEST_CASE("format_report") {
  const std::string text = format_report(classify(named::prism()));
  CHECK(text.find("lambda=3\n") == 0);
  CHECK(text.find("internally4ec=no witness=0,1,2") != std::string::npos);
}
