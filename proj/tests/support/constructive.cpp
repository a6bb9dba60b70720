#include "constructive.hpp"

#include <algorithm>
#include <numeric>

#include "k33/named_graphs.hpp"
#include "k33/surgery.hpp"
#include "oracles.hpp"

namespace k33::constructive {
namespace {

Multigraph doubled_cycle(int k) {
  Multigraph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k, 2);
  return g;
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& xs) {
  return xs[rng() % xs.size()];
}

std::vector<int> vertices_of_degree(const Multigraph& g, int d) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == d) out.push_back(v);
  return out;
}

EdgeBijection random_bijection(std::mt19937& rng, std::vector<EdgeRef> a, std::vector<EdgeRef> b) {
  std::shuffle(b.begin(), b.end(), rng);
  EdgeBijection pi;
  for (std::size_t i = 0; i < a.size(); ++i) pi.emplace_back(a[i], b[i]);
  return pi;
}

bool try_pinch(std::mt19937& rng, Generated& g) {
  std::vector<EdgePair> options;
  for (const auto& p : g.graph.pairs())
    if (p.mult == 2 && g.graph.degree(p.u) == 4 && g.graph.degree(p.v) == 4) options.push_back(p);
  if (options.empty()) return false;
  const EdgePair p = pick(rng, options);
  g.graph = pinch_double_edge(g.graph, p.u, p.v);
  g.steps.push_back("pinch " + std::to_string(p.u) + "-" + std::to_string(p.v));
  return true;
}

bool try_special_join(std::mt19937& rng, Generated& g, const Generated& other) {
  const auto xs = vertices_of_degree(g.graph, 4);
  const auto ys = vertices_of_degree(other.graph, 4);
  if (xs.empty() || ys.empty()) return false;
  const int x = pick(rng, xs);
  const int y = pick(rng, ys);
  Multigraph f1 = g.graph, f2 = other.graph;
  const int v1 = f1.add_vertex();
  f1.add_edge(v1, x, 3);
  const int v2 = f2.add_vertex();
  f2.add_edge(v2, y, 3);
  // A triple-edge partner on an arbitrary degree-4 vertex can create K3,3
  // (K'2,4 at its simple hub does), so each operand is checked by brute force.
  if (f1.num_vertices() < 5 || f2.num_vertices() < 5) return false;
  if (f1.num_vertices() > 8 || f2.num_vertices() > 8) return false;
  const Multigraph k33 = named::complete_bipartite(3, 3);
  if (oracle::has_immersion(k33, f1) || oracle::has_immersion(k33, f2)) return false;
  const auto pi = random_bijection(rng, edges_at_except(f1, x, v1), edges_at_except(f2, y, v2));
  g.graph = special_4_join(f1, v1, x, f2, v2, y, pi);
  g.steps.push_back("special4join");
  return true;
}

}  // namespace

std::vector<Multigraph> seeds() {
  std::vector<Multigraph> out{named::complete(4), named::wheel(5), named::k24_prime()};
  for (int k = 3; k <= 6; ++k) out.push_back(doubled_cycle(k));
  // Vertex 3 takes a triple-edge partner without creating K3,3.
  Multigraph h(4);
  h.add_edge(0, 1, 1);
  h.add_edge(0, 2, 2);
  h.add_edge(0, 3, 3);
  h.add_edge(1, 2, 1);
  h.add_edge(1, 3, 1);
  out.push_back(h);
  return out;
}

Multigraph shuffled(std::mt19937& rng, const Multigraph& g) {
  std::vector<int> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.permuted(perm);
}

Generated random_c4(std::mt19937& rng, int max_vertices) {
  const auto base = seeds();
  Generated g{shuffled(rng, pick(rng, base)), {"seed"}};
  const int steps = static_cast<int>(rng() % 5);
  for (int i = 0; i < steps; ++i) {
    if (rng() % 2 == 0) {
      if (g.graph.num_vertices() + 1 <= max_vertices) try_pinch(rng, g);
    } else {
      Generated other{shuffled(rng, pick(rng, base)), {"seed"}};
      if (rng() % 3 == 0) try_pinch(rng, other);
      if (g.graph.num_vertices() + other.graph.num_vertices() - 2 <= max_vertices)
        try_special_join(rng, g, other);
    }
  }
  return g;
}

Generated random_free(std::mt19937& rng, int max_vertices) {
  Generated g = random_c4(rng, std::max(4, max_vertices / 2));
  const int steps = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < steps; ++i) {
    const int n = g.graph.num_vertices();
    switch (rng() % 5) {
      case 0: {  // join on equal degree <= 3
        Generated other = random_c4(rng, std::max(4, max_vertices - n + 2));
        if (n + other.graph.num_vertices() - 2 > max_vertices) break;
        std::vector<std::pair<int, int>> options;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < other.graph.num_vertices(); ++b) {
            const int d = g.graph.degree(a);
            if (d >= 1 && d <= 3 && d == other.graph.degree(b)) options.emplace_back(a, b);
          }
        if (options.empty() || n < 3 || other.graph.num_vertices() < 3) break;
        const auto [a, b] = pick(rng, options);
        const auto pi = random_bijection(rng, g.graph.incident_edges(a),
                                         other.graph.incident_edges(b));
        g.graph = join(g.graph, a, other.graph, b, pi);
        g.steps.push_back("join3");
        break;
      }
      case 1: {
        Generated other = random_c4(rng, 6);
        if (n + other.graph.num_vertices() > max_vertices) break;
        g.graph = disjoint_union(g.graph, other.graph);
        g.steps.push_back("union");
        break;
      }
      case 2: {
        if (n + 1 > max_vertices || g.graph.num_edges() == 0) break;
        const auto edges = g.graph.edges();
        g.graph = subdivide(g.graph, pick(rng, edges));
        g.steps.push_back("subdivide");
        break;
      }
      case 3: {
        if (n + 1 > max_vertices) break;
        g.graph = add_pendant(g.graph, static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % 2));
        g.steps.push_back("pendant");
        break;
      }
      default:
        if (n + 1 <= max_vertices) try_pinch(rng, g);
        break;
    }
  }
  g.graph = shuffled(rng, g.graph);
  return g;
}

}  // namespace k33::constructive
