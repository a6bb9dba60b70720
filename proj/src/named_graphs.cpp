#include "k33/named_graphs.hpp"

namespace k33::named {

Multigraph complete(int n) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Multigraph complete_bipartite(int a, int b) {
  Multigraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Multigraph cycle(int n) {
  Multigraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Multigraph path(int n) {
  Multigraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Multigraph wheel(int spokes) {
  Multigraph g(spokes + 1);
  for (int i = 0; i < spokes; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 1 + (i + 1) % spokes);
  }
  return g;
}

Multigraph k24_prime() {
  Multigraph g = complete_bipartite(2, 4);
  for (int v = 2; v < 6; ++v) g.add_edge(0, v);
  return g;
}

Multigraph prism() {
  return Multigraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                    {0, 3}, {1, 4}, {2, 5}});
}

Multigraph petersen() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Multigraph k5_plus_vertex() {
  Multigraph g = complete(5);
  g.add_vertex();
  for (int v = 0; v < 3; ++v) g.add_edge(5, v);
  return g;
}

Multigraph dipole(int mult) {
  Multigraph g(2);
  g.add_edge(0, 1, mult);
  return g;
}

}  // namespace k33::named
