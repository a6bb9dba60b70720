#include "k33/surgery.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace k33 {
namespace {

// Old id -> new id after deleting `removed` (-1 for deleted vertices).
std::vector<int> compaction(int n, const std::vector<int>& removed) {
  std::vector<int> map(n, 0);
  for (int r : removed) map[r] = -1;
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (map[v] == 0) map[v] = next++;
  return map;
}

Multigraph without_vertices(const Multigraph& g, const std::vector<int>& removed) {
  auto map = compaction(g.num_vertices(), removed);
  Multigraph h(g.num_vertices() - static_cast<int>(removed.size()));
  for (const auto& p : g.pairs())
    if (map[p.u] >= 0 && map[p.v] >= 0) h.add_edge(map[p.u], map[p.v], p.mult);
  return h;
}

void require(bool ok, const char* what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Multigraph split_off(const Multigraph& g, const EdgeRef& e1, const EdgeRef& e2, int v) {
  require(g.has_edge(e1) && g.has_edge(e2), "split_off: edge does not exist");
  require(e1.incident(v) && e2.incident(v), "split_off: edges must be incident with v");
  const int u1 = e1.other(v);
  const int u2 = e2.other(v);
  require(u1 != u2, "split_off: edges are parallel");
  Multigraph h = g;
  h.remove_edge(v, u1);
  h.remove_edge(v, u2);
  h.add_edge(u1, u2);
  return h;
}

Multigraph contract_side(const Multigraph& g, const std::vector<int>& side) {
  const int n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (int a : side) {
    require(a >= 0 && a < n, "contract_side: vertex out of range");
    in[a] = 1;
  }
  const int k = static_cast<int>(std::count(in.begin(), in.end(), 1));
  require(k > 0 && k < n, "contract_side: side must be a non-empty proper subset");
  std::vector<int> map(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!in[v]) map[v] = next++;
  const int x = next;
  Multigraph h(next + 1);
  for (const auto& p : g.pairs()) {
    if (in[p.u] && in[p.v]) continue;
    h.add_edge(in[p.u] ? x : map[p.u], in[p.v] ? x : map[p.v], p.mult);
  }
  return h;
}

Multigraph subdivide(const Multigraph& g, const EdgeRef& e) {
  require(g.has_edge(e), "subdivide: edge does not exist");
  Multigraph h = g;
  const int w = h.add_vertex();
  h.remove_edge(e.u, e.v);
  h.add_edge(e.u, w);
  h.add_edge(w, e.v);
  return h;
}

Multigraph suppress(const Multigraph& g, int v) {
  require(g.degree(v) == 2, "suppress: vertex must have degree two");
  auto nb = g.neighbors(v);
  require(nb.size() == 2, "suppress: both edges go to the same neighbour");
  Multigraph h = without_vertices(g, {v});
  auto map = compaction(g.num_vertices(), {v});
  h.add_edge(map[nb[0]], map[nb[1]]);
  return h;
}

Multigraph add_pendant(const Multigraph& g, int v, int mult) {
  require(mult == 1 || mult == 2, "add_pendant: multiplicity must be 1 or 2");
  Multigraph h = g;
  (void)h.degree(v);
  const int w = h.add_vertex();
  h.add_edge(v, w, mult);
  return h;
}

Multigraph remove_pendant(const Multigraph& g, int w) {
  auto nb = g.neighbors(w);
  require(nb.size() == 1, "remove_pendant: vertex must have exactly one neighbour");
  require(g.multiplicity(w, nb[0]) <= 2, "remove_pendant: multiplicity above two");
  return without_vertices(g, {w});
}

Multigraph pinch_double_edge(const Multigraph& g, int u, int v) {
  require(u != v && g.multiplicity(u, v) == 2, "pinch: pair must have multiplicity exactly two");
  Multigraph h = g;
  h.remove_edge(u, v, 2);
  const int w = h.add_vertex();
  h.add_edge(w, u, 2);
  h.add_edge(w, v, 2);
  return h;
}

Multigraph unpinch(const Multigraph& g, int w) {
  require(g.degree(w) == 4, "unpinch: vertex must have degree four");
  auto nb = g.neighbors(w);
  require(nb.size() == 2 && g.multiplicity(w, nb[0]) == 2 && g.multiplicity(w, nb[1]) == 2,
          "unpinch: vertex must carry two double edges");
  require(g.multiplicity(nb[0], nb[1]) == 0, "unpinch: neighbours already adjacent");
  Multigraph h = without_vertices(g, {w});
  auto map = compaction(g.num_vertices(), {w});
  h.add_edge(map[nb[0]], map[nb[1]], 2);
  return h;
}

EdgeBijection default_bijection(const Multigraph& h1, int v1, const Multigraph& h2, int v2) {
  auto a = h1.incident_edges(v1);
  auto b = h2.incident_edges(v2);
  require(a.size() == b.size(), "bijection: degree mismatch");
  EdgeBijection pi;
  for (std::size_t i = 0; i < a.size(); ++i) pi.emplace_back(a[i], b[i]);
  return pi;
}

namespace {

bool covers_exactly(const std::vector<EdgeRef>& expected, std::vector<EdgeRef> got) {
  std::sort(got.begin(), got.end());
  auto want = expected;
  std::sort(want.begin(), want.end());
  return got == want;
}

bool bijection_between(const std::vector<EdgeRef>& side1, const std::vector<EdgeRef>& side2,
                       const EdgeBijection& pi) {
  if (pi.size() != side1.size() || side1.size() != side2.size()) return false;
  std::vector<EdgeRef> first, second;
  for (const auto& [a, b] : pi) {
    first.push_back(a);
    second.push_back(b);
  }
  return covers_exactly(side1, first) && covers_exactly(side2, second);
}

}  // namespace

bool is_valid_bijection(const Multigraph& h1, int v1, const Multigraph& h2, int v2,
                        const EdgeBijection& pi) {
  if (v1 < 0 || v1 >= h1.num_vertices() || v2 < 0 || v2 >= h2.num_vertices()) return false;
  return bijection_between(h1.incident_edges(v1), h2.incident_edges(v2), pi);
}

Multigraph join(const Multigraph& h1, int v1, const Multigraph& h2, int v2,
                const EdgeBijection& pi) {
  require(h1.num_vertices() >= 3 && h2.num_vertices() >= 3, "join: operands need three vertices");
  require(h1.degree(v1) == h2.degree(v2), "join: degree mismatch");
  require(is_valid_bijection(h1, v1, h2, v2, pi), "join: pi is not a bijection of incident edges");
  Multigraph left = without_vertices(h1, {v1});
  Multigraph right = without_vertices(h2, {v2});
  const int offset = left.num_vertices();
  Multigraph g = disjoint_union(left, right);
  auto map1 = compaction(h1.num_vertices(), {v1});
  auto map2 = compaction(h2.num_vertices(), {v2});
  for (const auto& [e1, e2] : pi) g.add_edge(map1[e1.other(v1)], offset + map2[e2.other(v2)]);
  return g;
}

bool is_special_gadget(const Multigraph& f, int v, int w) {
  const int n = f.num_vertices();
  if (v < 0 || w < 0 || v >= n || w >= n || v == w) return false;
  return f.degree(v) == 3 && f.multiplicity(v, w) == 3 && f.degree(w) == 7;
}

std::vector<EdgeRef> edges_at_except(const Multigraph& g, int w, int skip) {
  std::vector<EdgeRef> out;
  for (const auto& e : g.incident_edges(w))
    if (e.other(w) != skip) out.push_back(e);
  return out;
}

Multigraph special_4_join(const Multigraph& f1, int v1, int w1, const Multigraph& f2, int v2,
                          int w2, const EdgeBijection& pi) {
  require(f1.num_vertices() >= 5 && f2.num_vertices() >= 5,
          "special_4_join: operands need five vertices");
  require(is_special_gadget(f1, v1, w1) && is_special_gadget(f2, v2, w2),
          "special_4_join: operands lack the degree-3/degree-7 gadget");
  require(bijection_between(edges_at_except(f1, w1, v1), edges_at_except(f2, w2, v2), pi),
          "special_4_join: pi is not a bijection of the four boundary edges");
  Multigraph left = without_vertices(f1, {v1, w1});
  Multigraph right = without_vertices(f2, {v2, w2});
  const int offset = left.num_vertices();
  Multigraph g = disjoint_union(left, right);
  auto map1 = compaction(f1.num_vertices(), {v1, w1});
  auto map2 = compaction(f2.num_vertices(), {v2, w2});
  for (const auto& [e1, e2] : pi) g.add_edge(map1[e1.other(w1)], offset + map2[e2.other(w2)]);
  return g;
}

}  // namespace k33
