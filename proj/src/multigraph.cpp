#include "k33/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace k33 {

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  degree_.assign(static_cast<std::size_t>(n), 0);
}

Multigraph Multigraph::from_pairs(int n, const std::vector<EdgePair>& pairs) {
  Multigraph g(n);
  for (const auto& p : pairs) g.add_edge(p.u, p.v, p.mult);
  return g;
}

Multigraph Multigraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Multigraph::add_edge(int u, int v, int count) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loops are not allowed");
  if (count < 0) throw GraphError("negative edge count");
  mult_[index(u, v)] += count;
  mult_[index(v, u)] += count;
  degree_[u] += count;
  degree_[v] += count;
  m_ += count;
}

void Multigraph::remove_edge(int u, int v, int count) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || count < 0 || mult_[index(u, v)] < count)
    throw GraphError("cannot remove missing edge");
  mult_[index(u, v)] -= count;
  mult_[index(v, u)] -= count;
  degree_[u] -= count;
  degree_[v] -= count;
  m_ -= count;
}

void Multigraph::set_multiplicity(int u, int v, int mult) {
  if (mult < 0) throw GraphError("negative multiplicity");
  int cur = multiplicity(u, v);
  if (mult > cur) add_edge(u, v, mult - cur);
  else if (mult < cur) remove_edge(u, v, cur - mult);
}

int Multigraph::add_vertex() {
  Multigraph bigger(n_ + 1);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (int k = mult_[index(u, v)]) bigger.add_edge(u, v, k);
  *this = std::move(bigger);
  return n_ - 1;
}

bool Multigraph::has_edge(const EdgeRef& e) const {
  if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v || e.copy < 0) return false;
  return e.copy < mult_[index(e.u, e.v)];
}

std::vector<int> Multigraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (mult_[index(v, w)] > 0) out.push_back(w);
  return out;
}

std::vector<EdgeRef> Multigraph::incident_edges(int v) const {
  check_vertex(v);
  std::vector<EdgeRef> out;
  for (int w = 0; w < n_; ++w)
    for (int c = 0; c < mult_[index(v, w)]; ++c) out.push_back(EdgeRef::make(v, w, c));
  return out;
}

std::vector<EdgePair> Multigraph::pairs() const {
  std::vector<EdgePair> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (int k = mult_[index(u, v)]) out.push_back({u, v, k});
  return out;
}

std::vector<EdgeRef> Multigraph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (const auto& p : pairs())
    for (int c = 0; c < p.mult; ++c) out.push_back({p.u, p.v, c});
  return out;
}

int Multigraph::max_multiplicity() const {
  return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

bool Multigraph::is_regular(int d) const {
  return std::all_of(degree_.begin(), degree_.end(), [d](int x) { return x == d; });
}

Multigraph Multigraph::induced(const std::vector<int>& vertices) const {
  Multigraph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (int k = multiplicity(vertices[i], vertices[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j), k);
  return h;
}

Multigraph Multigraph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  Multigraph h(n_);
  for (const auto& p : pairs()) h.add_edge(perm[p.u], perm[p.v], p.mult);
  return h;
}

std::vector<std::vector<int>> connected_components(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w : g.neighbors(members[i]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Multigraph& g) {
  return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  const int na = a.num_vertices();
  Multigraph g(na + b.num_vertices());
  for (const auto& p : a.pairs()) g.add_edge(p.u, p.v, p.mult);
  for (const auto& p : b.pairs()) g.add_edge(p.u + na, p.v + na, p.mult);
  return g;
}

std::ostream& operator<<(std::ostream& os, const EdgeRef& e) {
  return os << e.u << '-' << e.v << '#' << e.copy;
}

}  // namespace k33
