#include "k33/immersion.hpp"

#include <algorithm>
#include <set>

#include "k33/named_graphs.hpp"
#include "k33/planarity.hpp"
#include "router_internal.hpp"

namespace k33 {
namespace {

std::vector<Demand> branch_demands(const std::vector<EdgeRef>& h_edges,
                                   const std::vector<int>& branch) {
  std::vector<Demand> demands;
  demands.reserve(h_edges.size());
  for (const auto& e : h_edges)
    demands.push_back({Terminal::at(branch[e.u]), Terminal::at(branch[e.v])});
  return demands;
}

// Colour classes of H when H is K3,3, first class holding vertex 0.
std::optional<std::pair<std::vector<int>, std::vector<int>>> k33_sides(const Multigraph& h) {
  if (h.num_vertices() != 6 || h.num_edges() != 9 || !h.is_simple()) return std::nullopt;
  std::vector<int> left, right;
  for (int v = 0; v < 6; ++v) (v == 0 || h.multiplicity(0, v) == 0 ? left : right).push_back(v);
  if (left.size() != 3) return std::nullopt;
  for (int a : left)
    for (int b : right)
      if (h.multiplicity(a, b) != 1) return std::nullopt;
  return std::make_pair(left, right);
}

class Searcher {
 public:
  Searcher(const Multigraph& h, const Multigraph& g, const ImmersionOptions& options)
      : h_(h), g_(g), options_(options), h_edges_(h.edges()) {
    if (options_.route.cut_pruning && g.num_vertices() > 12)
      cache_ = detail::CutCache::build(g);
  }

  std::optional<ImmersionEmbedding> try_branch(const std::vector<int>& branch) {
    auto walks = detail::route_cached(g_, branch_demands(h_edges_, branch), options_.route,
                                      nullptr, &cache_);
    if (!walks) return std::nullopt;
    return ImmersionEmbedding{branch, std::move(*walks)};
  }

  std::optional<ImmersionEmbedding> k33(const std::vector<int>& hl, const std::vector<int>& hr) {
    std::vector<int> cands;
    for (int v = 0; v < g_.num_vertices(); ++v)
      if (g_.degree(v) >= 3) cands.push_back(v);
    const int c = static_cast<int>(cands.size());
    std::vector<int> branch(6);
    // Unordered side pairs {L, R}: L holds the smaller least element.
    for (int i0 = 0; i0 < c; ++i0)
      for (int i1 = i0 + 1; i1 < c; ++i1)
        for (int i2 = i1 + 1; i2 < c; ++i2)
          for (int j0 = i0 + 1; j0 < c; ++j0) {
            if (j0 == i1 || j0 == i2) continue;
            for (int j1 = j0 + 1; j1 < c; ++j1) {
              if (j1 == i1 || j1 == i2) continue;
              for (int j2 = j1 + 1; j2 < c; ++j2) {
                if (j2 == i1 || j2 == i2) continue;
                const int l[3] = {cands[i0], cands[i1], cands[i2]};
                const int r[3] = {cands[j0], cands[j1], cands[j2]};
                for (int k = 0; k < 3; ++k) {
                  branch[hl[k]] = l[k];
                  branch[hr[k]] = r[k];
                }
                if (auto emb = try_branch(branch)) return emb;
              }
            }
          }
    return std::nullopt;
  }

  std::optional<ImmersionEmbedding> generic() {
    const int nh = h_.num_vertices();
    order_.resize(nh);
    for (int v = 0; v < nh; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return h_.degree(a) > h_.degree(b); });
    branch_.assign(nh, -1);
    used_.assign(g_.num_vertices(), 0);
    return assign(0);
  }

 private:
  std::optional<ImmersionEmbedding> assign(int idx) {
    if (idx == static_cast<int>(order_.size())) return try_branch(branch_);
    const int hv = order_[idx];
    for (int gv = 0; gv < g_.num_vertices(); ++gv) {
      if (used_[gv] || g_.degree(gv) < h_.degree(hv)) continue;
      used_[gv] = 1;
      branch_[hv] = gv;
      if (auto emb = assign(idx + 1)) return emb;
      branch_[hv] = -1;
      used_[gv] = 0;
    }
    return std::nullopt;
  }

  const Multigraph& h_;
  const Multigraph& g_;
  ImmersionOptions options_;
  std::vector<EdgeRef> h_edges_;
  detail::CutCache cache_;
  std::vector<int> order_;
  std::vector<int> branch_;
  std::vector<char> used_;
};

const std::vector<int>& side_of(const Separation& sep, Side side) {
  return side == Side::a ? sep.side_a : sep.side_b;
}

// G[side] with the side's vertices relabelled 0..k-1, plus the inner end of
// every cut edge (in cut order) expressed in that labelling.
struct SideGraph {
  Multigraph graph;
  std::vector<int> entries;
};

SideGraph side_graph(const Multigraph& g, const Separation& sep, Side side) {
  if (sep.order() != 4) throw GraphError("separation must have order 4");
  const auto& vs = side_of(sep, side);
  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos.at(vs[i]) = static_cast<int>(i);
  SideGraph sg{g.induced(vs), {}};
  for (const auto& e : sep.cut) {
    if (!g.has_edge(e)) throw GraphError("cut edge not in graph");
    const bool in_u = pos[e.u] >= 0;
    const bool in_v = pos[e.v] >= 0;
    if (in_u == in_v) throw GraphError("cut edge does not cross the separation");
    sg.entries.push_back(in_u ? pos[e.u] : pos[e.v]);
  }
  return sg;
}

}  // namespace

std::optional<ImmersionEmbedding> find_immersion(const Multigraph& h, const Multigraph& g,
                                                 const ImmersionOptions& options) {
  if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges()) return std::nullopt;
  Searcher search(h, g, options);
  if (options.k33_symmetry)
    if (auto sides = k33_sides(h)) return search.k33(sides->first, sides->second);
  return search.generic();
}

bool verify_embedding(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& emb) {
  const int nh = h.num_vertices();
  const int ng = g.num_vertices();
  if (static_cast<int>(emb.branch.size()) != nh) return false;
  std::vector<char> taken(ng, 0);
  for (int b : emb.branch) {
    if (b < 0 || b >= ng || taken[b]) return false;
    taken[b] = 1;
  }
  const auto h_edges = h.edges();
  if (emb.walks.size() != h_edges.size()) return false;
  std::set<EdgeRef> used;
  for (std::size_t i = 0; i < h_edges.size(); ++i) {
    const int start = emb.branch[h_edges[i].u];
    const int end = emb.branch[h_edges[i].v];
    std::set<int> seen{start};
    int cur = start;
    for (const auto& e : emb.walks[i]) {
      if (e.u >= e.v || e.u < 0 || e.v >= ng || !g.has_edge(e)) return false;
      if (!e.incident(cur) || !used.insert(e).second) return false;
      cur = e.other(cur);
      if (!seen.insert(cur).second) return false;
    }
    if (cur != end) return false;
  }
  return true;
}

bool contains_k33(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n < 6 || g.num_edges() < 9) return false;
  int branch_capable = 0;
  for (int v = 0; v < n; ++v) branch_capable += g.degree(v) >= 3;
  if (branch_capable < 6) return false;
  if (g.is_regular(3)) return !is_planar(g);
  if (edge_connectivity(g) >= 3 && !is_planar(g)) return true;
  return find_immersion(named::complete_bipartite(3, 3), g).has_value();
}

std::optional<int> find_s_vertex(const Multigraph& g, const Separation& sep, Side side) {
  SideGraph sg = side_graph(g, sep, side);
  const int k = sg.graph.num_vertices();
  Multigraph f = sg.graph;
  const int source = f.add_vertex();
  for (int x : sg.entries) f.add_edge(source, x);
  const auto& vs = side_of(sep, side);
  for (int c = 0; c < k; ++c)
    if (max_flow(f, source, c).value >= 4) return vs[c];
  return std::nullopt;
}

bool has_s_vertex(const Multigraph& g, const Separation& sep, Side side) {
  return find_s_vertex(g, sep, side).has_value();
}

bool has_span(const Multigraph& g, const Separation& sep, Side side, const SpanPairing& pairing) {
  std::array<int, 4> ids{pairing.to_u[0], pairing.to_u[1], pairing.to_v[0], pairing.to_v[1]};
  std::array<char, 4> hit{};
  for (int i : ids) {
    if (i < 0 || i > 3 || hit[i]) throw GraphError("span pairing must partition the cut edges");
    hit[i] = 1;
  }
  SideGraph sg = side_graph(g, sep, side);
  const int k = sg.graph.num_vertices();
  // One stub vertex per cut edge, attached to its inner end.
  Multigraph f = sg.graph;
  std::array<Terminal, 4> stubs;
  for (int i = 0; i < 4; ++i) {
    const int s = f.add_vertex();
    f.add_edge(s, sg.entries[i]);
    stubs[i] = {s, EdgeRef::make(s, sg.entries[i])};
  }
  std::vector<int> degree_in_f(k);
  for (int v = 0; v < k; ++v) degree_in_f[v] = f.degree(v);
  for (int u = 0; u < k; ++u) {
    if (degree_in_f[u] < 3) continue;
    for (int v = 0; v < k; ++v) {
      if (v == u || degree_in_f[v] < 3) continue;
      std::vector<Demand> demands{{stubs[ids[0]], Terminal::at(u)},
                                  {stubs[ids[1]], Terminal::at(u)},
                                  {stubs[ids[2]], Terminal::at(v)},
                                  {stubs[ids[3]], Terminal::at(v)},
                                  {Terminal::at(u), Terminal::at(v)}};
      if (route(f, demands)) return true;
    }
  }
  return false;
}

}  // namespace k33
