#include "k33/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "k33/connectivity.hpp"

namespace k33 {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const SimpleProjection& s) {
  BoostGraph bg(s.num_vertices);
  int index = 0;
  for (auto [u, v] : s.edges) boost::add_edge(u, v, index++, bg);
  return bg;
}

}  // namespace

SimpleProjection simple_projection(const Multigraph& g) {
  SimpleProjection s;
  s.num_vertices = g.num_vertices();
  for (const auto& p : g.pairs()) {
    s.edges.emplace_back(p.u, p.v);
    s.multiplicity.push_back(p.mult);
  }
  return s;
}

bool is_planar(const Multigraph& g) {
  auto s = simple_projection(g);
  const auto n = static_cast<long>(s.num_vertices);
  const auto m = static_cast<long>(s.edges.size());
  if (n <= 4) return true;
  if (m > 3 * n - 6) return false;
  BoostGraph bg = to_boost(s);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<std::vector<int>> planar_rotation_system(const Multigraph& g) {
  auto s = simple_projection(g);
  BoostGraph bg = to_boost(s);
  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
  auto emb_map = boost::make_iterator_property_map(embedding.begin(),
                                                   boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = emb_map))
    return {};
  std::vector<std::vector<int>> rotation(s.num_vertices);
  for (int v = 0; v < s.num_vertices; ++v)
    for (const auto& e : embedding[v]) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      rotation[v].push_back(a == v ? b : a);
    }
  return rotation;
}

bool is_in_P(const Multigraph& g) {
  return g.num_vertices() > 0 && g.is_regular(3) && is_internally_4ec(g) && is_planar(g);
}

}  // namespace k33
