#include "k33/structure.hpp"

#include <algorithm>
#include <array>

#include "k33/canonical.hpp"
#include "k33/connectivity.hpp"
#include "k33/named_graphs.hpp"
#include "k33/planarity.hpp"

namespace k33 {
namespace {

constexpr std::array<std::pair<NodeKind, const char*>, 9> kKindNames{{
    {NodeKind::leaf_c5, "LeafC5"},
    {NodeKind::leaf_p, "LeafP"},
    {NodeKind::leaf_small, "LeafSmall"},
    {NodeKind::union_of, "Union"},
    {NodeKind::subdivision, "Subdivision"},
    {NodeKind::pendant, "Pendant"},
    {NodeKind::join3, "Join3"},
    {NodeKind::pinch, "Pinch"},
    {NodeKind::special4_join, "Special4Join"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

template <class P>
const P& params_as(const DecompositionNode& node) {
  const P* p = std::get_if<P>(&node.params);
  require(p != nullptr, std::string("parameters do not match node kind ") + to_string(node.kind));
  return *p;
}

std::size_t expected_children(NodeKind kind) {
  switch (kind) {
    case NodeKind::subdivision:
    case NodeKind::pendant:
    case NodeKind::pinch:
      return 1;
    case NodeKind::join3:
    case NodeKind::special4_join:
      return 2;
    default:
      return 0;
  }
}

// Applies the node's operation to the given child graphs.
Multigraph replay(const DecompositionNode& node, const std::vector<const Multigraph*>& kids) {
  if (node.kind == NodeKind::union_of) {
    require(kids.size() >= 2, "Union needs at least two children");
    Multigraph g = *kids[0];
    for (std::size_t i = 1; i < kids.size(); ++i) g = disjoint_union(g, *kids[i]);
    return g;
  }
  require(kids.size() == expected_children(node.kind),
          std::string("wrong number of children for ") + to_string(node.kind));
  switch (node.kind) {
    case NodeKind::subdivision:
      return subdivide(*kids[0], params_as<SubdivisionParams>(node).edge);
    case NodeKind::pendant: {
      const auto& p = params_as<PendantParams>(node);
      return add_pendant(*kids[0], p.vertex, p.mult);
    }
    case NodeKind::join3: {
      const auto& p = params_as<Join3Params>(node);
      return join(*kids[0], p.v1, *kids[1], p.v2, p.pi);
    }
    case NodeKind::pinch: {
      const auto& p = params_as<PinchParams>(node);
      return pinch_double_edge(*kids[0], p.u, p.v);
    }
    case NodeKind::special4_join: {
      const auto& p = params_as<Special4JoinParams>(node);
      return special_4_join(*kids[0], p.v1, p.w1, *kids[1], p.v2, p.w2, p.pi);
    }
    default:
      throw GraphError("leaf nodes have nothing to replay");
  }
}

Multigraph without(const Multigraph& g, int x) {
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != x) keep.push_back(v);
  return g.induced(keep);
}

// Position of each vertex inside `side`, -1 elsewhere.
std::vector<int> positions(int n, const std::vector<int>& side) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < side.size(); ++i) pos[side[i]] = static_cast<int>(i);
  return pos;
}

// Rank of r after deleting the vertices in `gone` (all distinct from r).
int shifted(int r, std::initializer_list<int> gone) {
  int out = r;
  for (int x : gone) out -= r > x;
  return out;
}

// The side as a path v1..vk of double edges with two cut edges at each end.
std::optional<std::vector<int>> double_edge_path(const Multigraph& g, const Separation& sep,
                                                 const std::vector<int>& side) {
  const int k = static_cast<int>(side.size());
  if (k < 3) return std::nullopt;
  auto pos = positions(g.num_vertices(), side);
  std::vector<int> cut_at(k, 0);
  for (const auto& e : sep.cut) ++cut_at[pos[e.u] >= 0 ? pos[e.u] : pos[e.v]];
  std::vector<int> ends;
  for (int i = 0; i < k; ++i) {
    int inner = 0;
    for (int j = 0; j < k; ++j) {
      const int m = g.multiplicity(side[i], side[j]);
      if (m == 0) continue;
      if (m != 2) return std::nullopt;
      ++inner;
    }
    if (inner == 1) {
      if (cut_at[i] != 2) return std::nullopt;
      ends.push_back(side[i]);
    } else if (inner != 2 || cut_at[i] != 0) {
      return std::nullopt;
    }
  }
  if (ends.size() != 2) return std::nullopt;
  std::vector<int> path{ends[0]};
  int prev = -1;
  while (static_cast<int>(path.size()) < k) {
    const int cur = path.back();
    int next = -1;
    for (int w : side)
      if (w != prev && w != cur && g.multiplicity(cur, w) > 0) next = w;
    if (next < 0) return std::nullopt;
    prev = cur;
    path.push_back(next);
  }
  if (path.back() != ends[1]) return std::nullopt;
  return path;
}

class Decomposer {
 public:
  struct Built {
    int node;
    std::vector<int> map;
  };

  DecompositionTree take() { return std::move(tree_); }

  Built build(const Multigraph& g) {
    const int n = g.num_vertices();
    if (n <= 1) return leaf(g, NodeKind::leaf_small);
    auto comps = connected_components(g);
    if (comps.size() > 1) return split_components(g, comps);
    for (int w = 0; w < n; ++w) {
      auto nb = g.neighbors(w);
      if (nb.size() == 1 && g.multiplicity(w, nb[0]) <= 2) return peel_pendant(g, w, nb[0]);
    }
    for (int w = 0; w < n; ++w)
      if (g.degree(w) == 2) return peel_subdivision(g, w);
    auto small = enumerate_separations(g, 3, 2, 2);
    if (!small.empty()) return split_join3(g, small);
    // Internally 4-edge-connected from here on.
    if (is_in_P(g)) return leaf(g, NodeKind::leaf_p);
    if (n <= 5) return leaf(g, NodeKind::leaf_small);
    if (is_weakly_5ec(g)) return leaf(g, NodeKind::leaf_c5);
    return split_order4(g);
  }

 private:
  Built leaf(const Multigraph& g, NodeKind kind) {
    std::vector<int> map(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) map[v] = v;
    return {add({kind, g, {}, std::monostate{}}), std::move(map)};
  }

  int add(DecompositionNode node) {
    if (!is_leaf(node.kind)) {
      std::vector<const Multigraph*> kids;
      for (int c : node.children) kids.push_back(&tree_.nodes[c].graph);
      node.graph = replay(node, kids);
    }
    tree_.nodes.push_back(std::move(node));
    tree_.root = static_cast<int>(tree_.nodes.size()) - 1;
    return tree_.root;
  }

  // The replayed node graph must be g relabelled by the map.
  Built finish(const Multigraph& g, int node, std::vector<int> map) {
    if (!(g.permuted(map) == tree_.nodes[node].graph))
      throw InternalError(std::string("vertex map mismatch at ") + to_string(tree_.nodes[node].kind));
    return {node, std::move(map)};
  }

  Built split_components(const Multigraph& g, const std::vector<std::vector<int>>& comps) {
    std::vector<int> children;
    std::vector<int> map(g.num_vertices());
    int offset = 0;
    for (const auto& comp : comps) {
      Built c = build(g.induced(comp));
      for (std::size_t i = 0; i < comp.size(); ++i) map[comp[i]] = offset + c.map[i];
      offset += static_cast<int>(comp.size());
      children.push_back(c.node);
    }
    int node = add({NodeKind::union_of, {}, children, std::monostate{}});
    return finish(g, node, std::move(map));
  }

  Built peel_pendant(const Multigraph& g, int w, int nbr) {
    const int mult = g.multiplicity(w, nbr);
    Built c = build(remove_pendant(g, w));
    const int n = g.num_vertices();
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) map[v] = v == w ? n - 1 : c.map[shifted(v, {w})];
    int node = add({NodeKind::pendant, {}, {c.node},
                    PendantParams{c.map[shifted(nbr, {w})], mult}});
    return finish(g, node, std::move(map));
  }

  Built peel_subdivision(const Multigraph& g, int w) {
    auto nb = g.neighbors(w);
    Multigraph child = suppress(g, w);
    const int a = shifted(nb[0], {w});
    const int b = shifted(nb[1], {w});
    const int top = child.multiplicity(a, b) - 1;
    Built c = build(child);
    const int n = g.num_vertices();
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) map[v] = v == w ? n - 1 : c.map[shifted(v, {w})];
    int node = add({NodeKind::subdivision, {}, {c.node},
                    SubdivisionParams{EdgeRef::make(c.map[a], c.map[b], top)}});
    return finish(g, node, std::move(map));
  }

  Built split_join3(const Multigraph& g, const std::vector<Separation>& seps) {
    int best = 4;
    for (const auto& s : seps) best = std::min(best, s.order());
    const Separation* chosen = nullptr;
    for (const auto& s : seps) {
      if (s.order() != best) continue;
      if (is_connected(g.induced(s.side_a)) && is_connected(g.induced(s.side_b))) {
        chosen = &s;
        break;
      }
    }
    if (!chosen) throw InternalError("no minimum-order separation with connected sides");
    const Separation& sep = *chosen;
    const int n = g.num_vertices();
    Multigraph h1 = contract_side(g, sep.side_b);
    Multigraph h2 = contract_side(g, sep.side_a);
    const int x1 = static_cast<int>(sep.side_a.size());
    const int x2 = static_cast<int>(sep.side_b.size());
    auto pos_a = positions(n, sep.side_a);
    auto pos_b = positions(n, sep.side_b);
    std::vector<int> used_a(x1, 0), used_b(x2, 0);
    EdgeBijection pi;
    for (const auto& e : sep.cut) {
      const int a = pos_a[e.u] >= 0 ? e.u : e.v;
      const int b = e.other(a);
      pi.push_back({EdgeRef::make(pos_a[a], x1, used_a[pos_a[a]]++),
                    EdgeRef::make(pos_b[b], x2, used_b[pos_b[b]]++)});
    }
    Built c1 = build(h1);
    Built c2 = build(h2);
    Join3Params p{c1.map[x1], c2.map[x2], {}};
    for (const auto& [e1, e2] : pi)
      p.pi.push_back({EdgeRef::make(c1.map[e1.other(x1)], p.v1, e1.copy),
                      EdgeRef::make(c2.map[e2.other(x2)], p.v2, e2.copy)});
    std::vector<int> map(n);
    for (int a : sep.side_a) map[a] = shifted(c1.map[pos_a[a]], {p.v1});
    for (int b : sep.side_b) map[b] = x1 + shifted(c2.map[pos_b[b]], {p.v2});
    int node = add({NodeKind::join3, {}, {c1.node, c2.node}, std::move(p)});
    return finish(g, node, std::move(map));
  }

  Built split_order4(const Multigraph& g) {
    auto seps = enumerate_separations(g, 4, 3, 3);
    if (seps.empty()) throw InternalError("no order-4 separation in a graph that is not weakly 5-ec");
    for (const auto& sep : seps)
      for (const auto* side : {&sep.side_a, &sep.side_b})
        if (auto path = double_edge_path(g, sep, *side)) return peel_pinch(g, *path);
    for (const auto& sep : seps) {
      auto gadgets = gadget_operands(g, sep);
      if (is_internally_4ec(gadgets.f1) && is_internally_4ec(gadgets.f2))
        return special_join(g, sep, gadgets);
    }
    return special_join(g, seps.front(), gadget_operands(g, seps.front()));
  }

  Built peel_pinch(const Multigraph& g, const std::vector<int>& path) {
    const int w = path[1];
    Built c = build(unpinch(g, w));
    const int n = g.num_vertices();
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) map[v] = v == w ? n - 1 : c.map[shifted(v, {w})];
    int node = add({NodeKind::pinch, {}, {c.node},
                    PinchParams{c.map[shifted(path[0], {w})], c.map[shifted(path[2], {w})]}});
    return finish(g, node, std::move(map));
  }

  struct Gadgets {
    Multigraph f1, f2;
    EdgeBijection pi;
  };

  // G[X] plus w_X catching the cut-edge ends and v_X triple-joined to w_X.
  static Gadgets gadget_operands(const Multigraph& g, const Separation& sep) {
    const int n = g.num_vertices();
    const int ka = static_cast<int>(sep.side_a.size());
    const int kb = static_cast<int>(sep.side_b.size());
    Gadgets out{g.induced(sep.side_a), g.induced(sep.side_b), {}};
    for (auto* f : {&out.f1, &out.f2}) {
      const int w = f->add_vertex();
      const int v = f->add_vertex();
      f->add_edge(v, w, 3);
    }
    auto pos_a = positions(n, sep.side_a);
    auto pos_b = positions(n, sep.side_b);
    for (const auto& e : sep.cut) {
      const int a = pos_a[e.u] >= 0 ? e.u : e.v;
      const int b = e.other(a);
      const EdgeRef e1 = EdgeRef::make(pos_a[a], ka, out.f1.multiplicity(pos_a[a], ka));
      const EdgeRef e2 = EdgeRef::make(pos_b[b], kb, out.f2.multiplicity(pos_b[b], kb));
      out.f1.add_edge(pos_a[a], ka);
      out.f2.add_edge(pos_b[b], kb);
      out.pi.push_back({e1, e2});
    }
    return out;
  }

  Built special_join(const Multigraph& g, const Separation& sep, const Gadgets& gadgets) {
    const int ka = static_cast<int>(sep.side_a.size());
    const int kb = static_cast<int>(sep.side_b.size());
    Built c1 = build(gadgets.f1);
    Built c2 = build(gadgets.f2);
    Special4JoinParams p{c1.map[ka + 1], c1.map[ka], c2.map[kb + 1], c2.map[kb], {}};
    for (const auto& [e1, e2] : gadgets.pi)
      p.pi.push_back({EdgeRef::make(c1.map[e1.other(ka)], p.w1, e1.copy),
                      EdgeRef::make(c2.map[e2.other(kb)], p.w2, e2.copy)});
    const int n = g.num_vertices();
    auto pos_a = positions(n, sep.side_a);
    auto pos_b = positions(n, sep.side_b);
    std::vector<int> map(n);
    for (int a : sep.side_a) map[a] = shifted(c1.map[pos_a[a]], {p.v1, p.w1});
    for (int b : sep.side_b) map[b] = ka + shifted(c2.map[pos_b[b]], {p.v2, p.w2});
    int node = add({NodeKind::special4_join, {}, {c1.node, c2.node}, std::move(p)});
    return finish(g, node, std::move(map));
  }

  DecompositionTree tree_;
};

// K3,3-freeness of a leaf graph by direct check.
bool leaf_is_free(const DecompositionNode& node) {
  const Multigraph& g = node.graph;
  switch (node.kind) {
    case NodeKind::leaf_p:
      if (is_in_P(g)) return true;
      break;
    case NodeKind::leaf_small:
      if (g.num_vertices() <= 5) return true;
      break;
    default:
      break;
  }
  const bool free = !find_immersion(named::complete_bipartite(3, 3), g).has_value();
  if (free && node.kind == NodeKind::leaf_c5 && g.num_vertices() > 8)
    throw InternalError("K3,3-free weakly 5-edge-connected leaf with more than 8 vertices");
  return free;
}

std::optional<std::string> node_defect(const DecompositionTree& tree, int index) {
  const auto& node = tree.nodes[index];
  const std::string where = "node " + std::to_string(index) + " (" + to_string(node.kind) + "): ";
  if (is_leaf(node.kind)) {
    if (!node.children.empty()) return where + "leaf with children";
    if (!leaf_holds(node)) return where + "leaf fails its classifier";
    return std::nullopt;
  }
  for (int c : node.children)
    if (c < 0 || c >= index) return where + "child index not before parent";
  std::vector<const Multigraph*> kids;
  for (int c : node.children) kids.push_back(&tree.nodes[c].graph);
  try {
    switch (node.kind) {
      case NodeKind::pendant: {
        const auto& p = params_as<PendantParams>(node);
        if (p.mult != 1 && p.mult != 2) return where + "pendant multiplicity must be 1 or 2";
        break;
      }
      case NodeKind::join3: {
        const auto& p = params_as<Join3Params>(node);
        if (kids.size() != 2) return where + "needs two children";
        const auto &h1 = *kids[0], &h2 = *kids[1];
        if (p.v1 < 0 || p.v1 >= h1.num_vertices() || p.v2 < 0 || p.v2 >= h2.num_vertices())
          return where + "join vertex out of range";
        if (h1.degree(p.v1) != h2.degree(p.v2) || h1.degree(p.v1) > 3)
          return where + "join vertices must have equal degree at most three";
        if (!is_valid_bijection(h1, p.v1, h2, p.v2, p.pi)) return where + "pi is not a bijection";
        if (!is_connected(without(h1, p.v1)) || !is_connected(without(h2, p.v2)))
          return where + "operand minus join vertex is disconnected";
        break;
      }
      case NodeKind::pinch: {
        const auto& p = params_as<PinchParams>(node);
        const auto& h = *kids.at(0);
        if (p.u < 0 || p.v < 0 || p.u >= h.num_vertices() || p.v >= h.num_vertices() ||
            p.u == p.v)
          return where + "pinch vertex out of range";
        if (h.multiplicity(p.u, p.v) != 2 || h.degree(p.u) != 4 || h.degree(p.v) != 4)
          return where + "pinched pair must be a double edge between degree-4 vertices";
        break;
      }
      case NodeKind::special4_join: {
        const auto& p = params_as<Special4JoinParams>(node);
        if (kids.size() != 2) return where + "needs two children";
        if (!is_special_gadget(*kids[0], p.v1, p.w1) || !is_special_gadget(*kids[1], p.v2, p.w2))
          return where + "operand lacks the triple-edge gadget";
        break;
      }
      default:
        break;
    }
    if (!(replay(node, kids) == node.graph)) return where + "stored graph differs from replay";
  } catch (const GraphError& e) {
    return where + e.what();
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(NodeKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<NodeKind> node_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  return std::nullopt;
}

bool is_leaf(NodeKind kind) {
  return kind == NodeKind::leaf_c5 || kind == NodeKind::leaf_p || kind == NodeKind::leaf_small;
}

std::vector<int> DecompositionTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (is_leaf(nodes[i].kind)) out.push_back(static_cast<int>(i));
  return out;
}

Decomposition decompose_unchecked(const Multigraph& g) {
  Decomposer d;
  auto built = d.build(g);
  return {d.take(), std::move(built.map)};
}

Decomposition decompose(const Multigraph& g) {
  Decomposition d = decompose_unchecked(g);
  for (int leaf : d.tree.leaves())
    if (!leaf_is_free(d.tree.nodes[leaf])) throw K33Present("graph contains a K3,3 immersion");
  return d;
}

Multigraph recompose(const DecompositionTree& tree) {
  require(tree.root >= 0 && tree.root < static_cast<int>(tree.nodes.size()),
          "tree root out of range");
  std::vector<Multigraph> built(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (is_leaf(node.kind)) {
      built[i] = node.graph;
      continue;
    }
    std::vector<const Multigraph*> kids;
    for (int c : node.children) {
      require(c >= 0 && c < static_cast<int>(i), "child index not before parent");
      kids.push_back(&built[c]);
    }
    built[i] = replay(node, kids);
  }
  return built[tree.root];
}

bool leaf_holds(const DecompositionNode& node) {
  const Multigraph& g = node.graph;
  switch (node.kind) {
    case NodeKind::leaf_p:
      return is_in_P(g);
    case NodeKind::leaf_small:
      return g.num_vertices() <= 5 && is_internally_4ec(g);
    case NodeKind::leaf_c5:
      return g.num_vertices() <= 8 && is_weakly_5ec(g) && !is_in_P(g) &&
             !find_immersion(named::complete_bipartite(3, 3), g).has_value();
    default:
      return false;
  }
}

std::optional<std::string> find_tree_defect(const DecompositionTree& tree, const Multigraph& g) {
  if (tree.nodes.empty() || tree.root != static_cast<int>(tree.nodes.size()) - 1)
    return std::string("root must be the last node");
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (auto d = node_defect(tree, static_cast<int>(i))) return d;
  if (!is_isomorphic(tree.root_node().graph, g)) return std::string("recomposition is not isomorphic to the input");
  return std::nullopt;
}

bool validate_tree(const DecompositionTree& tree, const Multigraph& g) {
  return !find_tree_defect(tree, g).has_value();
}

StructuralResult is_k33_free_structural(const Multigraph& g) {
  Decomposition d = decompose_unchecked(g);
  bool free = true;
  for (int leaf : d.tree.leaves())
    if (!leaf_is_free(d.tree.nodes[leaf])) {
      free = false;
      break;
    }
  if (free) return {true, std::move(d.tree), std::nullopt};
  auto witness = find_immersion(named::complete_bipartite(3, 3), g);
  if (!witness) throw InternalError("a leaf immerses K3,3 but the graph does not");
  return {false, std::nullopt, std::move(witness)};
}

}  // namespace k33
