#include "k33/serialization.hpp"

#include "k33/edge_list.hpp"

namespace k33 {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw FormatError(what, 0); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string("expected integer for ") + what);
  return j.get<int>();
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

json edge_json(const EdgeRef& e) { return json::array({e.u, e.v, e.copy}); }

EdgeRef edge_from(const json& j) {
  if (!j.is_array() || j.size() != 3) fail("edge must be [u, v, copy]");
  EdgeRef e{as_int(j[0], "edge"), as_int(j[1], "edge"), as_int(j[2], "edge copy")};
  if (e.u >= e.v) fail("edge must have u < v");
  return e;
}

json pi_json(const EdgeBijection& pi) {
  json out = json::array();
  for (const auto& [a, b] : pi) out.push_back(json::array({edge_json(a), edge_json(b)}));
  return out;
}

EdgeBijection pi_from(const json& j) {
  if (!j.is_array()) fail("pi must be an array");
  EdgeBijection pi;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) fail("pi entries must be edge pairs");
    pi.push_back({edge_from(pair[0]), edge_from(pair[1])});
  }
  return pi;
}

json params_json(const NodeParams& params) {
  json p = json::object();
  if (auto* s = std::get_if<SubdivisionParams>(&params)) {
    p["edge"] = edge_json(s->edge);
  } else if (auto* pe = std::get_if<PendantParams>(&params)) {
    p["vertex"] = pe->vertex;
    p["mult"] = pe->mult;
  } else if (auto* j3 = std::get_if<Join3Params>(&params)) {
    p["v1"] = j3->v1;
    p["v2"] = j3->v2;
    p["pi"] = pi_json(j3->pi);
  } else if (auto* pin = std::get_if<PinchParams>(&params)) {
    p["u"] = pin->u;
    p["v"] = pin->v;
  } else if (auto* s4 = std::get_if<Special4JoinParams>(&params)) {
    p["v1"] = s4->v1;
    p["w1"] = s4->w1;
    p["v2"] = s4->v2;
    p["w2"] = s4->w2;
    p["pi"] = pi_json(s4->pi);
  }
  return p;
}

NodeParams params_from(NodeKind kind, const json& p) {
  switch (kind) {
    case NodeKind::subdivision:
      return SubdivisionParams{edge_from(field(p, "edge"))};
    case NodeKind::pendant:
      return PendantParams{as_int(field(p, "vertex"), "vertex"), as_int(field(p, "mult"), "mult")};
    case NodeKind::join3:
      return Join3Params{as_int(field(p, "v1"), "v1"), as_int(field(p, "v2"), "v2"),
                         pi_from(field(p, "pi"))};
    case NodeKind::pinch:
      return PinchParams{as_int(field(p, "u"), "u"), as_int(field(p, "v"), "v")};
    case NodeKind::special4_join:
      return Special4JoinParams{as_int(field(p, "v1"), "v1"), as_int(field(p, "w1"), "w1"),
                                as_int(field(p, "v2"), "v2"), as_int(field(p, "w2"), "w2"),
                                pi_from(field(p, "pi"))};
    default:
      return std::monostate{};
  }
}

json node_json(const DecompositionTree& tree, int index) {
  const auto& node = tree.nodes.at(index);
  json children = json::array();
  for (int c : node.children) children.push_back(node_json(tree, c));
  return {{"kind", to_string(node.kind)},
          {"params", params_json(node.params)},
          {"children", children},
          {"graph", graph_to_json(node.graph)}};
}

int node_from(const json& j, DecompositionTree& tree) {
  const json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) fail("node kind must be a string");
  auto kind = node_kind_from_string(kind_j.get<std::string>());
  if (!kind) fail("unknown node kind '" + kind_j.get<std::string>() + "'");
  DecompositionNode node;
  node.kind = *kind;
  if (j.contains("children")) {
    if (!j["children"].is_array()) fail("children must be an array");
    for (const auto& c : j["children"]) node.children.push_back(node_from(c, tree));
  }
  node.params = params_from(*kind, j.contains("params") ? j["params"] : json::object());
  node.graph = graph_from_json(field(j, "graph"));
  tree.nodes.push_back(std::move(node));
  return static_cast<int>(tree.nodes.size()) - 1;
}

}  // namespace

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& p : g.pairs()) edges.push_back(json::array({p.u, p.v, p.mult}));
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

Multigraph graph_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) fail("negative vertex count");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) fail("edges must be an array");
  Multigraph g(n);
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) fail("graph edge must be [u, v, mult]");
    const int u = as_int(e[0], "u"), v = as_int(e[1], "v"), k = as_int(e[2], "mult");
    if (u < 0 || v >= n || u >= v || k < 1) fail("invalid graph edge");
    g.add_edge(u, v, k);
  }
  return g;
}

json embedding_to_json(const ImmersionEmbedding& emb) {
  json walks = json::array();
  for (const auto& w : emb.walks) {
    json walk = json::array();
    for (const auto& e : w) walk.push_back(edge_json(e));
    walks.push_back(walk);
  }
  return {{"branch", emb.branch}, {"walks", walks}};
}

ImmersionEmbedding embedding_from_json(const json& j) {
  ImmersionEmbedding emb;
  const json& branch = field(j, "branch");
  const json& walks = field(j, "walks");
  if (!branch.is_array() || !walks.is_array()) fail("branch and walks must be arrays");
  for (const auto& b : branch) emb.branch.push_back(as_int(b, "branch vertex"));
  for (const auto& w : walks) {
    if (!w.is_array()) fail("walk must be an array");
    Walk walk;
    for (const auto& e : w) walk.push_back(edge_from(e));
    emb.walks.push_back(std::move(walk));
  }
  return emb;
}

json tree_to_json(const DecompositionTree& tree) { return node_json(tree, tree.root); }

DecompositionTree tree_from_json(const json& j) {
  DecompositionTree tree;
  tree.root = node_from(j, tree);
  return tree;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

}  // namespace k33
