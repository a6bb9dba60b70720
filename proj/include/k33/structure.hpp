#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "k33/immersion.hpp"
#include "k33/multigraph.hpp"
#include "k33/surgery.hpp"

namespace k33 {

/// decompose() was handed a graph that immerses K3,3.
class K33Present : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A produced operand broke an invariant the construction guarantees.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class NodeKind {
  leaf_c5,
  leaf_p,
  leaf_small,
  union_of,
  subdivision,
  pendant,
  join3,
  pinch,
  special4_join,
};

const char* to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(const std::string& name);
bool is_leaf(NodeKind kind);

// Parameters refer to the children's graphs.
struct SubdivisionParams {
  EdgeRef edge;
};
struct PendantParams {
  int vertex = -1;
  int mult = 1;
};
struct Join3Params {
  int v1 = -1;
  int v2 = -1;
  EdgeBijection pi;
};
struct PinchParams {
  int u = -1;
  int v = -1;
};
struct Special4JoinParams {
  int v1 = -1;
  int w1 = -1;
  int v2 = -1;
  int w2 = -1;
  EdgeBijection pi;
};
using NodeParams = std::variant<std::monostate, SubdivisionParams, PendantParams, Join3Params,
                                PinchParams, Special4JoinParams>;

struct DecompositionNode {
  NodeKind kind = NodeKind::leaf_small;
  /// The graph this node stands for: the leaf itself, or the result of
  /// replaying the node's operation on its children.
  Multigraph graph;
  std::vector<int> children;
  NodeParams params;
};

/// Nodes are stored children-first; `root` is the last node.
struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
  int root = -1;

  const DecompositionNode& root_node() const { return nodes.at(root); }
  std::vector<int> leaves() const;
};

struct Decomposition {
  DecompositionTree tree;
  /// vertex_map[v] is v's id in recompose(tree).
  std::vector<int> vertex_map;
};

/// Throws K33Present when a leaf immerses K3,3 (equivalently, when g does).
Decomposition decompose(const Multigraph& g);

/// The decomposition without leaf certification; never throws K33Present.
Decomposition decompose_unchecked(const Multigraph& g);

/// Replays every operation bottom-up from the leaf graphs.
/// Throws GraphError on malformed parameters.
Multigraph recompose(const DecompositionTree& tree);

/// Leaf classifier for the node's kind (non-leaves return false).
bool leaf_holds(const DecompositionNode& node);

/// The first defect found, or nullopt for a valid tree of a graph isomorphic to g.
std::optional<std::string> find_tree_defect(const DecompositionTree& tree, const Multigraph& g);
bool validate_tree(const DecompositionTree& tree, const Multigraph& g);

struct StructuralResult {
  bool k33_free = false;
  std::optional<DecompositionTree> tree;
  std::optional<ImmersionEmbedding> witness;
};

StructuralResult is_k33_free_structural(const Multigraph& g);

}  // namespace k33
