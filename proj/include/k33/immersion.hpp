#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "k33/connectivity.hpp"
#include "k33/multigraph.hpp"

namespace k33 {

/// Demand endpoint: either a plain vertex, or a vertex whose path must leave
/// through a specific edge copy (routing then continues at the far end).
struct Terminal {
  int vertex = -1;
  std::optional<EdgeRef> edge;

  static Terminal at(int v) { return {v, std::nullopt}; }
  static Terminal through(const EdgeRef& e, int end_vertex) { return {end_vertex, e}; }
};

struct Demand {
  Terminal left;
  Terminal right;
};

/// Edge copies in traversal order from the left terminal to the right one.
using Walk = std::vector<EdgeRef>;

struct RouteOptions {
  /// Degree-budget and cut-condition pruning. Never changes the answer.
  bool cut_pruning = true;
  /// Remember refuted (residual, pending demands) states.
  bool memoize = true;
};

struct RouteStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t memo_hits = 0;
};

/// Pairwise edge-disjoint paths, one per demand, or nullopt if none exist.
/// The search is exhaustive, so nullopt is a proof of infeasibility.
/// Throws GraphError on malformed demands (bad forced edge, shared forced
/// edge, identical endpoints, more than 32 demands).
std::optional<std::vector<Walk>> route(const Multigraph& g, const std::vector<Demand>& demands,
                                       const RouteOptions& options = {},
                                       RouteStats* stats = nullptr);

/// Branch map plus one walk per edge copy of H, in the order of H.edges().
struct ImmersionEmbedding {
  std::vector<int> branch;
  std::vector<Walk> walks;

  bool operator==(const ImmersionEmbedding&) const = default;
};

struct ImmersionOptions {
  RouteOptions route;
  /// Enumerate unordered side pairs when H is K3,3.
  bool k33_symmetry = true;
};

std::optional<ImmersionEmbedding> find_immersion(const Multigraph& h, const Multigraph& g,
                                                 const ImmersionOptions& options = {});

/// Injective branch map, walks that are paths between the right branch
/// vertices, and no edge copy used twice.
bool verify_embedding(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& emb);

/// Same answer as find_immersion(K3,3, g), with exact shortcuts for small,
/// cubic, and 3-edge-connected non-planar graphs.
bool contains_k33(const Multigraph& g);

enum class Side { a, b };

/// A vertex of the chosen side reachable from all four cut edges by
/// edge-disjoint paths; the smallest such vertex is returned.
std::optional<int> find_s_vertex(const Multigraph& g, const Separation& sep, Side side);
bool has_s_vertex(const Multigraph& g, const Separation& sep, Side side);

/// Cut edges (by index into sep.cut) joined to u and to v respectively.
struct SpanPairing {
  std::array<int, 2> to_u;
  std::array<int, 2> to_v;
};

/// Distinct u, v in the side with edge-disjoint paths from the to_u edges to
/// u, from the to_v edges to v, and from u to v.
bool has_span(const Multigraph& g, const Separation& sep, Side side, const SpanPairing& pairing);

}  // namespace k33
