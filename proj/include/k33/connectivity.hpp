#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k33/multigraph.hpp"

namespace k33 {

/// Bipartition (A, B) of the vertex set with its crossing edge copies.
struct Separation {
  std::vector<int> side_a;  // sorted
  std::vector<int> side_b;  // sorted
  std::vector<EdgeRef> cut;

  int order() const { return static_cast<int>(cut.size()); }
  Separation swapped() const { return {side_b, side_a, cut}; }
  bool operator==(const Separation&) const = default;
};

/// Builds the separation with the given A side; B is the complement.
Separation make_separation(const Multigraph& g, std::vector<int> side_a);

/// True if a side of `size` vertices is acceptable for a cut of `order`.
constexpr bool acceptable_side(int order, int size) {
  return order >= 5 || (order == 4 && size <= 2) || (order == 3 && size == 1);
}

struct FlowResult {
  int value = 0;
  /// A minimum cut with s on side A (A = residual reachability from s).
  Separation cut;
};

/// Maximum number of pairwise edge-disjoint s-t paths.
FlowResult max_flow(const Multigraph& g, int s, int t);

int edge_connectivity(const Multigraph& g);

enum class CutStrategy {
  automatic,  // scan up to kScanLimit vertices, branching above
  scan,       // every bipartition, Gray-code order
  branching,  // assign vertices one at a time, prune on partial cut order
};
inline constexpr int kScanLimit = 24;

/// Every separation of order <= max_order with |A| >= min_a and |B| >= min_b
/// (each bipartition once, oriented so A holds vertex 0 when both orientations
/// qualify), sorted by the vertex list of A.
std::vector<Separation> enumerate_separations(const Multigraph& g, int max_order, int min_a,
                                              int min_b,
                                              CutStrategy strategy = CutStrategy::automatic);

struct TwoConnectivity {
  bool connected = true;
  /// Smallest cut vertex; unset when 2-connected or when g is disconnected.
  std::optional<int> cut_vertex;
};

/// Graphs with fewer than three vertices count as 2-connected when connected.
TwoConnectivity two_vertex_connectivity(const Multigraph& g);
bool is_2_vertex_connected(const Multigraph& g);

struct ConnectivityReport {
  /// Global edge connectivity; -1 when the graph has fewer than two vertices.
  int lambda = -1;
  bool is_3ec = true;
  bool is_internally_4ec = true;
  bool is_weakly_5ec = true;
  bool is_2_vertex_connected = true;
  std::optional<Separation> witness_3ec;
  std::optional<Separation> witness_internally_4ec;
  std::optional<Separation> witness_weakly_5ec;
  std::optional<int> cut_vertex;
};

ConnectivityReport classify(const Multigraph& g);

/// Cheap predicates for the enumeration hot loop.
bool is_internally_4ec(const Multigraph& g);
bool is_weakly_5ec(const Multigraph& g);

/// Line-oriented report:
///   lambda=<int|none>
///   3ec=yes|no [witness=<A vertices>]
///   internally4ec=...
///   weakly5ec=...
///   2connected=yes|no [cutvertex=<v>]
std::string format_report(const ConnectivityReport& r);

}  // namespace k33
