#pragma once

#include <utility>
#include <vector>

#include "k33/multigraph.hpp"

namespace k33 {

/// Simple graph underlying a multigraph: one edge per adjacent pair.
struct SimpleProjection {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  /// Multiplicity of the pair each simple edge came from.
  std::vector<int> multiplicity;
};

SimpleProjection simple_projection(const Multigraph& g);

/// Planarity of the simple projection; parallel edges never matter.
bool is_planar(const Multigraph& g);

/// A rotation system (clockwise neighbour order per vertex) of a planar
/// simple projection, or an empty vector when g is not planar.
std::vector<std::vector<int>> planar_rotation_system(const Multigraph& g);

/// Internally 4-edge-connected, 3-regular and planar.
bool is_in_P(const Multigraph& g);

}  // namespace k33
