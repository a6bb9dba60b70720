#pragma once

#include "k33/multigraph.hpp"

namespace k33::named {

Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph cycle(int n);
Multigraph path(int n);
/// Hub 0 joined to the rim cycle 1..spokes.
Multigraph wheel(int spokes);
/// K_{2,4} with the edges at vertex 0 doubled; vertex 1 is the simple hub.
Multigraph k24_prime();
/// Two triangles 0-1-2, 3-4-5 joined by the matching i -- i+3.
Multigraph prism();
Multigraph petersen();
/// K5 plus vertex 5 joined to 0, 1, 2.
Multigraph k5_plus_vertex();
/// Two vertices joined by `mult` parallel edges.
Multigraph dipole(int mult);

}  // namespace k33::named
