#pragma once

#include <utility>
#include <vector>

#include "k33/multigraph.hpp"

// Graph surgeries. Every operation returns a new graph; vertex ids that
// survive keep their relative order and newly created vertices are appended.

namespace k33 {

/// Pairs each edge copy at the first join vertex with one at the second.
using EdgeBijection = std::vector<std::pair<EdgeRef, EdgeRef>>;

/// Deletes the non-parallel copies `e1`, `e2` at `v` and joins their far ends.
Multigraph split_off(const Multigraph& g, const EdgeRef& e1, const EdgeRef& e2, int v);

/// Replaces `side` by a single vertex carrying all of its boundary edges.
/// Vertices outside `side` keep their order; the new vertex is the last one.
Multigraph contract_side(const Multigraph& g, const std::vector<int>& side);

Multigraph subdivide(const Multigraph& g, const EdgeRef& e);
Multigraph suppress(const Multigraph& g, int v);

Multigraph add_pendant(const Multigraph& g, int v, int mult);
Multigraph remove_pendant(const Multigraph& g, int w);

Multigraph pinch_double_edge(const Multigraph& g, int u, int v);
Multigraph unpinch(const Multigraph& g, int w);

/// Index-order bijection between the copies at `v1` in `h1` and at `v2` in `h2`.
EdgeBijection default_bijection(const Multigraph& h1, int v1, const Multigraph& h2, int v2);

/// Checks that `pi` pairs every copy at `v1` with a distinct copy at `v2`.
bool is_valid_bijection(const Multigraph& h1, int v1, const Multigraph& h2, int v2,
                        const EdgeBijection& pi);

/// Join on `v1`, `v2`: the result lists h1-v1 first, then h2-v2.
Multigraph join(const Multigraph& h1, int v1, const Multigraph& h2, int v2,
                const EdgeBijection& pi);

/// Vertex whose three copies all go to `w` (deg 3), with `w` of degree 7.
bool is_special_gadget(const Multigraph& f, int v, int w);

/// Join of f1-v1 and f2-v2 on w1, w2. `pi` pairs the four non-v copies at w1
/// with those at w2 (ids relative to f1, f2). The result lists f1-{v1,w1}
/// first, then f2-{v2,w2}.
Multigraph special_4_join(const Multigraph& f1, int v1, int w1, const Multigraph& f2, int v2,
                          int w2, const EdgeBijection& pi);

/// Copies at `w` that do not go to `skip`, ordered by neighbour then copy.
std::vector<EdgeRef> edges_at_except(const Multigraph& g, int w, int skip);

}  // namespace k33
