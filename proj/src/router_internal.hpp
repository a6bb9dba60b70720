#pragma once

#include <vector>

#include "k33/immersion.hpp"

namespace k33::detail {

/// Small separations of the unconsumed graph, reused across route() calls on
/// the same graph (only consulted above the full-scan size limit).
struct CutCache {
  std::vector<std::vector<char>> in_a;

  static CutCache build(const Multigraph& g);
};

std::optional<std::vector<Walk>> route_cached(const Multigraph& g,
                                              const std::vector<Demand>& demands,
                                              const RouteOptions& options, RouteStats* stats,
                                              const CutCache* cache);

}  // namespace k33::detail
