#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "k33/multigraph.hpp"

namespace k33 {

/// Isomorphism-invariant byte string of a multigraph.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalForm {
  CanonicalKey key;
  /// labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
  /// The input relabelled by `labeling`.
  Multigraph graph;
};

/// Exact canonical labelling by colour refinement followed by an
/// individualisation search with automorphism pruning.
CanonicalForm canonical_form(const Multigraph& g);
CanonicalKey canonical_key(const Multigraph& g);

bool is_isomorphic(const Multigraph& a, const Multigraph& b);
/// A vertex map a -> b that preserves all multiplicities, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Multigraph& a, const Multigraph& b);

}  // namespace k33
