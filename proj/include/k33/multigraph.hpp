#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k33 {

/// Raised when an operation's shape precondition does not hold.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One parallel copy of an unordered vertex pair. `u < v` always holds for
/// references produced by the library; `copy` ranges over 0..mult(u,v)-1.
struct EdgeRef {
  int u = 0;
  int v = 0;
  int copy = 0;

  static EdgeRef make(int a, int b, int copy = 0) {
    return a < b ? EdgeRef{a, b, copy} : EdgeRef{b, a, copy};
  }
  bool incident(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }

  auto operator<=>(const EdgeRef&) const = default;
};

/// A vertex pair together with its multiplicity.
struct EdgePair {
  int u = 0;
  int v = 0;
  int mult = 0;

  auto operator<=>(const EdgePair&) const = default;
};

/// Loop-free undirected multigraph on the dense vertex set 0..n-1.
///
/// Multiplicities live in a dense n*n table; every graph in this project is
/// small enough that the quadratic footprint is irrelevant and O(1) pair
/// lookups dominate the routing and cut kernels.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);

  /// Builds a graph from (u, v, mult) triples; repeated pairs accumulate.
  static Multigraph from_pairs(int n, const std::vector<EdgePair>& pairs);
  /// Builds a simple-edge graph; repeated pairs become parallel copies.
  static Multigraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  int multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return mult_[index(u, v)];
  }
  int degree(int v) const {
    check_vertex(v);
    return degree_[v];
  }

  void add_edge(int u, int v, int count = 1);
  void remove_edge(int u, int v, int count = 1);
  void set_multiplicity(int u, int v, int mult);
  /// Appends an isolated vertex and returns its id.
  int add_vertex();

  bool has_edge(const EdgeRef& e) const;

  /// Distinct neighbours in increasing order.
  std::vector<int> neighbors(int v) const;
  /// Every copy incident with `v`, ordered by neighbour then copy.
  std::vector<EdgeRef> incident_edges(int v) const;
  /// Every pair with positive multiplicity, lexicographically sorted.
  std::vector<EdgePair> pairs() const;
  /// Every edge copy, lexicographically sorted.
  std::vector<EdgeRef> edges() const;

  int max_multiplicity() const;
  bool is_regular(int d) const;
  bool is_simple() const { return max_multiplicity() <= 1; }

  /// Subgraph induced by `vertices`, relabelled in the given order.
  Multigraph induced(const std::vector<int>& vertices) const;
  /// Applies the relabelling old id -> perm[old id].
  Multigraph permuted(const std::vector<int>& perm) const;

  bool operator==(const Multigraph& other) const {
    return n_ == other.n_ && mult_ == other.mult_;
  }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex id out of range: " + std::to_string(v));
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<int> mult_;
  std::vector<int> degree_;
};

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

std::ostream& operator<<(std::ostream& os, const EdgeRef& e);

}  // namespace k33
