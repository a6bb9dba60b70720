#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "k33/canonical.hpp"
#include "k33/multigraph.hpp"

namespace k33 {

// planar_code: optional header ">>planar_code<<" (or ">>planar_code le<<" /
// ">>planar_code be<<"), then per graph the vertex count followed by a
// 0-terminated, 1-based neighbour list per vertex in rotation order. A leading
// 0 byte switches the record to 2-byte entries, which is accepted only when
// the header names the byte order. Throws FormatError with a byte offset.
std::vector<Multigraph> read_planar_code(std::istream& in);
std::vector<Multigraph> parse_planar_code(const std::string& bytes);

/// Writes simple planar graphs with a plain header; rotations come from a
/// planar embedding. Throws GraphError for non-simple, non-planar or
/// too-large graphs.
std::string write_planar_code(const std::vector<Multigraph>& graphs);

/// All planar 2-connected simple graphs on n vertices up to isomorphism,
/// sorted by canonical key. Throws GraphError unless 1 <= n <= 7.
std::vector<Multigraph> generate_base_graphs(int n);

enum class Mode { lemma7, lemma8 };

const char* to_string(Mode mode);
std::optional<Mode> mode_from_string(const std::string& name);
int multiplicity_cap(Mode mode);

/// Weakly 5-edge-connected and not 3-regular.
bool augmentation_target(const Multigraph& g);

/// 2-connected, no vertex of degree 4, and a degree-5 vertex adjacent to a
/// vertex of degree at least 5.
bool lemma8_filter(const Multigraph& g);

/// Multiplicity vector over base.pairs() order.
using Multiplicities = std::vector<int>;

Multigraph with_multiplicities(const Multigraph& base, const Multiplicities& mult);

/// Componentwise-minimal vectors in [1, cap]^E whose graph satisfies
/// augmentation_target, one per isomorphism class, sorted by canonical key.
std::vector<Multiplicities> augment_multiplicities(const Multigraph& base, int cap);

struct ObstructionRecord {
  CanonicalKey key;
  /// The graph in canonical labelling.
  Multigraph graph;
  /// Count of pairs with multiplicity 1, 2, ... up to the largest one.
  std::vector<int> profile;
  bool minimal = false;
  bool weakly_5ec = false;
  bool in_P = false;
  bool k33_free = false;
};

ObstructionRecord make_record(const Multigraph& g, bool minimal);

/// `<hex> n=<n> m=<m> profile=<c1,c2,..> edges=<u-v:k,..> flags=<..>`
std::string format_record(const ObstructionRecord& r);
/// Inverse of format_record; recomputes the key and checks it matches.
ObstructionRecord parse_record(const std::string& line);

struct SearchOptions {
  Mode mode = Mode::lemma7;
  int workers = 1;
  /// Directory for per-shard checkpoint files; resumes from existing ones.
  std::optional<std::string> checkpoint_dir;
  /// Search upward from immersion-free minimal graphs for further ones.
  bool closure = true;
};

struct SearchStats {
  std::uint64_t bases = 0;
  std::uint64_t minimal_augmentations = 0;
  std::uint64_t closure_graphs = 0;
  std::uint64_t resumed_bases = 0;
};

struct SearchResult {
  std::vector<ObstructionRecord> records;
  SearchStats stats;
};

/// Records are sorted by key and duplicate-free; independent of `workers`.
SearchResult search_obstructions(const std::vector<Multigraph>& bases,
                                 const SearchOptions& options);

/// Property checks on a record from an edge-minimal layer. The neighbourhood
/// and degree-4 checks need n >= 10 and an empty (n-1) layer, and are skipped
/// (left unset) otherwise.
struct LemmaChecks {
  bool two_connected = false;
  bool multiplicity_at_most_3 = false;
  std::optional<bool> three_distinct_neighbours;
  std::optional<bool> no_degree_4;

  bool ok() const {
    return two_connected && multiplicity_at_most_3 && three_distinct_neighbours.value_or(true) &&
           no_degree_4.value_or(true);
  }
};

LemmaChecks validate_structural_lemmas(const ObstructionRecord& record,
                                       bool previous_layer_empty = false);

/// Records with the fewest edges for each vertex count.
std::vector<ObstructionRecord> edge_minimal_layer(const std::vector<ObstructionRecord>& records);

}  // namespace k33
