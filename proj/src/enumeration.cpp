#include "k33/enumeration.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "k33/connectivity.hpp"
#include "k33/edge_list.hpp"
#include "k33/immersion.hpp"
#include "k33/named_graphs.hpp"
#include "k33/planarity.hpp"

namespace k33 {
namespace {

std::string vector_key(const Multiplicities& x) { return std::string(x.begin(), x.end()); }

bool immersion_free(const Multigraph& g) {
  static const Multigraph k33 = named::complete_bipartite(3, 3);
  return !find_immersion(k33, g).has_value();
}

// Lattice search for minimal target vectors. Each step picks a violated
// separation (or the 3-regularity violation) and branches over the pairs
// whose increment can repair it; every minimal solution above the current
// vector is reachable this way.
class Augmenter {
 public:
  Augmenter(const Multigraph& base, int cap) : base_(base), pairs_(base.pairs()), cap_(cap) {}

  std::vector<Multiplicities> run() {
    Multiplicities start(pairs_.size(), 1);
    visit(start);
    std::vector<std::pair<CanonicalKey, Multiplicities>> sorted(found_.begin(), found_.end());
    std::vector<Multiplicities> out;
    for (auto& [key, x] : sorted) out.push_back(std::move(x));
    return out;
  }

 private:
  void visit(Multiplicities& x) {
    if (!seen_.insert(vector_key(x)).second) return;
    const Multigraph g = with_multiplicities(base_, x);
    auto choices = repairs(g, x);
    if (!choices) {
      if (is_minimal(x)) found_.emplace(canonical_key(g), x);
      return;
    }
    for (int i : *choices) {
      ++x[i];
      visit(x);
      --x[i];
    }
  }

  // Pairs worth incrementing, or nullopt when x already meets the target.
  std::optional<std::vector<int>> repairs(const Multigraph& g, const Multiplicities& x) const {
    const int n = g.num_vertices();
    std::optional<std::vector<int>> best;
    for (const auto& sep : enumerate_separations(g, 4, 1, 1)) {
      const int small = static_cast<int>(std::min(sep.side_a.size(), sep.side_b.size()));
      if (acceptable_side(sep.order(), small)) continue;
      std::vector<char> in_a(n, 0);
      for (int v : sep.side_a) in_a[v] = 1;
      std::vector<int> choice;
      for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (in_a[pairs_[i].u] != in_a[pairs_[i].v] && x[i] < cap_) choice.push_back(static_cast<int>(i));
      if (!best || choice.size() < best->size()) best = std::move(choice);
      if (best->empty()) break;
    }
    if (best) return best;
    if (g.is_regular(3)) {
      std::vector<int> all;
      for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (x[i] < cap_) all.push_back(static_cast<int>(i));
      return all;
    }
    return std::nullopt;
  }

  // The target is closed upwards, so single decrements decide minimality.
  bool is_minimal(Multiplicities& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 1) continue;
      --x[i];
      const bool still = augmentation_target(with_multiplicities(base_, x));
      ++x[i];
      if (still) return false;
    }
    return true;
  }

  const Multigraph& base_;
  std::vector<EdgePair> pairs_;
  int cap_;
  std::unordered_set<std::string> seen_;
  std::map<CanonicalKey, Multiplicities> found_;
};

struct BaseOutcome {
  std::vector<ObstructionRecord> records;
  std::uint64_t minimal = 0;
  std::uint64_t closure = 0;
};

BaseOutcome process_base(const Multigraph& base, const SearchOptions& options) {
  const int cap = multiplicity_cap(options.mode);
  BaseOutcome out;
  std::map<CanonicalKey, ObstructionRecord> found;
  std::unordered_set<std::string> visited;
  std::vector<Multiplicities> frontier;
  for (auto& x : augment_multiplicities(base, cap)) {
    ++out.minimal;
    const Multigraph g = with_multiplicities(base, x);
    if (!immersion_free(g)) continue;
    ObstructionRecord r = make_record(g, true);
    found.emplace(r.key, std::move(r));
    visited.insert(vector_key(x));
    frontier.push_back(std::move(x));
  }
  // Upward closure: increments keep the target, so only freeness is checked.
  while (options.closure && !frontier.empty()) {
    Multiplicities x = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] >= cap) continue;
      ++x[i];
      if (visited.insert(vector_key(x)).second) {
        const Multigraph g = with_multiplicities(base, x);
        if (immersion_free(g)) {
          ++out.closure;
          ObstructionRecord r = make_record(g, false);
          found.emplace(r.key, std::move(r));
          frontier.push_back(x);
        }
      }
      --x[i];
    }
  }
  for (auto& [key, r] : found)
    if (options.mode == Mode::lemma7 || lemma8_filter(r.graph)) out.records.push_back(std::move(r));
  return out;
}

std::uint64_t fingerprint(const std::vector<Multigraph>& bases) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& b : bases)
    for (unsigned char c : canonical_key(b).bytes + '|') h = (h ^ c) * 1099511628211ull;
  return h;
}

// Per-shard checkpoint: a header line, then for each finished base a line
// `base <index> <count>` followed by its records.
class Checkpoint {
 public:
  Checkpoint(const std::filesystem::path& path, const std::string& header)
      : path_(path), header_(header) {}

  std::map<std::size_t, std::vector<ObstructionRecord>> load() const {
    std::map<std::size_t, std::vector<ObstructionRecord>> done;
    std::ifstream in(path_);
    std::string line;
    if (!in || !std::getline(in, line) || line != header_) return done;
    while (std::getline(in, line)) {
      std::istringstream head(line);
      std::string tag;
      std::size_t index = 0, count = 0;
      if (!(head >> tag >> index >> count) || tag != "base") break;
      std::vector<ObstructionRecord> recs;
      for (std::size_t i = 0; i < count && std::getline(in, line); ++i) recs.push_back(parse_record(line));
      if (recs.size() != count) break;
      done[index] = std::move(recs);
    }
    return done;
  }

  void start(const std::map<std::size_t, std::vector<ObstructionRecord>>& done) {
    out_.open(path_, std::ios::trunc);
    out_ << header_ << '\n';
    for (const auto& [index, recs] : done) append(index, recs);
  }

  void append(std::size_t index, const std::vector<ObstructionRecord>& recs) {
    out_ << "base " << index << ' ' << recs.size() << '\n';
    for (const auto& r : recs) out_ << format_record(r) << '\n';
    out_.flush();
  }

 private:
  std::filesystem::path path_;
  std::string header_;
  std::ofstream out_;
};

}  // namespace

std::vector<Multigraph> generate_base_graphs(int n) {
  if (n < 1 || n > 7) throw GraphError("generate_base_graphs: n must be between 1 and 7");
  // Planar graphs level by level (planarity is closed under edge deletion).
  std::map<CanonicalKey, Multigraph> level{{canonical_key(Multigraph(n)), Multigraph(n)}};
  std::vector<std::pair<CanonicalKey, Multigraph>> all;
  while (!level.empty()) {
    std::map<CanonicalKey, Multigraph> next;
    for (const auto& [key, g] : level) {
      if (is_2_vertex_connected(g)) all.emplace_back(key, g);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.multiplicity(u, v)) continue;
          Multigraph h = g;
          h.add_edge(u, v);
          if (!is_planar(h)) continue;
          CanonicalForm cf = canonical_form(h);
          next.emplace(std::move(cf.key), std::move(cf.graph));
        }
    }
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Multigraph> out;
  for (auto& [key, g] : all) out.push_back(std::move(g));
  return out;
}

const char* to_string(Mode mode) { return mode == Mode::lemma7 ? "lemma7" : "lemma8"; }

std::optional<Mode> mode_from_string(const std::string& name) {
  if (name == "lemma7") return Mode::lemma7;
  if (name == "lemma8") return Mode::lemma8;
  return std::nullopt;
}

int multiplicity_cap(Mode mode) { return mode == Mode::lemma7 ? 3 : 4; }

bool augmentation_target(const Multigraph& g) { return is_weakly_5ec(g) && !g.is_regular(3); }

bool lemma8_filter(const Multigraph& g) {
  if (!is_2_vertex_connected(g)) return false;
  const int n = g.num_vertices();
  bool pair55 = false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 4) return false;
    if (g.degree(v) != 5) continue;
    for (int w : g.neighbors(v)) pair55 = pair55 || g.degree(w) >= 5;
  }
  return pair55;
}

Multigraph with_multiplicities(const Multigraph& base, const Multiplicities& mult) {
  auto pairs = base.pairs();
  if (pairs.size() != mult.size()) throw GraphError("multiplicity vector length mismatch");
  Multigraph g(base.num_vertices());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mult[i] < 1) throw GraphError("multiplicities must be positive");
    g.add_edge(pairs[i].u, pairs[i].v, mult[i]);
  }
  return g;
}

std::vector<Multiplicities> augment_multiplicities(const Multigraph& base, int cap) {
  if (cap < 1) throw GraphError("augment: cap must be positive");
  if (!base.is_simple()) throw GraphError("augment: base graph must be simple");
  return Augmenter(base, cap).run();
}

ObstructionRecord make_record(const Multigraph& g, bool minimal) {
  CanonicalForm cf = canonical_form(g);
  ObstructionRecord r;
  r.key = std::move(cf.key);
  r.graph = std::move(cf.graph);
  r.profile.assign(std::max(0, g.max_multiplicity()), 0);
  for (const auto& p : g.pairs()) ++r.profile[p.mult - 1];
  r.minimal = minimal;
  r.weakly_5ec = is_weakly_5ec(g);
  r.in_P = is_in_P(g);
  r.k33_free = immersion_free(g);
  return r;
}

std::string format_record(const ObstructionRecord& r) {
  std::ostringstream os;
  os << r.key.hex() << " n=" << r.graph.num_vertices() << " m=" << r.graph.num_edges()
     << " profile=";
  for (std::size_t i = 0; i < r.profile.size(); ++i) os << (i ? "," : "") << r.profile[i];
  os << " edges=";
  bool first = true;
  for (const auto& p : r.graph.pairs()) {
    os << (first ? "" : ",") << p.u << '-' << p.v << ':' << p.mult;
    first = false;
  }
  os << " flags=" << (r.minimal ? "minimal" : "closure") << ','
     << (r.weakly_5ec ? "weakly5ec" : "notweakly5ec") << ',' << (r.in_P ? "inP" : "notP") << ','
     << (r.k33_free ? "k33free" : "k33");
  return os.str();
}

ObstructionRecord parse_record(const std::string& line) {
  std::istringstream in(line);
  std::string hex, n_f, m_f, profile_f, edges_f, flags_f;
  if (!(in >> hex >> n_f >> m_f >> profile_f >> edges_f >> flags_f))
    throw FormatError("record has too few fields", 0);
  auto value = [](const std::string& field, const std::string& name) {
    if (field.rfind(name + "=", 0) != 0) throw FormatError("expected field " + name, 0);
    return field.substr(name.size() + 1);
  };
  const int n = std::stoi(value(n_f, "n"));
  Multigraph g(n);
  std::istringstream edges(value(edges_f, "edges"));
  std::string item;
  while (std::getline(edges, item, ',')) {
    int u = 0, v = 0, k = 0;
    char dash = 0, colon = 0;
    std::istringstream e(item);
    if (!(e >> u >> dash >> v >> colon >> k) || dash != '-' || colon != ':')
      throw FormatError("malformed edge '" + item + "'", 0);
    g.add_edge(u, v, k);
  }
  ObstructionRecord r;
  r.key = canonical_key(g);
  if (r.key.hex() != hex) throw FormatError("record key does not match its graph", 0);
  r.graph = canonical_form(g).graph;
  if (!(r.graph == g)) throw FormatError("record graph is not in canonical labelling", 0);
  std::istringstream prof(value(profile_f, "profile"));
  while (std::getline(prof, item, ',')) r.profile.push_back(std::stoi(item));
  const std::string flags = value(flags_f, "flags");
  r.minimal = flags.find("minimal") != std::string::npos;
  r.weakly_5ec = flags.find("notweakly5ec") == std::string::npos;
  r.in_P = flags.find("notP") == std::string::npos;
  r.k33_free = flags.find("k33free") != std::string::npos;
  return r;
}

SearchResult search_obstructions(const std::vector<Multigraph>& bases,
                                 const SearchOptions& options) {
  const int workers = std::max(1, options.workers);
  std::vector<std::vector<ObstructionRecord>> per_base(bases.size());
  std::vector<SearchStats> shard_stats(workers);
  std::string header;
  if (options.checkpoint_dir) {
    std::filesystem::create_directories(*options.checkpoint_dir);
    std::ostringstream h;
    h << "# k33 checkpoint mode=" << to_string(options.mode) << " bases=" << bases.size()
      << " closure=" << options.closure << " fingerprint=" << std::hex << fingerprint(bases);
    header = h.str();
  }
  std::mutex error_lock;
  std::exception_ptr error;
  auto shard = [&](int s) {
    try {
      std::optional<Checkpoint> ckpt;
      std::map<std::size_t, std::vector<ObstructionRecord>> done;
      if (options.checkpoint_dir) {
        auto name = "shard-" + std::to_string(s) + "-of-" + std::to_string(workers) + ".ckpt";
        ckpt.emplace(std::filesystem::path(*options.checkpoint_dir) / name, header);
        done = ckpt->load();
        ckpt->start(done);
      }
      for (std::size_t i = s; i < bases.size(); i += workers) {
        ++shard_stats[s].bases;
        if (auto it = done.find(i); it != done.end()) {
          per_base[i] = std::move(it->second);
          ++shard_stats[s].resumed_bases;
          continue;
        }
        BaseOutcome o = process_base(bases[i], options);
        shard_stats[s].minimal_augmentations += o.minimal;
        shard_stats[s].closure_graphs += o.closure;
        if (ckpt) ckpt->append(i, o.records);
        per_base[i] = std::move(o.records);
      }
    } catch (...) {
      std::lock_guard<std::mutex> guard(error_lock);
      if (!error) error = std::current_exception();
    }
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < workers; ++s) pool.emplace_back(shard, s);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SearchResult result;
  for (const auto& s : shard_stats) {
    result.stats.bases += s.bases;
    result.stats.minimal_augmentations += s.minimal_augmentations;
    result.stats.closure_graphs += s.closure_graphs;
    result.stats.resumed_bases += s.resumed_bases;
  }
  for (auto& recs : per_base)
    for (auto& r : recs) result.records.push_back(std::move(r));
  std::sort(result.records.begin(), result.records.end(),
            [](const auto& a, const auto& b) { return a.key < b.key; });
  result.records.erase(std::unique(result.records.begin(), result.records.end(),
                                   [](const auto& a, const auto& b) { return a.key == b.key; }),
                       result.records.end());
  return result;
}

LemmaChecks validate_structural_lemmas(const ObstructionRecord& record, bool previous_layer_empty) {
  const Multigraph& g = record.graph;
  LemmaChecks c;
  c.two_connected = is_2_vertex_connected(g);
  c.multiplicity_at_most_3 = g.max_multiplicity() <= 3;
  if (g.num_vertices() >= 10 && previous_layer_empty) {
    bool spread = true, no4 = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
      no4 = no4 && g.degree(v) != 4;
      for (int w : g.neighbors(v)) spread = spread && 2 * g.multiplicity(v, w) < g.degree(v);
    }
    c.three_distinct_neighbours = spread;
    c.no_degree_4 = no4;
  }
  return c;
}

std::vector<ObstructionRecord> edge_minimal_layer(const std::vector<ObstructionRecord>& records) {
  std::map<int, int> fewest;
  for (const auto& r : records) {
    auto [it, fresh] = fewest.emplace(r.graph.num_vertices(), r.graph.num_edges());
    if (!fresh) it->second = std::min(it->second, r.graph.num_edges());
  }
  std::vector<ObstructionRecord> out;
  for (const auto& r : records)
    if (r.graph.num_edges() == fewest[r.graph.num_vertices()]) out.push_back(r);
  return out;
}

}  // namespace k33
