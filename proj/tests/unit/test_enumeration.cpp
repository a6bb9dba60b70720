#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "k33/canonical.hpp"
#include "k33/connectivity.hpp"
#include "k33/edge_list.hpp"
#include "k33/enumeration.hpp"
#include "k33/named_graphs.hpp"
#include "k33/planarity.hpp"
#include "oracles.hpp"

using namespace k33;

namespace {

std::string bytes(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s.push_back(static_cast<char>(x));
  return s;
}

std::size_t error_offset(const std::string& data, std::string* what = nullptr) {
  try {
    parse_planar_code(data);
  } catch (const FormatError& e) {
    if (what) *what = e.what();
    return e.offset();
  }
  return static_cast<std::size_t>(-1);
}

const std::string kK4 = bytes({4, 2, 3, 4, 0, 1, 3, 4, 0, 1, 2, 4, 0, 1, 2, 3, 0});

std::set<CanonicalKey> keys_of(const std::vector<Multigraph>& gs) {
  std::set<CanonicalKey> out;
  for (const auto& g : gs) out.insert(canonical_key(g));
  return out;
}

std::string joined(const std::vector<ObstructionRecord>& rs) {
  std::string s;
  for (const auto& r : rs) s += format_record(r) + "\n";
  return s;
}

}  // namespace

TEST_CASE("planar_code reader") {
  auto gs = parse_planar_code(">>planar_code<<" + kK4);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0] == named::complete(4));
  CHECK(parse_planar_code(kK4 + kK4).size() == 2);
  CHECK(parse_planar_code(">>planar_code<<").empty());
  CHECK(parse_planar_code("").empty());
  std::istringstream in(kK4);
  CHECK(read_planar_code(in).size() == 1);

  std::string what;
  CHECK(error_offset(kK4 + bytes({4, 2}), &what) == kK4.size() + 2);
  CHECK(what == "truncated record");
  CHECK(error_offset(bytes({3, 2, 9, 0, 1, 0, 1, 0}), &what) == 2);
  CHECK(what == "neighbor id out of range");
  CHECK(error_offset(bytes({3, 2, 0, 1, 3, 0, 0}), &what) == 0);
  CHECK(what == "asymmetric adjacency lists");
  CHECK(error_offset(bytes({2, 1, 0, 1, 0}), &what) == 1);
  CHECK(what == "self-loop in adjacency list");
  CHECK(error_offset(">>bogus<<" + kK4, &what) == 0);
  CHECK(what == "malformed header");
  CHECK(error_offset(">>planar_code" + kK4, &what) == 0);
  CHECK(error_offset(bytes({0, 0, 2, 0, 2, 0, 0, 0, 1, 0, 0})) == 0);

  // Two-byte records need a byte order.
  const std::string wide_le = bytes({0, 2, 0, 2, 0, 0, 0, 1, 0, 0, 0});
  gs = parse_planar_code(">>planar_code le<<" + wide_le);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0] == named::path(2));
  const std::string wide_be = bytes({0, 0, 2, 0, 2, 0, 0, 0, 1, 0, 0});
  CHECK(parse_planar_code(">>planar_code be<<" + wide_be)[0] == named::path(2));

  // Repeated neighbours become parallel edges.
  CHECK(parse_planar_code(bytes({2, 2, 2, 0, 1, 1, 0}))[0] == named::dipole(2));
}

TEST_CASE("planar_code writer round trip") {
  const auto bases = generate_base_graphs(6);
  const auto back = parse_planar_code(write_planar_code(bases));
  CHECK(back == bases);
  CHECK_THROWS_AS(write_planar_code({named::complete(5)}), GraphError);
  CHECK_THROWS_AS(write_planar_code({named::dipole(2)}), GraphError);
}

TEST_CASE("base graphs match brute force") {
  CHECK(generate_base_graphs(3).size() == 1);
  CHECK(generate_base_graphs(4).size() == 3);
  for (int n = 3; n <= 6; ++n) {
    const auto ours = generate_base_graphs(n);
    const auto brute = oracle::brute_base_graphs(n);
    CHECK(ours.size() == brute.size());
    CHECK(keys_of(ours) == keys_of(brute));
    for (const auto& g : ours) {
      CHECK(g.is_simple());
      CHECK(is_planar(g));
      CHECK(is_2_vertex_connected(g));
    }
  }
  CHECK_THROWS_AS(generate_base_graphs(8), GraphError);
  CHECK_THROWS_AS(generate_base_graphs(0), GraphError);
}

TEST_CASE("augmentations are minimal and hit the target") {
  for (const auto& base : {named::complete(4), named::wheel(5), named::complete_bipartite(2, 4),
                           named::prism()}) {
    for (int cap : {3, 4}) {
      for (const auto& m : augment_multiplicities(base, cap)) {
        const Multigraph g = with_multiplicities(base, m);
        CHECK(augmentation_target(g));
        for (std::size_t i = 0; i < m.size(); ++i) {
          CHECK(m[i] >= 1);
          CHECK(m[i] <= cap);
          if (m[i] == 1) continue;
          auto lower = m;
          --lower[i];
          CHECK_FALSE(augmentation_target(with_multiplicities(base, lower)));
        }
      }
    }
  }
}

TEST_CASE("augmentations equal the exhaustive minimal set") {
  // Every vector in [1, cap]^E, kept when it hits the target and no single
  // decrement does, then grouped by isomorphism class.
  auto exhaustive = [](const Multigraph& base, int cap) {
    const std::size_t m = base.pairs().size();
    std::set<CanonicalKey> out;
    Multiplicities v(m, 1);
    while (true) {
      if (augmentation_target(with_multiplicities(base, v))) {
        bool minimal = true;
        for (std::size_t i = 0; i < m && minimal; ++i) {
          if (v[i] == 1) continue;
          auto lower = v;
          --lower[i];
          minimal = !augmentation_target(with_multiplicities(base, lower));
        }
        if (minimal) out.insert(canonical_key(with_multiplicities(base, v)));
      }
      std::size_t i = 0;
      while (i < m && v[i] == cap) v[i++] = 1;
      if (i == m) break;
      ++v[i];
    }
    return out;
  };
  for (const auto& base : {named::complete(4), named::cycle(4), named::complete_bipartite(2, 4),
                           named::wheel(4)}) {
    std::set<CanonicalKey> got;
    for (const auto& m : augment_multiplicities(base, 3)) got.insert(canonical_key(with_multiplicities(base, m)));
    CHECK(got == exhaustive(base, 3));
  }
  for (const auto& m : augment_multiplicities(named::complete(4), 3))
    CHECK(*std::max_element(m.begin(), m.end()) > 1);
}

TEST_CASE("K'2,4 appears among the augmentations of K2,4") {
  const Multigraph base = named::complete_bipartite(2, 4);
  const auto target = canonical_key(named::k24_prime());
  bool found = false;
  for (const auto& m : augment_multiplicities(base, 3))
    found = found || canonical_key(with_multiplicities(base, m)) == target;
  CHECK(found);
}

TEST_CASE("record lines round trip") {
  const auto r = make_record(named::k24_prime(), true);
  CHECK(r.weakly_5ec);
  CHECK_FALSE(r.in_P);
  CHECK(r.k33_free);
  CHECK(r.profile == std::vector<int>{4, 4});
  const std::string line = format_record(r);
  CHECK(line.find(" n=6 m=12 ") != std::string::npos);
  const auto back = parse_record(line);
  CHECK(back.key == r.key);
  CHECK(back.graph == r.graph);
  CHECK(format_record(back) == line);
  CHECK_THROWS_AS(parse_record("00ff n=2"), FormatError);
}

TEST_CASE("modes and filters") {
  CHECK(mode_from_string("lemma8") == Mode::lemma8);
  CHECK_FALSE(mode_from_string("lemma9"));
  CHECK(multiplicity_cap(Mode::lemma7) == 3);
  CHECK(multiplicity_cap(Mode::lemma8) == 4);
  CHECK(augmentation_target(named::wheel(5)));
  CHECK_FALSE(augmentation_target(named::complete(4)));
  CHECK(lemma8_filter(named::wheel(5)) == false);  // rim vertices have degree 3, hub 5
  Multigraph w = named::wheel(5);
  for (int i = 1; i <= 5; ++i) w.add_edge(0, i);  // hub 10, rim 4
  CHECK_FALSE(lemma8_filter(w));
}

TEST_CASE("search is independent of worker count and resumes from checkpoints") {
  const auto bases = generate_base_graphs(6);
  SearchOptions one;
  SearchOptions many;
  many.workers = 4;
  const auto a = search_obstructions(bases, one);
  const auto b = search_obstructions(bases, many);
  CHECK(joined(a.records) == joined(b.records));
  std::set<CanonicalKey> keys;
  for (const auto& r : a.records) {
    CHECK(keys.insert(r.key).second);
    CHECK(r.weakly_5ec);
    CHECK_FALSE(r.in_P);
    CHECK(r.k33_free);
  }
  CHECK(keys.count(canonical_key(named::wheel(5))));
  CHECK(keys.count(canonical_key(named::k24_prime())));

  const auto dir = std::filesystem::temp_directory_path() / "k33-unit-ckpt";
  std::filesystem::remove_all(dir);
  SearchOptions ck = many;
  ck.checkpoint_dir = dir.string();
  const auto first = search_obstructions(bases, ck);
  CHECK(first.stats.resumed_bases == 0);
  const auto second = search_obstructions(bases, ck);
  CHECK(second.stats.resumed_bases == bases.size());
  CHECK(joined(second.records) == joined(a.records));
  // Different bases must not reuse the checkpoint.
  const auto other = search_obstructions(generate_base_graphs(5), ck);
  CHECK(other.stats.resumed_bases == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("structural property validator") {
  CHECK(validate_structural_lemmas(make_record(named::wheel(5), true)).ok());
  CHECK(validate_structural_lemmas(make_record(named::k24_prime(), true)).ok());
  Multigraph heavy = named::wheel(5);
  heavy.add_edge(0, 1, 3);
  const auto c = validate_structural_lemmas(make_record(heavy, true));
  CHECK_FALSE(c.multiplicity_at_most_3);
  CHECK_FALSE(c.ok());
  CHECK_FALSE(c.three_distinct_neighbours.has_value());
}
