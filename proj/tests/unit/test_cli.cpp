#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "k33/edge_list.hpp"
#include "k33/enumeration.hpp"
#include "k33/immersion.hpp"
#include "k33/named_graphs.hpp"
#include "k33/serialization.hpp"
#include "k33/structure.hpp"

using namespace k33;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / "k33-cli-test") {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string graph(const std::string& name, const Multigraph& g) const {
    return write(name, format_edge_list(g));
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check writes certificates") {
  Scratch s;
  const auto w5 = s.graph("w5.edges", named::wheel(5));
  auto r = run_cli({"check", w5});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "K33-FREE " + w5 + ".tree.json\n");
  const auto tree = tree_from_json(parse_json(slurp(w5 + ".tree.json")));
  CHECK(validate_tree(tree, named::wheel(5)));

  const auto pet = s.graph("petersen.edges", named::petersen());
  r = run_cli({"check", pet});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "K33-IMMERSION " + pet + ".witness.json\n");
  const auto emb = embedding_from_json(parse_json(slurp(pet + ".witness.json")));
  CHECK(verify_embedding(named::complete_bipartite(3, 3), named::petersen(), emb));

  r = run_cli({"check", "--json", "--out", s.path("t.json"), w5});
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "K33-FREE");
  CHECK(fs::exists(s.path("t.json")));
}

TEST_CASE("immerse and verify") {
  Scratch s;
  const auto pet = s.graph("p.edges", named::petersen());
  const auto k33 = s.graph("k33.edges", named::complete_bipartite(3, 3));
  const auto w5 = s.graph("w5.edges", named::wheel(5));
  auto r = run_cli({"immerse", pet, "--out", s.path("emb.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "IMMERSION " + s.path("emb.json") + "\n");
  r = run_cli({"verify", k33, pet, s.path("emb.json")});
  CHECK(r.out == "VALID\n");
  r = run_cli({"verify", k33, w5, s.path("emb.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "INVALID\n");
  r = run_cli({"immerse", k33, w5});
  CHECK(r.out == "NO-IMMERSION\n");
  r = run_cli({"immerse", pet});
  CHECK(r.out.rfind("IMMERSION\n{", 0) == 0);
}

TEST_CASE("classify and decompose") {
  Scratch s;
  const auto prism = s.graph("prism.edges", named::prism());
  auto r = run_cli({"classify", prism});
  CHECK(r.out.find("internally4ec=no") != std::string::npos);
  r = run_cli({"classify", "--json", prism});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lambda"] == 3);
  CHECK(j["internally4ec"] == false);

  r = run_cli({"decompose", prism});
  CHECK(r.code == 0);
  CHECK(validate_tree(tree_from_json(parse_json(r.out)), named::prism()));
  const auto pet = s.graph("p.edges", named::petersen());
  r = run_cli({"decompose", pet});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("planar_code input") {
  Scratch s;
  const auto pc = s.write("k4.pc", write_planar_code({named::complete(4)}));
  auto r = run_cli({"classify", "--format", "planar_code", pc});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda=3") == 0);
  const auto bad = s.write("bad.pc", std::string("\x04\x02\x03", 3));
  r = run_cli({"check", "--format", "planar_code", bad});
  CHECK(r.code == cli::kExitFormat);
  CHECK(r.err == "error: " + bad + ": byte 3: truncated record\n");
}

TEST_CASE("usage and format errors") {
  Scratch s;
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"check", "--bogus", "x"}).code == cli::kExitUsage);
  auto r = run_cli({"check", s.path("missing.edges")});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("cannot read") != std::string::npos);
  const auto bad = s.write("bad.edges", "3 2\n0 1 1\n1 0 1\n");
  r = run_cli({"check", bad});
  CHECK(r.code == cli::kExitFormat);
  CHECK(r.err.rfind("error: " + bad + ": line 3", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  const auto badjson = s.write("bad.json", "{\"branch\": [0,");
  const auto k33 = s.graph("k33.edges", named::complete_bipartite(3, 3));
  r = run_cli({"verify", k33, k33, badjson});
  CHECK(r.code == cli::kExitFormat);
  CHECK(r.err.find(": byte ") != std::string::npos);
  CHECK(run_cli({"enumerate", "--n", "8", "--mode", "lemma7"}).code == cli::kExitUsage);
  CHECK(run_cli({"enumerate", "--n", "6", "--mode", "lemma9"}).code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("enumerate writes records and a summary") {
  Scratch s;
  auto r = run_cli({"enumerate", "--n", "6", "--mode", "lemma8", "--out", s.path("out"),
                    "--deterministic", "--workers", "2"});
  REQUIRE(r.code == 0);
  const auto records = slurp(s.path("out/obstructions-n6-lemma8.txt"));
  CHECK(std::count(records.begin(), records.end(), '\n') == 1);
  const auto summary = nlohmann::json::parse(slurp(s.path("out/summary-n6-lemma8.json")));
  CHECK(summary["obstructions"] == 1);
  CHECK(summary["counts"]["6"] == 1);
  CHECK_FALSE(summary.contains("runtime_seconds"));
  CHECK(fs::exists(s.path("out/checkpoints")));

  const auto catalog = s.write("p6.pc", write_planar_code(generate_base_graphs(6)));
  r = run_cli({"enumerate", "--n", "6", "--mode", "lemma8", "--catalog", catalog, "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["obstructions"] == 1);
  CHECK(nlohmann::json::parse(r.out).contains("runtime_seconds"));
}
