#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "k33/connectivity.hpp"
#include "k33/edge_list.hpp"
#include "k33/enumeration.hpp"
#include "k33/immersion.hpp"
#include "k33/named_graphs.hpp"
#include "k33/serialization.hpp"
#include "k33/structure.hpp"

namespace k33::cli {
namespace {

using nlohmann::json;

// Unreadable or unwritable files, missing inputs.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A FormatError tagged with the file it came from and the offset unit.
struct InputError : std::runtime_error {
  InputError(const std::string& path, const FormatError& e, const char* unit)
      : std::runtime_error(describe(path, e, unit)) {}

  static std::string describe(const std::string& path, const FormatError& e, const char* unit) {
    std::string msg = path + ": ";
    if (unit) msg += std::string(unit) + " " + std::to_string(e.offset()) + ": ";
    return msg + e.what();
  }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw UsageError("cannot write " + path);
}

Multigraph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  if (format == "planar_code") {
    std::vector<Multigraph> gs;
    try {
      gs = parse_planar_code(text);
    } catch (const FormatError& e) {
      throw InputError(path, e, "byte");
    }
    if (gs.size() != 1)
      throw InputError(path, FormatError("expected exactly one graph", 0), nullptr);
    return gs.front();
  }
  try {
    return parse_edge_list(text);
  } catch (const FormatError& e) {
    throw InputError(path, e, nullptr);  // the message already names the line
  }
}

json load_json(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const FormatError& e) {
    throw InputError(path, e, "byte");
  }
}

std::string stem_for(const std::string& input) { return input == "-" ? "stdin" : input; }

int default_workers() {
  if (const char* env = std::getenv("K33_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  std::string format = "edge-list";
  std::string out;
  bool json_output = false;
  bool deterministic = false;
  std::vector<std::string> files;
  int n = 0;
  std::string mode;
  std::string catalog;
  int workers = 1;
};

void add_common(CLI::App* sub, Options& o, bool with_format) {
  if (with_format)
    sub->add_option("--format", o.format, "Input graph format")
        ->check(CLI::IsMember({"edge-list", "planar_code"}));
  sub->add_flag("--json", o.json_output, "Machine-readable output");
  sub->add_flag("--deterministic", o.deterministic, "Byte-identical output across runs");
}

int cmd_check(const Options& o, std::ostream& out) {
  const std::string& input = o.files.at(0);
  const Multigraph g = load_graph(input, o.format);
  StructuralResult r = is_k33_free_structural(g);
  std::string verdict, path;
  if (r.k33_free) {
    verdict = "K33-FREE";
    path = o.out.empty() ? stem_for(input) + ".tree.json" : o.out;
    write_file(path, tree_to_json(*r.tree).dump(2) + "\n");
  } else {
    verdict = "K33-IMMERSION";
    path = o.out.empty() ? stem_for(input) + ".witness.json" : o.out;
    write_file(path, embedding_to_json(*r.witness).dump(2) + "\n");
  }
  if (o.json_output)
    out << json{{"verdict", verdict}, {"certificate", path}}.dump() << '\n';
  else
    out << verdict << ' ' << path << '\n';
  return kExitOk;
}

int cmd_immerse(const Options& o, std::ostream& out) {
  const bool default_h = o.files.size() == 1;
  const Multigraph h = default_h ? named::complete_bipartite(3, 3) : load_graph(o.files[0], o.format);
  const Multigraph g = load_graph(o.files.back(), o.format);
  auto emb = find_immersion(h, g);
  if (o.json_output) {
    json j{{"immersion", emb.has_value()}};
    if (emb) j["embedding"] = embedding_to_json(*emb);
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (!emb) {
    out << "NO-IMMERSION\n";
    return kExitOk;
  }
  const std::string text = embedding_to_json(*emb).dump(2) + "\n";
  if (o.out.empty()) {
    out << "IMMERSION\n" << text;
  } else {
    write_file(o.out, text);
    out << "IMMERSION " << o.out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Multigraph h = load_graph(o.files.at(0), o.format);
  const Multigraph g = load_graph(o.files.at(1), o.format);
  const json j = load_json(o.files.at(2));
  ImmersionEmbedding emb;
  try {
    emb = embedding_from_json(j);
  } catch (const FormatError& e) {
    throw InputError(o.files[2], e, nullptr);
  }
  const bool ok = verify_embedding(h, g, emb);
  if (o.json_output)
    out << json{{"valid", ok}}.dump() << '\n';
  else
    out << (ok ? "VALID" : "INVALID") << '\n';
  return kExitOk;
}

json separation_json(const std::optional<Separation>& s) {
  if (!s) return nullptr;
  return s->side_a;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Multigraph g = load_graph(o.files.at(0), o.format);
  const ConnectivityReport r = classify(g);
  if (!o.json_output) {
    out << format_report(r);
    return kExitOk;
  }
  json j{{"lambda", r.lambda},
         {"3ec", r.is_3ec},
         {"internally4ec", r.is_internally_4ec},
         {"weakly5ec", r.is_weakly_5ec},
         {"2connected", r.is_2_vertex_connected},
         {"witness_3ec", separation_json(r.witness_3ec)},
         {"witness_internally4ec", separation_json(r.witness_internally_4ec)},
         {"witness_weakly5ec", separation_json(r.witness_weakly_5ec)},
         {"cutvertex", r.cut_vertex ? json(*r.cut_vertex) : json(nullptr)}};
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(o.files.at(0), o.format);
  Decomposition d;
  try {
    d = decompose(g);
  } catch (const K33Present& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  const std::string text = tree_to_json(d.tree).dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
    out << "TREE " << o.out << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const Mode mode = *mode_from_string(o.mode);
  std::vector<Multigraph> bases;
  std::size_t skipped = 0;
  if (!o.catalog.empty()) {
    std::vector<Multigraph> all;
    try {
      all = parse_planar_code(read_file(o.catalog));
    } catch (const FormatError& e) {
      throw InputError(o.catalog, e, "byte");
    }
    for (auto& g : all) {
      if (g.num_vertices() == o.n)
        bases.push_back(std::move(g));
      else
        ++skipped;
    }
  } else if (o.n <= 7) {
    bases = generate_base_graphs(o.n);
  } else {
    err << "error: missing catalog for n >= 8; pass --catalog <planar_code file>\n";
    return kExitUsage;
  }

  SearchOptions so;
  so.mode = mode;
  so.workers = o.workers;
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    so.checkpoint_dir = (std::filesystem::path(o.out) / "checkpoints").string();
  }
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult result = search_obstructions(bases, so);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::string records;
  for (const auto& r : result.records) records += format_record(r) + "\n";
  json summary{{"mode", to_string(mode)},
               {"n", o.n},
               {"cap", multiplicity_cap(mode)},
               {"source", o.catalog.empty() ? "generated" : "catalog"},
               {"bases", bases.size()},
               {"skipped_catalog_graphs", skipped},
               {"minimal_augmentations", result.stats.minimal_augmentations},
               {"closure_graphs", result.stats.closure_graphs},
               {"obstructions", result.records.size()},
               {"counts", {{std::to_string(o.n), result.records.size()}}}};
  if (!o.deterministic) {
    summary["runtime_seconds"] = seconds;
    summary["workers"] = so.workers;
    summary["resumed_bases"] = result.stats.resumed_bases;
  }
  if (!o.out.empty()) {
    const std::string stem = "n" + std::to_string(o.n) + "-" + to_string(mode);
    const auto dir = std::filesystem::path(o.out);
    write_file((dir / ("obstructions-" + stem + ".txt")).string(), records);
    write_file((dir / ("summary-" + stem + ".json")).string(), summary.dump(2) + "\n");
  } else if (!o.json_output) {
    out << records;
  }
  if (o.json_output)
    out << summary.dump() << '\n';
  else
    out << "obstructions=" << result.records.size() << " bases=" << bases.size()
        << " mode=" << to_string(mode) << " n=" << o.n << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide K3,3-immersion-freeness of multigraphs", "k33"};
  app.require_subcommand(1);
  Options o;
  o.workers = default_workers();

  auto* check = app.add_subcommand("check", "Decide K3,3-freeness and write a certificate");
  check->add_option("file", o.files, "Edge-list file ('-' for stdin)")->required()->expected(1);
  check->add_option("--out", o.out, "Certificate path");
  add_common(check, o, true);

  auto* immerse = app.add_subcommand("immerse", "Search an immersion of H (default K3,3) in G");
  immerse->add_option("files", o.files, "[H-file] G-file")->required()->expected(1, 2);
  immerse->add_option("--out", o.out, "Embedding path");
  add_common(immerse, o, true);

  auto* verify = app.add_subcommand("verify", "Check an embedding of H in G");
  verify->add_option("files", o.files, "H-file G-file embedding-file")->required()->expected(3);
  add_common(verify, o, true);

  auto* classify_cmd = app.add_subcommand("classify", "Report edge-connectivity properties");
  classify_cmd->add_option("file", o.files, "Edge-list file")->required()->expected(1);
  add_common(classify_cmd, o, true);

  auto* decompose_cmd = app.add_subcommand("decompose", "Print the decomposition tree");
  decompose_cmd->add_option("file", o.files, "Edge-list file")->required()->expected(1);
  decompose_cmd->add_option("--out", o.out, "Tree path");
  add_common(decompose_cmd, o, true);

  auto* enumerate = app.add_subcommand("enumerate", "Search obstructions on n vertices");
  enumerate->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(1, 254));
  enumerate->add_option("--mode", o.mode, "lemma7 or lemma8")
      ->required()
      ->check(CLI::IsMember({"lemma7", "lemma8"}));
  enumerate->add_option("--catalog", o.catalog, "planar_code file of base graphs");
  enumerate->add_option("--workers", o.workers, "Worker threads (default $K33_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--out", o.out, "Output directory (records, summary, checkpoints)");
  add_common(enumerate, o, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (immerse->parsed()) return cmd_immerse(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace k33::cli
