#include <istream>
#include <iterator>

#include "k33/edge_list.hpp"
#include "k33/enumeration.hpp"
#include "k33/planarity.hpp"

namespace k33 {
namespace {

constexpr const char* kHeader = ">>planar_code<<";

class Reader {
 public:
  explicit Reader(const std::string& bytes) : bytes_(bytes) {}

  std::vector<Multigraph> run() {
    header();
    std::vector<Multigraph> out;
    while (pos_ < bytes_.size()) out.push_back(record());
    return out;
  }

 private:
  void header() {
    if (bytes_.rfind(">>", 0) != 0) return;
    const auto end = bytes_.find("<<", 2);
    if (end == std::string::npos) throw FormatError("malformed header", 0);
    const std::string h = bytes_.substr(0, end + 2);
    if (h == ">>planar_code le<<") {
      wide_ok_ = true;
      big_endian_ = false;
    } else if (h == ">>planar_code be<<") {
      wide_ok_ = true;
    } else if (h != kHeader) {
      throw FormatError("malformed header", 0);
    }
    pos_ = end + 2;
  }

  unsigned byte() {
    if (pos_ >= bytes_.size()) throw FormatError("truncated record", pos_);
    return static_cast<unsigned char>(bytes_[pos_++]);
  }

  unsigned entry(bool wide) {
    if (!wide) return byte();
    const unsigned a = byte();
    const unsigned b = byte();
    return big_endian_ ? (a << 8) | b : (b << 8) | a;
  }

  Multigraph record() {
    const std::size_t start = pos_;
    bool wide = false;
    unsigned n = byte();
    if (n == 0) {
      if (!wide_ok_)
        throw FormatError("2-byte record without a byte-order header", start);
      wide = true;
      n = entry(true);
      if (n == 0) throw FormatError("record with zero vertices", start);
    }
    std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
    for (unsigned v = 0; v < n; ++v) {
      while (true) {
        const std::size_t at = pos_;
        const unsigned x = entry(wide);
        if (x == 0) break;
        if (x > n) throw FormatError("neighbor id out of range", at);
        if (x - 1 == v) throw FormatError("self-loop in adjacency list", at);
        ++count[v][x - 1];
      }
    }
    Multigraph g(static_cast<int>(n));
    for (unsigned u = 0; u < n; ++u)
      for (unsigned v = u + 1; v < n; ++v) {
        if (count[u][v] != count[v][u]) throw FormatError("asymmetric adjacency lists", start);
        if (count[u][v]) g.add_edge(static_cast<int>(u), static_cast<int>(v), count[u][v]);
      }
    return g;
  }

  const std::string& bytes_;
  std::size_t pos_ = 0;
  bool wide_ok_ = false;
  bool big_endian_ = true;
};

}  // namespace

std::vector<Multigraph> parse_planar_code(const std::string& bytes) { return Reader(bytes).run(); }

std::vector<Multigraph> read_planar_code(std::istream& in) {
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_planar_code(bytes);
}

std::string write_planar_code(const std::vector<Multigraph>& graphs) {
  std::string out = kHeader;
  for (const auto& g : graphs) {
    const int n = g.num_vertices();
    if (n < 1 || n > 254) throw GraphError("planar_code writer: vertex count must be 1..254");
    if (!g.is_simple()) throw GraphError("planar_code writer: graph must be simple");
    auto rotation = planar_rotation_system(g);
    if (static_cast<int>(rotation.size()) != n)
      throw GraphError("planar_code writer: graph is not planar");
    out.push_back(static_cast<char>(n));
    for (const auto& around : rotation) {
      for (int w : around) out.push_back(static_cast<char>(w + 1));
      out.push_back('\0');
    }
  }
  return out;
}

}  // namespace k33
