#include "k33/edge_list.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace k33 {
namespace {

// Next non-blank, non-comment line; false at end of stream.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t lineno, std::size_t want) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long x;
  while (ss >> x) out.push_back(x);
  ss.clear();
  std::string rest;
  if ((ss >> rest) || out.size() != want)
    throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(want) +
                          " integers",
                      lineno);
  return out;
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw FormatError("line 1: missing header `n m`", 1);
  auto header = parse_ints(line, lineno, 2);
  if (header[0] < 0 || header[1] < 0 || header[0] > 100000)
    throw FormatError("line " + std::to_string(lineno) + ": invalid header", lineno);
  const int n = static_cast<int>(header[0]);
  Multigraph g(n);
  std::set<std::pair<long long, long long>> seen;
  for (long long i = 0; i < header[1]; ++i) {
    if (!next_line(in, line, lineno))
      throw FormatError("line " + std::to_string(lineno + 1) + ": expected " +
                            std::to_string(header[1]) + " edge lines",
                        lineno + 1);
    auto t = parse_ints(line, lineno, 3);
    auto fail = [&](const std::string& why) {
      throw FormatError("line " + std::to_string(lineno) + ": " + why, lineno);
    };
    if (t[0] < 0 || t[1] < 0 || t[0] >= n || t[1] >= n) fail("vertex id out of range");
    if (t[0] >= t[1]) fail("pairs must satisfy u < v");
    if (t[2] < 1 || t[2] > 1000000) fail("multiplicity must be positive");
    if (!seen.insert({t[0], t[1]}).second) fail("duplicate pair");
    g.add_edge(static_cast<int>(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2]));
  }
  if (next_line(in, line, lineno))
    throw FormatError("line " + std::to_string(lineno) + ": trailing content", lineno);
  return g;
}

Multigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  auto pairs = g.pairs();
  out << g.num_vertices() << ' ' << pairs.size() << '\n';
  for (const auto& p : pairs) out << p.u << ' ' << p.v << ' ' << p.mult << '\n';
}

std::string format_edge_list(const Multigraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace k33
