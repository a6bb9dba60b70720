// Writes a planar_code catalog of 2-connected planar simple graphs on n
// vertices, built by vertex addition. Stand-in for plantri output.
#include <fstream>
#include <iostream>
#include <string>

#include "k33/canonical.hpp"
#include "k33/enumeration.hpp"
#include "k33/planarity.hpp"
#include "oracles.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: k33_make_catalog <n> <out.pc>\n";
    return 2;
  }
  const int n = std::stoi(argv[1]);
  const auto graphs = k33::oracle::vertex_addition_catalog(
      n, [](const k33::Multigraph& g) { return k33::is_planar(g); },
      [](const k33::Multigraph& g) { return k33::canonical_key(g).bytes; });
  std::ofstream out(argv[2], std::ios::binary);
  out << k33::write_planar_code(graphs);
  std::cout << graphs.size() << " graphs\n";
  return out ? 0 : 1;
}
