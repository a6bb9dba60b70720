#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "k33/multigraph.hpp"

namespace k33 {

/// Malformed input; `offset` is a 1-based line number for text formats and a
/// 0-based byte offset for binary formats.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Edge-list text format: a header line `n m`, then m lines `u v k` with
// 0-based ids, u < v, each pair listed once, k >= 1.
Multigraph read_edge_list(std::istream& in);
Multigraph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Multigraph& g);
std::string format_edge_list(const Multigraph& g);

}  // namespace k33
