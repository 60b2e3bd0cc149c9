#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "packcol/graph.hpp"

namespace packcol {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  /// Offset into the line, after any ">>graph6<<" header was stripped.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr int kGraph6MaxOrder = 258047;

struct Graph6Options {
  /// Accept nonzero padding bits in the final byte.
  bool lenient_padding = false;
};

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// "\r" or "\n" are ignored.
Graph parse_graph6(std::string_view line, Graph6Options opts = {});

/// Canonical graph6 text (no header, no newline).
std::string write_graph6(const Graph& g);

/// Streams graph6 records from a text source one line at a time. Blank lines
/// are skipped; errors carry the 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, Graph6Options opts = {}) : in_(in), opts_(opts) {}

  /// Next graph, or nullopt at end of input.
  std::optional<Graph> next();

  /// Raw text of the record last returned by next().
  const std::string& last_line() const noexcept { return line_; }
  std::size_t line_number() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  Graph6Options opts_;
  std::string line_;
  std::size_t line_no_ = 0;
};

}  // namespace packcol
