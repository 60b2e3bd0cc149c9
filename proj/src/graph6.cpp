#include "packcol/graph6.hpp"

#include <vector>

namespace packcol {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view s, std::size_t pos) {
  auto b = static_cast<unsigned char>(s[pos]);
  if (b < 63 || b > 126) throw Graph6Error("byte value " + std::to_string(b) + " out of range", pos);
  return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, Graph6Options opts) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty record", 0);

  std::size_t pos = 0;
  long long n = decode_byte(line, pos++);
  if (n == 63) {
    if (line.size() < 4) throw Graph6Error("truncated size header", line.size());
    if (static_cast<unsigned char>(line[1]) == 126)
      throw Graph6Error("orders above " + std::to_string(kGraph6MaxOrder) + " are not supported", 1);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(line, pos++);
    if (n < 63) throw Graph6Error("non-minimal size header", 0);
  }

  const long long bits = n * (n - 1) / 2;
  const auto need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < need)
    throw Graph6Error("missing edge bytes: expected " + std::to_string(need) + ", got " +
                          std::to_string(line.size() - pos),
                      line.size());
  if (line.size() - pos > need) throw Graph6Error("trailing bytes after edge data", pos + need);

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int word = decode_byte(line, at);
      if (word & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  if (need > 0) {
    const std::size_t last = pos + need - 1;
    const int word = decode_byte(line, last);
    const int used = static_cast<int>(bits - 6 * static_cast<long long>(need - 1));
    const int pad_mask = (1 << (6 - used)) - 1;
    if ((word & pad_mask) != 0 && !opts.lenient_padding)
      throw Graph6Error("nonzero padding bits", last);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph too large for graph6");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

std::optional<Graph> Graph6Reader::next() {
  while (std::getline(in_, line_)) {
    ++line_no_;
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    std::string_view body = line_;
    if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
    if (body.empty()) continue;
    line_ = std::string(body);
    try {
      return parse_graph6(line_, opts_);
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no_) + ": " + e.what(), e.offset());
    }
  }
  return std::nullopt;
}

}  // namespace packcol
