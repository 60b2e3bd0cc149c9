#pragma once

#include <cstdint>
#include <vector>

#include "packcol/graph.hpp"

namespace packcol::detail {

/// Row-major table of fixed-width bitsets, one row per vertex.
class BitRows {
 public:
  BitRows() = default;
  BitRows(int rows, int bits) : words_((bits + 63) / 64), data_(static_cast<std::size_t>(rows) * words_, 0) {}

  int words() const noexcept { return words_; }
  std::uint64_t* row(int r) { return &data_[static_cast<std::size_t>(r) * words_]; }
  const std::uint64_t* row(int r) const { return &data_[static_cast<std::size_t>(r) * words_]; }

  void set(int r, int bit) { row(r)[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  void reset(int r, int bit) { row(r)[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63)); }

 private:
  int words_ = 0;
  std::vector<std::uint64_t> data_;
};

inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

/// ball(v) = { w != v : d(v, w) <= radius }.
inline BitRows distance_balls(const Graph& g, int radius) {
  BitRows rows(g.order(), g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int w = 0; w < g.order(); ++w)
      if (w != v && g.distance(v, w) <= radius) rows.set(v, w);
  return rows;
}

}  // namespace packcol::detail
