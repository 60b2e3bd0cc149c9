#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace packcol {

class SequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-decreasing sequence of positive packing radii (s1, ..., sk). Slot i of
/// a coloring carries radius terms()[i].
class SSequence {
 public:
  /// Throws SequenceError unless terms is non-empty, positive and
  /// non-decreasing.
  explicit SSequence(std::vector<int> terms);
  SSequence(std::initializer_list<int> terms) : SSequence(std::vector<int>(terms)) {}

  /// Parses "s1,s2,...,sk" (whitespace around terms is ignored).
  static SSequence parse(std::string_view text);

  /// (1, 2, ..., k).
  static SSequence packing(int k);

  int length() const noexcept { return static_cast<int>(terms_.size()); }
  int operator[](int i) const { return terms_[i]; }
  const std::vector<int>& terms() const noexcept { return terms_; }
  int max_radius() const noexcept { return terms_.back(); }

  /// First j terms, 1 <= j <= length().
  SSequence prefix(int j) const;

  std::string to_string() const;

  friend bool operator==(const SSequence&, const SSequence&) = default;

 private:
  std::vector<int> terms_;
};

/// True iff `weaker` is at least as long and termwise no larger on the
/// first length(stronger) terms, so any stronger-coloring is also a
/// weaker-coloring.
bool dominates(const SSequence& weaker, const SSequence& stronger);

}  // namespace packcol
