#include "packcol/sequence.hpp"

#include <charconv>

namespace packcol {

SSequence::SSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw SequenceError("sequence must have at least one term");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1)
      throw SequenceError("term " + std::to_string(i + 1) + " is not a positive integer");
    if (i > 0 && terms_[i] < terms_[i - 1])
      throw SequenceError("sequence is not non-decreasing at term " + std::to_string(i + 1));
  }
}

SSequence SSequence::parse(std::string_view text) {
  std::vector<int> terms;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) throw SequenceError("empty sequence");
  while (true) {
    auto comma = text.find(',');
    auto piece = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw SequenceError("invalid term '" + std::string(piece) + "'");
    terms.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return SSequence(std::move(terms));
}

SSequence SSequence::packing(int k) {
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i + 1;
  return SSequence(std::move(t));
}

SSequence SSequence::prefix(int j) const {
  if (j < 1 || j > length())
    throw SequenceError("prefix length " + std::to_string(j) + " out of range 1.." +
                        std::to_string(length()));
  return SSequence(std::vector<int>(terms_.begin(), terms_.begin() + j));
}

std::string SSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms_[i]);
  }
  return out;
}

bool dominates(const SSequence& weaker, const SSequence& stronger) {
  if (weaker.length() < stronger.length()) return false;
  for (int i = 0; i < stronger.length(); ++i)
    if (weaker[i] > stronger[i]) return false;
  return true;
}

}  // namespace packcol
