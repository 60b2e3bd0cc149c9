#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "packcol/coloring.hpp"
#include "packcol/graph.hpp"
#include "packcol/sequence.hpp"

namespace packcol {

enum class Verdict { Sat, Unsat, Unknown };

const char* to_string(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_depth = 0;
  std::chrono::nanoseconds elapsed{0};

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    max_depth = std::max(max_depth, o.max_depth);
    elapsed += o.elapsed;
    return *this;
  }
};

/// Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds time_limit{0};
};

struct SolverOptions {
  /// Interchangeable slots (equal radius) are opened in index order.
  bool symmetry_breaking = true;
  Budget budget;
};

struct Decision {
  Verdict verdict = Verdict::Unknown;
  /// Total coloring when verdict is Sat.
  std::optional<Coloring> coloring;
  SearchStats stats;
};

/// Exact S-colorability by depth-first search. Unsat is only reported after
/// the search space is exhausted; an exhausted budget yields Unknown.
Decision decide(const Graph& g, const SSequence& s, const SolverOptions& opts = {});

struct LengthResult {
  /// Sat: `length` is the chromatic length. Unsat: no prefix of the family
  /// (including the family itself) colors g. Unknown: budget ran out while
  /// deciding prefix `length`.
  Verdict verdict = Verdict::Unknown;
  int length = 0;
  std::optional<Coloring> witness;
  SearchStats stats;
};

/// Smallest k such that g is prefix(family, k)-colorable.
LengthResult chromatic_length(const Graph& g, const SSequence& family, const SolverOptions& opts = {});

struct PackingResult {
  /// Sat: value is the packing chromatic number. Unknown: the budget ran out
  /// and value is a proven lower bound.
  Verdict verdict = Verdict::Unknown;
  int value = 0;
  std::optional<Coloring> witness;
  SearchStats stats;
};

/// Packing chromatic number: least k with g (1,2,...,k)-colorable. On a
/// disconnected graph this is the maximum over its components.
PackingResult packing_chromatic(const Graph& g, const SolverOptions& opts = {});

struct SubsetResult {
  int size = 0;
  /// Partial (1,2,3)-coloring covering `size` vertices.
  Coloring witness;
  /// False when the budget stopped the search early.
  bool optimal = false;
  SearchStats stats;
};

/// Largest vertex set coverable by disjoint 1-, 2- and 3-packings.
SubsetResult max_123_subset(const Graph& g, const Budget& budget = {});

}  // namespace packcol
