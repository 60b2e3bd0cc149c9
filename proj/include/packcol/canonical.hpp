#pragma once

#include <string>
#include <vector>

#include "packcol/graph.hpp"

namespace packcol {

inline constexpr int kCanonicalMaxOrder = 64;

/// Isomorphism-invariant form of a graph: the graph6 text of g under its
/// canonical relabeling. Two graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
  std::string graph6;
  /// labeling[v] is the canonical index of vertex v.
  std::vector<int> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.graph6 == b.graph6; }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.graph6 <=> b.graph6; }
};

/// Refines (degree, distance profile) colors to an equitable partition, then
/// individualizes cell members recursively and keeps the lexicographically
/// smallest adjacency string. Throws std::invalid_argument above 64 vertices.
CanonicalForm canonical_form(const Graph& g);

/// g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

}  // namespace packcol
