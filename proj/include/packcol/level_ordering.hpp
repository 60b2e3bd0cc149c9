#pragma once

#include <vector>

#include "packcol/graph.hpp"

namespace packcol {

/// Partition of a connected graph by distance to a root edge {x, y}, with the
/// sibling and cousin relations the constructive colorings rely on.
///
/// Siblings: non-adjacent vertices on the same level i >= 1 with a common
/// neighbor on level i-1.
///
/// Cousins: vertices u, v at distance 3 such that every u-a-b-v path has
/// level(a) < m or level(b) < m, where m = min(level(u), level(v)).
struct LevelOrdering {
  Edge root;
  std::vector<int> level;
  /// levels[i] lists the vertices of level i in ascending order.
  std::vector<std::vector<int>> levels;
  std::vector<std::vector<int>> siblings;
  std::vector<std::vector<int>> cousins;

  /// Highest level index (the edge eccentricity).
  int depth() const { return static_cast<int>(levels.size()) - 1; }
  bool are_siblings(int u, int v) const;
  bool are_cousins(int u, int v) const;
};

/// Throws GraphError if e is not an edge of g or g is disconnected.
LevelOrdering level_ordering(const Graph& g, Edge e);

}  // namespace packcol
