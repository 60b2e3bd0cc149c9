#pragma once

#include <utility>
#include <vector>

// Brute-force references that share no code with the library.
namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

/// All-pairs hop distances by BFS; -1 when unreachable.
std::vector<std::vector<int>> distances(int n, const EdgeList& edges);

/// Tries all radii.size()^n assignments.
bool colorable(int n, const EdgeList& edges, const std::vector<int>& radii);

/// Largest vertex set coverable by a 1-, a 2- and a 3-packing, over all 4^n
/// assignments (each vertex uncolored or one of the three colors).
int max_123(int n, const EdgeList& edges);

}  // namespace oracle
