#include "packcol/level_ordering.hpp"

#include <algorithm>

namespace packcol {

bool LevelOrdering::are_siblings(int u, int v) const {
  const auto& s = siblings[u];
  return std::find(s.begin(), s.end(), v) != s.end();
}

bool LevelOrdering::are_cousins(int u, int v) const {
  const auto& c = cousins[u];
  return std::find(c.begin(), c.end(), v) != c.end();
}

LevelOrdering level_ordering(const Graph& g, Edge e) {
  auto [x, y] = e;
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y))
    throw GraphError("root is not an edge of the graph", e);
  if (!g.connected()) throw GraphError("level ordering needs a connected graph");

  const int n = g.order();
  LevelOrdering lo;
  lo.root = {x, y};
  lo.level.resize(n);
  int depth = 0;
  for (int v = 0; v < n; ++v) {
    lo.level[v] = std::min(g.distance(v, x), g.distance(v, y));
    depth = std::max(depth, lo.level[v]);
  }
  lo.levels.assign(depth + 1, {});
  for (int v = 0; v < n; ++v) lo.levels[lo.level[v]].push_back(v);

  lo.siblings.assign(n, {});
  for (int u = 0; u < n; ++u) {
    const int i = lo.level[u];
    if (i == 0) continue;
    for (int p : g.neighbors(u)) {
      if (lo.level[p] != i - 1) continue;
      for (int v : g.neighbors(p)) {
        if (v == u || lo.level[v] != i || g.adjacent(u, v)) continue;
        auto& s = lo.siblings[u];
        if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
      }
    }
    std::sort(lo.siblings[u].begin(), lo.siblings[u].end());
  }

  lo.cousins.assign(n, {});
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (g.distance(u, v) != 3) continue;
      const int m = std::min(lo.level[u], lo.level[v]);
      bool every_path_dips = true;
      for (int a : g.neighbors(u)) {
        for (int b : g.neighbors(v)) {
          if (!g.adjacent(a, b)) continue;
          if (lo.level[a] >= m && lo.level[b] >= m) every_path_dips = false;
        }
      }
      if (every_path_dips) lo.cousins[u].push_back(v);
    }
  }
  return lo;
}

}  // namespace packcol
