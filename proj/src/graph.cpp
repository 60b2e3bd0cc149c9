#include "packcol/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace packcol {

namespace {

std::string edge_text(Edge e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw GraphError("endpoint out of range in edge " + edge_text({a, b}), {a, b});
    if (a == b) throw GraphError("self-loop " + edge_text({a, b}), {a, b});
    auto& na = g.adj_[a];
    if (std::find(na.begin(), na.end(), b) != na.end())
      throw GraphError("duplicate edge " + edge_text({a, b}), {a, b});
    na.push_back(b);
    g.adj_[b].push_back(a);
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  const auto un = static_cast<std::size_t>(n);
  g.dist_.assign(un * un, kInfinite);
  std::vector<int> queue(un);
  for (int s = 0; s < n; ++s) {
    int* row = &g.dist_[static_cast<std::size_t>(s) * un];
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      for (int w : g.adj_[v]) {
        if (row[w] == kInfinite) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return g;
}

int Graph::eccentricity(int v) const {
  int best = 0;
  for (int w = 0; w < n_; ++w) {
    int d = distance(v, w);
    if (d != kInfinite) best = std::max(best, d);
  }
  return best;
}

bool Graph::connected() const {
  for (int v = 1; v < n_; ++v)
    if (distance(0, v) == kInfinite) return false;
  return true;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n_, false);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    auto& comp = out.emplace_back();
    for (int v = s; v < n_; ++v) {
      if (distance(s, v) != kInfinite) {
        seen[v] = true;
        comp.push_back(v);
      }
    }
  }
  return out;
}

std::vector<int> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::queue<int> q;
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return {};
        }
      }
    }
  }
  return side;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  const int n = g.order();
  bool all_three = n > 0;
  for (int v = 0; v < n; ++v) {
    c.max_degree = std::max(c.max_degree, g.degree(v));
    if (g.degree(v) != 3) all_three = false;
  }
  c.is_cubic = all_three;
  c.is_subcubic = c.max_degree <= 3;
  for (auto [a, b] : g.edges())
    if (g.degree(a) == 3 && g.degree(b) == 3) c.is_3_irregular = false;
  c.is_bipartite = n == 0 || !bipartition(g).empty();
  c.is_connected = g.connected();
  c.diameter = 0;
  for (int u = 0; u < n && c.diameter != kInfinite; ++u)
    for (int v = u + 1; v < n; ++v) c.diameter = std::max(c.diameter, g.distance(u, v));
  return c;
}

Graph subdivide(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  int next = n;
  for (auto [a, b] : g.edges()) {
    edges.emplace_back(a, next);
    edges.emplace_back(next, b);
    ++next;
  }
  return Graph::from_edges(next, edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return Graph::from_edges(g.order(), edges);
}

namespace {

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw GraphError("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  if (n < 1) throw GraphError("complete graph needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

// Bipartite cubic graph of order 14 that is (1,2,2,2,2,2)-chromatic.
// Labeling, top to bottom and left to right as drawn:
//   0 root; 1,2,3 its children; 4,5 under 1; 6,7 under 2; 8,9 under 3;
//   10,11 under 4; 12 under 7; 13 under 9.
Graph fbip14() {
  return Graph::from_edges(14, {{0, 1},   {0, 2},   {0, 3},   {1, 4},   {1, 5},   {2, 6},
                                {2, 7},   {3, 8},   {3, 9},   {4, 10},  {4, 11},  {7, 12},
                                {9, 13},  {10, 6},  {10, 8},  {11, 7},  {11, 9},  {12, 5},
                                {12, 8},  {13, 5},  {13, 6}});
}

// Four triangles (x: 0-2, y: 3-5, v: 6-8, w: 9-11) joined by six edges;
// cubic, diameter 3, not (1,1,3,3,3)-colorable.
Graph f1p16() {
  return Graph::from_edges(12, {{0, 1}, {1, 2}, {2, 0}, {3, 4},  {4, 5}, {5, 3},
                                {6, 7}, {7, 8}, {8, 6}, {9, 10}, {10, 11}, {11, 9},
                                {1, 3}, {0, 6}, {5, 7}, {4, 10}, {2, 9},  {11, 8}});
}

// 3-irregular graph of order 8 needing the special case of the
// (1,2,2,2) construction: 0=x, 1=y, 2=x1, 3=y1, 4=x11, 5=y11, 6=x12, 7=y12.
Graph g1222() {
  return Graph::from_edges(8, {{2, 0}, {0, 1}, {3, 1}, {2, 4}, {3, 5}, {2, 6}, {3, 7},
                               {4, 5}, {6, 7}});
}

// Level-ordering schematic rooted at {0,1}: 2..5 on level 1, 6=w, 7=v and
// 8=z on level 2, 9=u and 10=v' on level 3. v,w are siblings; v and v' are
// the cousins of u.
Graph levelfig() {
  return Graph::from_edges(11, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6},
                                {2, 7}, {6, 8}, {3, 8}, {8, 10}, {6, 9}});
}

bool parse_suffix(std::string_view name, std::string_view prefix, int& out) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return false;
  auto rest = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
  return ec == std::errc() && ptr == rest.data() + rest.size();
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "k4") return complete_graph(4);
  if (name == "k33")
    return Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                 {2, 3}, {2, 4}, {2, 5}});
  if (name == "fbip14") return fbip14();
  if (name == "f1p16") return f1p16();
  if (name == "g1222") return g1222();
  if (name == "levelfig") return levelfig();
  int k = 0;
  if (parse_suffix(name, "cycle", k)) return cycle_graph(k);
  if (parse_suffix(name, "path", k)) return path_graph(k);
  if (parse_suffix(name, "complete", k)) return complete_graph(k);
  throw GraphError("unknown fixture graph '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"petersen", "k4", "k33", "fbip14", "f1p16", "g1222", "levelfig"};
}

}  // namespace packcol
