#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace packcol {

/// Hop distance between disconnected vertices. Compares greater than any
/// packing radius, so cross-component constraints are always satisfied.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

using Edge = std::pair<int, int>;

class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, Edge offending)
      : std::runtime_error(what), offending_(offending) {}
  explicit GraphError(const std::string& what)
      : std::runtime_error(what), offending_(-1, -1) {}

  Edge offending() const noexcept { return offending_; }

 private:
  Edge offending_;
};

/// Simple undirected graph on vertices 0..n-1 with an eagerly computed
/// all-pairs hop-distance matrix. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Edges are stored normalized (u < v) in the order
  /// given. Throws GraphError on self-loops, duplicates or out-of-range ends.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  int distance(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  bool adjacent(int u, int v) const { return u != v && distance(u, v) == 1; }

  /// Largest finite distance from v.
  int eccentricity(int v) const;
  bool connected() const;

  /// Vertex sets of the connected components, each sorted, ordered by
  /// smallest member.
  std::vector<std::vector<int>> components() const;

  /// Same labeled graph (vertex count and edge set).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;
};

/// Builds a graph, see Graph::from_edges.
inline Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

struct GraphClass {
  int max_degree = 0;
  bool is_cubic = false;
  bool is_subcubic = true;
  /// No two adjacent vertices both of degree 3.
  bool is_3_irregular = true;
  bool is_bipartite = true;
  bool is_connected = true;
  /// kInfinite when disconnected.
  int diameter = 0;
};

GraphClass classify(const Graph& g);

/// Two-coloring by BFS, or empty when g has an odd cycle.
std::vector<int> bipartition(const Graph& g);

/// S(G): every edge replaced by a path of length two. Originals keep their
/// indices; the subdivision vertex of edges()[i] is n + i.
Graph subdivide(const Graph& g);

/// Relabels g so that vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Fixture graphs. Accepted names: petersen, k4, k33, fbip14, f1p16, g1222,
/// levelfig, cycleN, pathN, completeN (e.g. "cycle5"). Throws GraphError on
/// anything else.
Graph named_graph(std::string_view name);

/// Names of the fixed-size fixtures, for listing and fixture export.
std::vector<std::string> fixture_names();

}  // namespace packcol
