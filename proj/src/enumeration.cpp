#include "packcol/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>

#include "packcol/canonical.hpp"
#include "packcol/graph6.hpp"

namespace packcol {

namespace {

/// Completes degree sequences: the lowest-index vertex of deficient degree
/// takes partners in increasing order among the vertices already reached
/// plus the next unreached vertex, so every partial graph stays connected.
class CubicBuilder {
 public:
  explicit CubicBuilder(int n) : n_(n), deg_(n, 0), adj_(n, 0) {}

  std::vector<Graph> run() {
    reached_ = 1;
    fill(0, 1);
    std::vector<Graph> out;
    for (const auto& [form, g] : found_) out.push_back(g);
    return out;
  }

 private:
  void fill(int v, int min_partner) {
    if (deg_[v] == 3) {
      int next = v + 1;
      while (next < reached_ && deg_[next] == 3) ++next;
      if (next == reached_) {
        if (reached_ == n_) emit();
        return;  // no deficient vertex left to attach the rest
      }
      fill(next, next + 1);
      return;
    }
    const int need = 3 - deg_[v];
    int available = n_ - reached_;
    for (int w = min_partner; w < reached_; ++w)
      if (deg_[w] < 3 && !(adj_[v] >> w & 1)) ++available;
    if (available < need) return;

    for (int w = min_partner; w < reached_; ++w) {
      if (deg_[w] == 3 || (adj_[v] >> w & 1)) continue;
      link(v, w);
      fill(v, w + 1);
      unlink(v, w);
    }
    if (reached_ < n_ && min_partner <= reached_) {
      const int w = reached_++;
      link(v, w);
      fill(v, w + 1);
      unlink(v, w);
      --reached_;
    }
  }

  void link(int v, int w) {
    adj_[v] |= std::uint64_t{1} << w;
    adj_[w] |= std::uint64_t{1} << v;
    ++deg_[v];
    ++deg_[w];
    edges_.push_back({v, w});
  }

  void unlink(int v, int w) {
    adj_[v] &= ~(std::uint64_t{1} << w);
    adj_[w] &= ~(std::uint64_t{1} << v);
    --deg_[v];
    --deg_[w];
    edges_.pop_back();
  }

  void emit() {
    const Graph g = Graph::from_edges(n_, edges_);
    CanonicalForm form = canonical_form(g);
    if (found_.count(form.graph6)) return;
    found_.emplace(form.graph6, relabel(g, form.labeling));
  }

  int n_;
  int reached_ = 0;
  std::vector<int> deg_;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
  std::map<std::string, Graph> found_;
};

bool connected_cubic(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return g.order() > 0 && g.connected();
}

}  // namespace

std::vector<Graph> enumerate_cubic(int n) {
  if (n % 2 != 0) throw std::invalid_argument("no cubic graph has an odd number of vertices");
  if (n < 4 || n > 16) throw std::invalid_argument("cubic enumeration supports orders 4..16");
  return CubicBuilder(n).run();
}

std::vector<Graph> filter_bipartite(const std::vector<Graph>& graphs) {
  std::vector<Graph> out;
  for (const Graph& g : graphs)
    if (classify(g).is_bipartite) out.push_back(g);
  return out;
}

std::vector<Graph> GeneratedProvider::graphs(int n) {
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, enumerate_cubic(n)).first;
  return it->second;
}

CatalogProvider::CatalogProvider(std::istream& in) {
  Graph6Reader reader(in);
  while (auto g = reader.next()) all_.push_back(std::move(*g));
}

std::unique_ptr<CatalogProvider> CatalogProvider::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog " + path);
  return std::make_unique<CatalogProvider>(in);
}

std::vector<Graph> CatalogProvider::graphs(int n) {
  std::map<std::string, Graph> found;
  for (const Graph& g : all_) {
    if (g.order() != n || !connected_cubic(g)) continue;
    CanonicalForm form = canonical_form(g);
    if (!found.count(form.graph6)) found.emplace(form.graph6, relabel(g, form.labeling));
  }
  std::vector<Graph> out;
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

std::unique_ptr<CubicProvider> make_provider(const std::string& source) {
  if (source == "generate") return std::make_unique<GeneratedProvider>();
  if (source.rfind("catalog:", 0) == 0) return CatalogProvider::from_file(source.substr(8));
  throw std::invalid_argument("unknown provider: " + source + " (expected generate or catalog:FILE)");
}

}  // namespace packcol
