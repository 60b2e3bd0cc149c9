#include "packcol/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "packcol/graph6.hpp"

namespace packcol {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), adj_(n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
  }

  CanonicalForm run() {
    std::vector<std::vector<int>> keys(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<int> profile(n_ + 1, 0);
      for (int w = 0; w < n_; ++w) {
        const int d = g_.distance(v, w);
        ++profile[d == kInfinite ? n_ : d];
      }
      keys[v] = {g_.degree(v)};
      keys[v].insert(keys[v].end(), profile.begin(), profile.end());
    }
    std::vector<int> colors = rank(keys);
    refine(colors);
    search(colors);
    CanonicalForm out;
    out.graph6 = write_graph6(relabel(g_, best_labeling_));
    out.labeling = best_labeling_;
    return out;
  }

 private:
  /// Replaces keys by their rank among the distinct keys.
  static std::vector<int> rank(const std::vector<std::vector<int>>& keys) {
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v)
      out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    return out;
  }

  static int count_colors(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  void refine(std::vector<int>& colors) const {
    int cells = count_colors(colors);
    while (true) {
      std::vector<std::vector<int>> keys(n_);
      for (int v = 0; v < n_; ++v) {
        keys[v].push_back(colors[v]);
        std::vector<int> nb;
        for (int w : g_.neighbors(v)) nb.push_back(colors[w]);
        std::sort(nb.begin(), nb.end());
        keys[v].insert(keys[v].end(), nb.begin(), nb.end());
      }
      colors = rank(keys);
      const int next = count_colors(colors);
      if (next == cells) return;
      cells = next;
    }
  }

  void search(const std::vector<int>& colors) {
    if (count_colors(colors) == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<std::vector<int>> keys(n_);
      for (int u = 0; u < n_; ++u) keys[u] = {colors[u], u == v ? 0 : 1};
      std::vector<int> next = rank(keys);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& pos) {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[pos[v]] = v;
    const int bits = n_ * (n_ - 1) / 2;
    std::vector<std::uint64_t> word((bits + 63) / 64, 0);
    int k = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (adj_[at[i]] >> at[j] & 1) word[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    if (best_labeling_.empty() || word < best_) {
      best_ = std::move(word);
      best_labeling_ = pos;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical form supports at most 64 vertices");
  if (g.order() == 0) return {write_graph6(g), {}};
  return Canonizer(g).run();
}

Graph canonical_graph(const Graph& g) {
  const CanonicalForm f = canonical_form(g);
  return relabel(g, f.labeling);
}

}  // namespace packcol
