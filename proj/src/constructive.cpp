#include "packcol/constructive.hpp"

#include "packcol/canonical.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <set>

namespace packcol {

namespace {

// ---------------------------------------------------------------------------
// Shared machinery

/// Partial coloring under construction. Every paint() keeps the partial
/// coloring valid; a paint that would break a packing constraint is a proof
/// case failure. Subsidiary colors are kept current: whenever a paint takes
/// away a vertex's subsidiary, a replacement is chosen from the palette.
class Painter {
 public:
  Painter(const Graph& g, SSequence seq, std::string method, const LevelOrdering* lo,
          std::vector<int> palette, std::map<int, int> preferred = {})
      : g_(g), seq_(std::move(seq)), method_(std::move(method)), lo_(lo),
        palette_(std::move(palette)), preferred_(std::move(preferred)), c_(g.order()),
        sub_(g.order(), -1) {
    const int reach = std::max(seq_.max_radius(), 3);
    near_.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
      for (int d = 1; d <= reach; ++d)
        for (int w = 0; w < g.order(); ++w)
          if (g.distance(v, w) == d) near_[v].push_back(w);
    }
  }

  const Graph& graph() const { return g_; }
  bool repairs() const { return repairs_; }
  void enable_repairs(bool on) { repairs_ = on; }
  const SSequence& sequence() const { return seq_; }
  int color(int v) const { return c_[v]; }
  int sub(int v) const { return sub_[v]; }
  bool colored(int v) const { return c_[v] != kUnassigned; }

  /// v could take `slot` given every other colored vertex.
  bool fits(int v, int slot) const { return fits_impl(v, slot, false); }

  bool has_neighbor_colored(int v, int slot, int skip = -1) const {
    for (int w : g_.neighbors(v))
      if (w != skip && c_[w] == slot) return true;
    return false;
  }

  std::set<int> neighbor_colors(int v) const {
    std::set<int> out;
    for (int w : g_.neighbors(v))
      if (colored(w)) out.insert(c_[w]);
    return out;
  }

  /// First slot in `candidates` that v fits, or -1.
  int first_fitting(int v, std::initializer_list<int> candidates) const {
    for (int s : candidates)
      if (fits(v, s)) return s;
    return -1;
  }
  int first_fitting(int v, const std::vector<int>& candidates) const {
    for (int s : candidates)
      if (fits(v, s)) return s;
    return -1;
  }

  void paint(int v, int slot, const std::string& rule, int subsidiary = -1) {
    if (!fits(v, slot))
      fail(rule, "vertex " + std::to_string(v) + " cannot take slot " + std::to_string(slot));
    c_[v] = slot;
    if (subsidiary != -1 && subsidiary_valid(v, subsidiary)) sub_[v] = subsidiary;
    refresh_around(v);
    log_.push_back({v, slot, sub_[v], method_ + "." + rule});
  }

  /// Colors v without checking constraints; a repair pass must follow.
  void place(int v, int slot, const std::string& rule) {
    c_[v] = slot;
    log_.push_back({v, slot, -1, method_ + "." + rule});
  }

  /// Recomputes every subsidiary color from scratch.
  void refresh_all() {
    for (int v = 0; v < g_.order(); ++v) refresh(v);
  }

  /// Recolors v by its subsidiary color, or by another palette color it fits
  /// if the stored one is no longer usable. Never picks a forbidden slot.
  bool recolor_by_subsidiary(int v, const std::vector<int>& forbidden, const std::string& rule) {
    auto allowed = [&](int s) {
      return s != -1 && s != c_[v] && std::find(forbidden.begin(), forbidden.end(), s) == forbidden.end();
    };
    std::vector<int> order;
    if (allowed(sub_[v])) order.push_back(sub_[v]);
    for (int s : palette_)
      if (allowed(s) && s != sub_[v]) order.push_back(s);
    for (int s : order) {
      if (fits(v, s)) {
        paint(v, s, rule);
        return true;
      }
    }
    return false;
  }

  /// Recolors every vertex within `radius` of v that holds `slot`.
  void clear_near(int v, int slot, int radius, const std::string& rule, bool skip_cousins = false) {
    for (int w : near_[v]) {
      if (g_.distance(v, w) > radius) break;
      if (c_[w] != slot) continue;
      if (skip_cousins && lo_ && lo_->are_cousins(v, w)) continue;
      if (!recolor_by_subsidiary(w, {slot}, rule))
        fail(rule, "vertex " + std::to_string(w) + " has no usable subsidiary color");
    }
  }

  /// Best-effort variant of clear_near: leaves blockers in place on failure.
  bool try_clear_near(int v, int slot, int radius, const std::string& rule, bool skip_cousins) {
    bool ok = true;
    for (int w : near_[v]) {
      if (g_.distance(v, w) > radius) break;
      if (c_[w] != slot) continue;
      if (skip_cousins && lo_ && lo_->are_cousins(v, w)) continue;
      if (!recolor_by_subsidiary(w, {slot}, rule)) ok = false;
    }
    return ok;
  }

  /// Exchanges the colors of v and w.
  void swap(int v, int w, const std::string& rule) {
    std::swap(c_[v], c_[w]);
    if (!fits(v, c_[v]) || !fits(w, c_[w]))
      fail(rule, "swapping " + std::to_string(v) + " and " + std::to_string(w) + " breaks a constraint");
    sub_[v] = sub_[w] = -1;
    refresh_around(v);
    refresh_around(w);
    log_.push_back({v, c_[v], sub_[v], method_ + "." + rule});
    log_.push_back({w, c_[w], sub_[w], method_ + "." + rule});
  }

  /// Colors v without logging or subsidiary upkeep (search scratch only).
  void set_raw(int v, int slot) { c_[v] = slot; }

  /// Removes v's color (used only to restart a vertex inside one rule).
  void erase(int v) {
    c_[v] = kUnassigned;
    sub_[v] = -1;
  }

  void set_subsidiary(int v, int slot) {
    if (subsidiary_valid(v, slot)) sub_[v] = slot;
  }

  struct Snapshot {
    Coloring c;
    std::vector<int> sub;
    std::size_t log_size;
  };
  Snapshot save() const { return {c_, sub_, log_.size()}; }
  void restore(const Snapshot& s) {
    c_ = s.c;
    sub_ = s.sub;
    log_.resize(s.log_size);
  }

  [[noreturn]] void fail(const std::string& case_id, const std::string& detail) const {
    throw ConstructionError(method_, case_id, detail);
  }

  Construction finish(std::optional<Edge> root) {
    if (!c_.complete()) fail("final", "coloring left vertices uncolored");
    if (!verify_coloring(g_, seq_, c_).empty()) fail("final", "coloring violates a packing constraint");
    Construction out;
    out.graph = g_;
    out.sequence = seq_;
    out.coloring = c_;
    out.log = std::move(log_);
    out.root = root;
    return out;
  }

 private:
  bool fits_impl(int v, int slot, bool exempt_relatives) const {
    const int radius = seq_[slot];
    for (int w : near_[v]) {
      if (g_.distance(v, w) > radius) break;
      if (c_[w] != slot) continue;
      if (exempt_relatives && lo_) {
        if (lo_->are_siblings(v, w)) continue;
        if (radius >= 3 && lo_->are_cousins(v, w)) continue;
      }
      return false;
    }
    return true;
  }

  bool needs_subsidiary(int v) const {
    return colored(v) && !palette_.empty() && seq_[c_[v]] >= 2;
  }

  bool subsidiary_valid(int v, int slot) const {
    return slot != c_[v] && std::find(palette_.begin(), palette_.end(), slot) != palette_.end() &&
           fits_impl(v, slot, true);
  }

  int choose_subsidiary(int v) const {
    if (auto it = preferred_.find(c_[v]); it != preferred_.end() && subsidiary_valid(v, it->second))
      return it->second;
    for (int s : palette_)
      if (subsidiary_valid(v, s)) return s;
    return -1;
  }

  void refresh(int v) {
    if (!needs_subsidiary(v)) {
      sub_[v] = -1;
      return;
    }
    if (sub_[v] == -1 || !subsidiary_valid(v, sub_[v])) sub_[v] = choose_subsidiary(v);
  }

  void refresh_around(int v) {
    refresh(v);
    for (int w : near_[v])
      if (colored(w)) refresh(w);
  }

  const Graph& g_;
  SSequence seq_;
  std::string method_;
  const LevelOrdering* lo_;
  std::vector<int> palette_;
  std::map<int, int> preferred_;
  Coloring c_;
  std::vector<int> sub_;
  std::vector<std::vector<int>> near_;
  std::vector<LogEntry> log_;
  bool repairs_ = false;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void require_connected_subcubic(const Graph& g, bool three_irregular) {
  require(g.order() > 0, "graph must be non-empty");
  const GraphClass cls = classify(g);
  require(cls.is_subcubic, "graph must be subcubic");
  require(cls.is_connected, "graph must be connected");
  if (three_irregular) require(cls.is_3_irregular, "graph must be 3-irregular");
}

Edge lowest_edge(const Graph& g) { return *std::min_element(g.edges().begin(), g.edges().end()); }

std::optional<Edge> lowest_edge_low_degree(const Graph& g) {
  std::optional<Edge> best;
  for (const Edge& e : g.edges())
    if (g.degree(e.first) <= 2 && g.degree(e.second) <= 2 && (!best || e < *best)) best = e;
  return best;
}

/// A connected piece of the subgraph induced by one level, listed in walk
/// order: paths from their lower-index end, cycles from their lowest vertex
/// towards its lower-index neighbor.
struct LevelPiece {
  std::vector<int> walk;
  bool cycle = false;
};

std::vector<LevelPiece> level_pieces(const Graph& g, const LevelOrdering& lo, int level) {
  const auto& members = lo.levels[level];
  auto inside = [&](int w) { return lo.level[w] == level; };
  auto inner = [&](int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (inside(w)) out.push_back(w);
    return out;
  };
  std::vector<LevelPiece> out;
  std::set<int> seen;
  for (int s : members) {
    if (seen.count(s)) continue;
    std::vector<int> comp{s};
    seen.insert(s);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : inner(comp[i]))
        if (seen.insert(w).second) comp.push_back(w);
    std::sort(comp.begin(), comp.end());

    LevelPiece piece;
    bool all_two = comp.size() >= 3;
    int start = -1;
    for (int v : comp) {
      const auto nb = inner(v);
      if (nb.size() > 2) return {};  // not a path or cycle
      if (nb.size() != 2) all_two = false;
      if (nb.size() <= 1 && start == -1) start = v;
    }
    piece.cycle = all_two;
    if (piece.cycle) start = comp.front();
    if (start == -1) return {};
    int prev = -1, cur = start;
    while (cur != -1) {
      piece.walk.push_back(cur);
      int next = -1;
      for (int w : inner(cur)) {
        if (w == prev || w == start) continue;
        if (std::find(piece.walk.begin(), piece.walk.end(), w) != piece.walk.end()) continue;
        next = w;
        break;  // lowest index first
      }
      prev = cur;
      cur = next;
    }
    if (piece.walk.size() != comp.size()) return {};
    out.push_back(std::move(piece));
  }
  return out;
}

/// Uncolors `vs` and recolors them by exhaustive search over `slots`.
/// Restores the previous state and returns false if no coloring exists.
bool local_search(Painter& p, const std::vector<int>& vs, const std::vector<int>& slots, const std::string& rule) {
  auto snap = p.save();
  for (int v : vs) p.erase(v);
  std::vector<int> chosen(vs.size(), -1);
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
    if (i == vs.size()) return true;
    for (int s : slots) {
      if (!p.fits(vs[i], s)) continue;
      p.set_raw(vs[i], s);
      chosen[i] = s;
      if (dfs(i + 1)) return true;
      p.erase(vs[i]);
    }
    return false;
  };
  const bool found = dfs(0);
  for (int v : vs) p.erase(v);
  if (!found) {
    p.restore(snap);
    return false;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) p.paint(vs[i], chosen[i], rule);
  return true;
}

/// Runs one proof step. If the proof's move is impossible, the step is undone
/// and the step's own vertices are colored directly when some color fits
/// (rule "<case>.direct"). In repair mode the colored vertices within
/// distance 1, then 2, are recolored with them by local_search.
template <class Body>
void step_with_repair(Painter& p, const std::vector<int>& centers, const std::vector<int>& slots, Body body) {
  auto snap = p.save();
  try {
    body();
  } catch (const ConstructionError& e) {
    p.restore(snap);
    if (local_search(p, centers, slots, e.case_id() + ".direct")) return;
    if (!p.repairs()) throw;
    const Graph& g = p.graph();
    for (int radius : {1, 2}) {
      std::vector<int> vs = centers;
      for (int w = 0; w < g.order(); ++w) {
        if (!p.colored(w) || std::find(vs.begin(), vs.end(), w) != vs.end()) continue;
        for (int c : centers)
          if (g.distance(c, w) <= radius) {
            vs.push_back(w);
            break;
          }
      }
      if (local_search(p, vs, slots, e.case_id() + ".repair.r" + std::to_string(radius))) return;
    }
    throw;
  }
}

template <class Step>
void color_levels(Painter& p, const LevelOrdering& lo, const std::vector<int>& slots, Step step) {
  for (int i = lo.depth() - 1; i >= 1; --i)
    for (int u : lo.levels[i]) step_with_repair(p, {u}, slots, [&] { step(u); });
}

std::vector<int> other_neighbors(const Graph& g, int v, int skip) {
  std::vector<int> out;
  for (int w : g.neighbors(v))
    if (w != skip) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// (1,2,2,2,2,2,2): slot 0 = 1, slots 1..6 = 2a..2f

constexpr int kTwoA = 1;

std::vector<int> twos_12x6() { return {1, 2, 3, 4, 5, 6}; }

void top_level_12x6(Painter& p, const LevelOrdering& lo) {
  const Graph& g = p.graph();
  const int r = lo.depth();
  auto pieces = level_pieces(g, lo, r);
  if (pieces.empty() && !lo.levels[r].empty()) p.fail("top.shape", "deepest level is not paths and cycles");
  for (const auto& piece : pieces) {
    const int m = static_cast<int>(piece.walk.size());
    for (int i = 0; i < m; ++i) {
      int slot = (i % 2 == 0) ? 0 : (i % 4 == 1 ? kTwoA : kTwoA + 1);
      if (piece.cycle && m % 4 != 0 && i == m - 1) slot = kTwoA + 2;
      p.place(piece.walk[i], slot, "top.pattern");
    }
  }
  // Same 2-colors at distance 2: move one to its partner color (2a->2d,
  // 2b->2e, 2c->2f).
  for (int u : lo.levels[r]) {
    const int s = p.color(u);
    if (s < 1 || s > 3 || p.fits(u, s)) continue;
    if (p.fits(u, s + 3)) {
      p.paint(u, s + 3, "top.repair");
    } else {
      int alt = p.first_fitting(u, twos_12x6());
      if (alt == -1) p.fail("top.repair", "no color 2 free at vertex " + std::to_string(u));
      p.paint(u, alt, "top.repair-any");
    }
  }
  p.refresh_all();
}

void level_vertex_12x6(Painter& p, int u) {
  if (!p.has_neighbor_colored(u, 0)) {
    p.paint(u, 0, "level.one");
    return;
  }
  const int alpha = p.first_fitting(u, twos_12x6());
  if (alpha == -1) p.fail("level.two", "no color 2 free at vertex " + std::to_string(u));
  p.paint(u, alpha, "level.two");
}

/// The unique neighbor of v (other than skip) holding a color 2, or -1 if
/// there is none or more than one.
int unique_two_neighbor(const Painter& p, int v, int skip) {
  int found = -1;
  for (int w : p.graph().neighbors(v)) {
    if (w == skip || !p.colored(w) || p.color(w) == 0) continue;
    if (found != -1) return -1;
    found = w;
  }
  return found;
}

/// Recolors one 2-colored vertex within distance 2 of v by its subsidiary
/// color so that v can take the color it held.
bool free_two_by_subsidiary(Painter& p, int v, const std::string& rule) {
  const Graph& g = p.graph();
  for (int w = 0; w < g.order(); ++w) {
    if (w == v || g.distance(v, w) > 2 || !p.colored(w) || p.color(w) == 0) continue;
    const int old = p.color(w);
    auto snap = p.save();
    if (p.recolor_by_subsidiary(w, {}, rule) && p.fits(v, old)) {
      p.paint(v, old, rule);
      return true;
    }
    p.restore(snap);
  }
  return false;
}

void endgame_12x6(Painter& p, Edge root) {
  const Graph& g = p.graph();
  auto [x, y] = root;
  const bool one_x = p.has_neighbor_colored(x, 0, y);
  const bool one_y = p.has_neighbor_colored(y, 0, x);
  auto options = [&](int v) {
    std::vector<int> out;
    for (int s : twos_12x6())
      if (p.fits(v, s)) out.push_back(s);
    return out;
  };

  if (one_x && one_y) {
    const auto ax = options(x), ay = options(y);
    for (int a : ax)
      for (int b : ay)
        if (a != b) {
          p.paint(x, a, "L0.both-one");
          p.paint(y, b, "L0.both-one");
          return;
        }
    if (ax.empty() || ay.empty()) p.fail("L0.both-one", "no color 2 left for the root edge");
    // Both ends see the same single free color: hand each end the color of
    // its 2-colored neighbor, which moves to its subsidiary color.
    const int x2 = unique_two_neighbor(p, x, y), y2 = unique_two_neighbor(p, y, x);
    if (x2 == -1 || y2 == -1) p.fail("L0.both-one.swap", "root neighbor colored 2 not found");
    const int cx = p.color(x2), cy = p.color(y2);
    if (!p.recolor_by_subsidiary(x2, {}, "L0.both-one.swap") ||
        !p.recolor_by_subsidiary(y2, {}, "L0.both-one.swap"))
      p.fail("L0.both-one.swap", "root neighbor has no subsidiary color");
    p.paint(x, cx, "L0.both-one.swap");
    p.paint(y, cy, "L0.both-one.swap");
    return;
  }

  if (one_x != one_y) {
    const int X = one_x ? x : y, Y = one_x ? y : x;
    p.paint(Y, 0, "L0.one-side");
    const auto ax = options(X);
    if (!ax.empty()) {
      p.paint(X, ax.front(), "L0.one-side");
      return;
    }
    const int x2 = unique_two_neighbor(p, X, Y);
    if (x2 == -1) {
      // Both other neighbors of X hold 1: free a color at distance 2 instead.
      if (free_two_by_subsidiary(p, X, "L0.one-side.free")) return;
      p.fail("L0.one-side.free", "no vertex at distance 2 can move to its subsidiary color");
    }
    const int cx = p.color(x2);
    if (!p.recolor_by_subsidiary(x2, {}, "L0.one-side.swap"))
      p.fail("L0.one-side.swap", "root neighbor has no subsidiary color");
    p.paint(X, cx, "L0.one-side.swap");
    return;
  }

  p.paint(y, 0, "L0.no-one");
  const auto ax = options(x);
  if (!ax.empty()) {
    p.paint(x, ax.front(), "L0.no-one");
    return;
  }
  const auto xs = other_neighbors(g, x, y);
  if (xs.size() != 2) p.fail("L0.no-one.recolor", "x does not have two further neighbors");
  const int x1 = xs[0], x2 = xs[1];
  const int x1p = unique_two_neighbor(p, x1, x), x2p = unique_two_neighbor(p, x2, x);
  if (x1p == -1 || x2p == -1) p.fail("L0.no-one.recolor", "second-neighbor colored 2 not unique");
  const int a = p.color(x1), b = p.color(x2), cc = p.color(x1p), d = p.color(x2p);
  const int s1 = p.sub(x1), s2 = p.sub(x2);
  auto snap = p.save();
  if (s1 != -1 && s1 != b && s1 != cc) {
    if (p.recolor_by_subsidiary(x1, {b, cc}, "L0.no-one.x1") && p.fits(x, a)) {
      p.paint(x, a, "L0.no-one.x1");
      return;
    }
    p.restore(snap);
  }
  if (s2 != -1 && s2 != a && s2 != d) {
    if (p.recolor_by_subsidiary(x2, {a, d}, "L0.no-one.x2") && p.fits(x, b)) {
      p.paint(x, b, "L0.no-one.x2");
      return;
    }
    p.restore(snap);
  }
  // Subsidiaries of x1 and x2 are each other's colors: free the color of x1'.
  if (!p.recolor_by_subsidiary(x1p, {}, "L0.no-one.x1p"))
    p.fail("L0.no-one.x1p", "x1' has no subsidiary color");
  if (p.color(x1p) == a) p.swap(x1, x2, "L0.no-one.swap");
  p.paint(x, cc, "L0.no-one.x1p");
}

// ---------------------------------------------------------------------------
// (1,1,2,2,3): slot 0 = 1a, 1 = 1b, 2 = 2a, 3 = 2b, 4 = 3

constexpr int k1a = 0, k1b = 1, k2a = 2, k2b = 3, k3 = 4;

bool is_one(int s) { return s == k1a || s == k1b; }
bool is_two(int s) { return s == k2a || s == k2b; }
bool heavy(int s) { return s == k2a || s == k2b || s == k3; }
int other_one(int s) { return s == k1a ? k1b : k1a; }
int other_two(int s) { return s == k2a ? k2b : k2a; }

void top_level_11223(Painter& p, const LevelOrdering& lo) {
  const int r = lo.depth();
  auto pieces = level_pieces(p.graph(), lo, r);
  if (pieces.empty() && !lo.levels[r].empty()) p.fail("top.shape", "deepest level is not paths and cycles");
  for (const auto& piece : pieces) {
    const int m = static_cast<int>(piece.walk.size());
    for (int i = 0; i < m; ++i) {
      int slot = i % 2 == 0 ? k1a : k1b;
      if (piece.cycle && m % 2 == 1 && i == m - 1) slot = k2a;
      p.place(piece.walk[i], slot, "top.pattern");
    }
  }
  for (int u : lo.levels[r]) {
    if (p.color(u) != k2a || p.fits(u, k2a)) continue;
    const int s = p.first_fitting(u, {k2b, k3});
    if (s == -1) p.fail("top.repair", "no color 2 or 3 free at vertex " + std::to_string(u));
    p.paint(u, s, "top.repair");
  }
  p.refresh_all();
}

/// The 2-colors u may take given its siblings.
std::vector<int> sibling_free_twos(const Painter& p, const LevelOrdering& lo, int u) {
  bool has_a = false, has_b = false;
  for (int s : lo.siblings[u]) {
    has_a |= p.color(s) == k2a;
    has_b |= p.color(s) == k2b;
  }
  std::vector<int> out;
  if (!has_a) out.push_back(k2a);
  if (!has_b) out.push_back(k2b);
  return out;
}

void paint_two_11223(Painter& p, const LevelOrdering& lo, int u, const std::string& rule) {
  const int s = p.first_fitting(u, sibling_free_twos(p, lo, u));
  if (s == -1) p.fail(rule, "no color 2 free at vertex " + std::to_string(u));
  p.paint(u, s, rule);
}

/// Gives w color 3, first moving every vertex within distance 3 that holds 3
/// to its subsidiary color.
void make_three(Painter& p, int w, const std::string& rule) {
  if (p.color(w) == k3) return;
  p.clear_near(w, k3, 3, rule + ".clear");
  p.paint(w, k3, rule);
}

int neighbor_with(const Painter& p, int v, int slot, std::initializer_list<int> skip) {
  for (int w : p.graph().neighbors(v)) {
    if (std::find(skip.begin(), skip.end(), w) != skip.end()) continue;
    if (p.color(w) == slot) return w;
  }
  return -1;
}

int third_neighbor(const Graph& g, int v, std::initializer_list<int> skip) {
  for (int w : g.neighbors(v))
    if (std::find(skip.begin(), skip.end(), w) == skip.end()) return w;
  return -1;
}

void level_vertex_11223(Painter& p, const LevelOrdering& lo, int u) {
  const Graph& g = p.graph();
  const bool has_a = p.has_neighbor_colored(u, k1a), has_b = p.has_neighbor_colored(u, k1b);
  if (!(has_a && has_b)) {
    p.paint(u, has_a ? k1b : k1a, "level.one");
    return;
  }
  const int u1 = neighbor_with(p, u, k1a, {}), u2 = neighbor_with(p, u, k1b, {});
  if (!p.has_neighbor_colored(u1, k1b)) {
    p.paint(u1, k1b, "level.flip");
    p.paint(u, k1a, "level.one");
    return;
  }
  if (!p.has_neighbor_colored(u2, k1a)) {
    p.paint(u2, k1a, "level.flip");
    p.paint(u, k1b, "level.one");
    return;
  }
  const int u11 = neighbor_with(p, u1, k1b, {u}), u21 = neighbor_with(p, u2, k1a, {u});
  const int w1 = third_neighbor(g, u1, {u, u11}), w2 = third_neighbor(g, u2, {u, u21});
  const bool h1 = w1 != -1 && heavy(p.color(w1));
  const bool h2 = w2 != -1 && heavy(p.color(w2));
  const auto free2 = sibling_free_twos(p, lo, u);
  const bool sibling_two = free2.size() < 2;

  if (!h1 && !h2) {
    paint_two_11223(p, lo, u, "level.case1");
    return;
  }

  if (h1 != h2) {
    const int w = h1 ? w1 : w2;
    const int cw = p.color(w), sw = p.sub(w);
    if (!(is_two(cw) && is_two(sw))) {
      make_three(p, w, "level.case2.three");
      paint_two_11223(p, lo, u, "level.case2.three");
      return;
    }
    if (sibling_two) {
      if (free2.empty()) p.fail("level.case2.sibling", "siblings hold both colors 2");
      const int target = free2.front();
      if (cw == target && !p.recolor_by_subsidiary(w, {target}, "level.case2.sibling"))
        p.fail("level.case2.sibling", "vertex " + std::to_string(w) + " cannot leave its color");
      p.paint(u, target, "level.case2.sibling");
      return;
    }
    const int delta = other_two(cw);
    p.try_clear_near(u, k3, 3, "level.case2.free3", true);
    p.paint(u, delta, "level.case2.other", k3);
    return;
  }

  // Both second neighbors hold a 2 or a 3.
  auto pair = [&](int w) {
    std::set<int> s{p.color(w)};
    if (p.sub(w) != -1) s.insert(p.sub(w));
    return s;
  };
  std::set<int> common;
  {
    const auto a = pair(w1), b = pair(w2);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(common, common.end()));
  }
  if (common.count(k3)) {
    make_three(p, w1, "level.case3.three");
    make_three(p, w2, "level.case3.three");
    paint_two_11223(p, lo, u, "level.case3.three");
    return;
  }
  if (sibling_two) {
    if (free2.empty()) p.fail("level.case3.sibling", "siblings hold both colors 2");
    const int target = free2.front();
    for (int w : {w1, w2})
      if (p.color(w) == target && !p.recolor_by_subsidiary(w, {target}, "level.case3.sibling"))
        p.fail("level.case3.sibling", "vertex " + std::to_string(w) + " cannot leave its color");
    p.paint(u, target, "level.case3.sibling");
    return;
  }
  if (common.empty()) p.fail("level.case3.common", "second neighbors share no color");
  const int delta = *common.begin();
  for (int w : {w1, w2})
    if (p.color(w) != delta) p.paint(w, delta, "level.case3.common");
  p.try_clear_near(u, k3, 3, "level.case3.free3", true);
  p.paint(u, other_two(delta), "level.case3.common", k3);
}


/// Colors of the neighbors of v other than `skip`.
std::set<int> outer_colors(const Painter& p, int v, int skip) {
  std::set<int> out;
  for (int w : p.graph().neighbors(v))
    if (w != skip && p.colored(w)) out.insert(p.color(w));
  return out;
}

bool try_root_ones(Painter& p, int x, int y, const std::string& rule) {
  for (int a : {k1a, k1b}) {
    if (p.fits(x, a) && p.fits(y, other_one(a))) {
      p.paint(x, a, rule);
      p.paint(y, other_one(a), rule);
      return true;
    }
  }
  return false;
}

void endgame_11223(Painter& p, Edge root) {
  const Graph& g = p.graph();
  auto [x, y] = root;
  if (try_root_ones(p, x, y, "L0.case1")) return;

  // Flip 1-colored neighbors of the root to reach the first case.
  std::vector<int> ones;
  for (int v : {x, y})
    for (int w : g.neighbors(v))
      if (w != x && w != y && is_one(p.color(w)) &&
          std::find(ones.begin(), ones.end(), w) == ones.end())
        ones.push_back(w);
  const int m = static_cast<int>(ones.size());
  for (int size = 1; size <= m; ++size) {
    for (int mask = 1; mask < (1 << m); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      auto snap = p.save();
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        const int w = ones[i], target = other_one(p.color(w));
        if (!p.fits(w, target)) ok = false;
        else p.paint(w, target, "L0.case1.flip");
      }
      if (ok && try_root_ones(p, x, y, "L0.case1")) return;
      p.restore(snap);
    }
  }

  for (int orient = 0; orient < 2; ++orient) {
    const int X = orient == 0 ? x : y, Y = orient == 0 ? y : x;
    const auto cx = outer_colors(p, X, Y), cy = outer_colors(p, Y, X);
    for (int A : {k1a, k1b}) {
      const int B = other_one(A);
      auto only = [](const std::set<int>& s, std::set<int> want) { return s == want; };
      auto no_ones = [](const std::set<int>& s) { return !s.count(k1a) && !s.count(k1b); };
      auto heavy_extra = [&](const std::set<int>& s) {
        for (int c : s)
          if (heavy(c)) return c;
        return -1;
      };
      const int alpha = heavy_extra(cx), beta = heavy_extra(cy);
      const bool cx_a_alpha = alpha != -1 && cx.size() == 2 && cx.count(A);
      const bool cy_a_beta = beta != -1 && cy.size() == 2 && cy.count(A);
      const bool cx_ab = only(cx, {A, B});
      const bool cy_a = only(cy, {A});

      if (cx_a_alpha && cy_a) {  // case 2
        p.paint(Y, B, "L0.case2");
        const int x1 = neighbor_with(p, X, A, {Y});
        const int x11 = third_neighbor(g, x1, {X, neighbor_with(p, x1, B, {X})});
        if (x11 != -1 && is_two(alpha) && is_two(p.color(x11)) && p.color(x11) != alpha) {
          if (!p.recolor_by_subsidiary(x11, {}, "L0.case2.free"))
            p.fail("L0.case2.free", "vertex " + std::to_string(x11) + " has no subsidiary color");
        }
        const int s = p.first_fitting(X, {k2a, k2b});
        if (s == -1) p.fail("L0.case2", "no color 2 free at the root");
        p.paint(X, s, "L0.case2");
        return;
      }
      const bool cx_sub_ab = !cx.empty() && std::all_of(cx.begin(), cx.end(), [&](int c) {
        return c == A || c == B;
      });
      if ((cx_sub_ab && cy_a) || (cx_ab && no_ones(cy))) {  // cases 3 and 4
        const std::string rule = cy_a ? "L0.case3" : "L0.case4";
        if (!p.fits(Y, B)) continue;
        p.paint(Y, B, rule);
        p.clear_near(X, k3, 3, rule + ".clear");
        p.paint(X, k3, rule);
        return;
      }
      if (cx_a_alpha && cy_a_beta) {  // case 5
        p.paint(Y, B, "L0.case5");
        int a = alpha;
        if (alpha == k3) {
          const int x2 = neighbor_with(p, X, k3, {Y});
          if (!p.recolor_by_subsidiary(x2, {k3}, "L0.case5.free"))
            p.fail("L0.case5.free", "vertex " + std::to_string(x2) + " has no subsidiary color");
          a = p.color(x2);
        }
        const int gamma = is_two(a) ? other_two(a) : k2a;
        p.clear_near(X, gamma, 2, "L0.case5.clear");
        p.paint(X, gamma, "L0.case5");
        return;
      }
      if (cx_ab && cy_a_beta) {  // case 6
        p.paint(Y, B, "L0.case6");
        p.clear_near(X, k2a, 2, "L0.case6.clear");
        p.paint(X, k2a, "L0.case6");
        return;
      }
      if (cx_ab && only(cy, {A, B})) {  // case 7
        p.clear_near(X, k2a, 2, "L0.case7.clear");
        p.paint(X, k2a, "L0.case7");
        p.clear_near(Y, k2b, 2, "L0.case7.clear");
        p.paint(Y, k2b, "L0.case7");
        return;
      }
    }
  }
  p.fail("L0", "no root case applies");
}

// ---------------------------------------------------------------------------
// (1,2,2,2) on 3-irregular graphs: slot 0 = 1, slots 1..3 = 2a..2c

std::vector<int> twos_1222() { return {1, 2, 3}; }

/// Perfect matchings of K4 on 0..3: {01,23} -> 1, {02,13} -> 2, {03,12} -> 3.
int matching_class(int a, int b) {
  if (a > b) std::swap(a, b);
  if ((a == 0 && b == 1) || (a == 2 && b == 3)) return 1;
  if ((a == 0 && b == 2) || (a == 1 && b == 3)) return 2;
  return 3;
}

/// Graphs without an edge joining two vertices of degree at most 2: degree-3
/// vertices take the colors of a proper 3-coloring of the graph obtained by
/// suppressing the degree-2 vertices; everything else takes 1.
Coloring color_1222_suppressed(const Graph& g, const SolverOptions& solver) {
  const int n = g.order();
  std::vector<int> index(n, -1), back;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 3) {
      index[v] = static_cast<int>(back.size());
      back.push_back(v);
    }
  std::set<Edge> hedges;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    int a = index[g.neighbors(v)[0]], b = index[g.neighbors(v)[1]];
    if (a == -1 || b == -1) throw ConstructionError("1222", "suppressed", "degree-2 vertex next to degree <= 2");
    if (a == b) continue;
    hedges.insert({std::min(a, b), std::max(a, b)});
  }
  const int t = static_cast<int>(back.size());
  Coloring c(n);
  for (int v = 0; v < n; ++v) c.slot[v] = 0;
  if (t == 0) return c;
  const std::vector<Edge> hlist(hedges.begin(), hedges.end());
  const Graph h = Graph::from_edges(t, hlist);
  if (t == 4 && h.size() == 6) {
    // K4: its 3-coloring does not exist, so color the subdivision vertices by
    // the three perfect matchings and the branch vertices by 1.
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != 2) continue;
      int a = index[g.neighbors(v)[0]], b = index[g.neighbors(v)[1]];
      if (a > b) std::swap(a, b);
      c.slot[v] = matching_class(a, b);
    }
    for (int v : back) c.slot[v] = 0;
    return c;
  }
  Decision d = decide(h, SSequence({1, 1, 1}), solver);
  if (d.verdict != Verdict::Sat)
    throw ConstructionError("1222", "suppressed", "no proper 3-coloring of the suppressed graph found");
  for (int i = 0; i < t; ++i) c.slot[back[i]] = d.coloring->slot[i] + 1;
  return c;
}

/// The exceptional graph of the endgame (both root neighbors of degree 3 with
/// their outer neighbors paired by two edges) keeps its fixed coloring.
std::optional<Coloring> special_1222(const Graph& g) {
  static const Graph special = named_graph("g1222");
  // x, y, x1, y1, x11, y11, x12, y12 -> 2c, 2b, 2a, 2a, 2b, 1, 1, 2c
  static const std::vector<int> slots{3, 2, 1, 1, 2, 0, 0, 3};
  if (g.order() != special.order() || g.size() != special.size()) return std::nullopt;
  const CanonicalForm a = canonical_form(g), b = canonical_form(special);
  if (a != b) return std::nullopt;
  std::vector<int> from_canonical(g.order());
  for (int v = 0; v < g.order(); ++v) from_canonical[b.labeling[v]] = v;
  Coloring c(g.order());
  for (int v = 0; v < g.order(); ++v) c.slot[v] = slots[from_canonical[a.labeling[v]]];
  return c;
}

void top_level_1222(Painter& p, const LevelOrdering& lo) {
  const Graph& g = p.graph();
  const int r = lo.depth();
  auto pieces = level_pieces(g, lo, r);
  if (pieces.empty() && !lo.levels[r].empty()) p.fail("top.shape", "deepest level is not paths");
  std::vector<int> twos;
  for (const auto& piece : pieces) {
    const auto& w = piece.walk;
    if (piece.cycle || w.size() > 3) p.fail("top.shape", "deepest level has a long path or a cycle");
    if (w.size() == 1) {
      p.paint(w[0], 0, "top.single");
    } else if (w.size() == 2) {
      int one = w[0], two = w[1];
      if (g.degree(one) == 3 || (g.degree(two) <= 2 && two < one)) std::swap(one, two);
      p.paint(one, 0, "top.pair");
      twos.push_back(two);
    } else {
      p.paint(w[0], 0, "top.triple");
      p.paint(w[2], 0, "top.triple");
      twos.push_back(w[1]);
    }
  }
  std::sort(twos.begin(), twos.end());
  for (int v : twos) {
    const int s = p.first_fitting(v, twos_1222());
    if (s == -1) p.fail("top.two", "no color 2 free at vertex " + std::to_string(v));
    p.paint(v, s, "top.two");
  }
}

void level_vertex_1222(Painter& p, int u) {
  const Graph& g = p.graph();
  if (!p.has_neighbor_colored(u, 0)) {
    p.paint(u, 0, "level.one");
    return;
  }
  if (g.degree(u) == 3) {
    const int s = p.first_fitting(u, twos_1222());
    if (s == -1) p.fail("level.two", "no color 2 free at vertex " + std::to_string(u));
    p.paint(u, s, "level.two");
    return;
  }
  const int u1 = neighbor_with(p, u, 0, {});
  const int s = p.first_fitting(u1, twos_1222());
  if (s == -1) p.fail("level.lift", "neighbor " + std::to_string(u1) + " has no color 2 free");
  p.paint(u1, s, "level.lift");
  p.paint(u, 0, "level.one");
}

/// Root edge with `one` taking 1 and `two` taking a color 2. The other
/// neighbor of `one` is moved to a color 2 first if it holds 1.
bool root_one_two(Painter& p, int one, int two, const std::string& rule) {
  auto snap = p.save();
  for (int w : p.graph().neighbors(one)) {
    if (w == two || p.color(w) != 0) continue;
    const int s = p.first_fitting(w, twos_1222());
    if (s == -1) {
      p.restore(snap);
      return false;
    }
    p.paint(w, s, rule + ".lift");
  }
  if (!p.fits(one, 0)) {
    p.restore(snap);
    return false;
  }
  p.paint(one, 0, rule);
  const int s = p.first_fitting(two, twos_1222());
  if (s == -1) {
    p.restore(snap);
    return false;
  }
  p.paint(two, s, rule);
  return true;
}

void endgame_1222(Painter& p, Edge root) {
  const Graph& g = p.graph();
  auto [x, y] = root;
  const int x1 = third_neighbor(g, x, {y}), y1 = third_neighbor(g, y, {x});

  if (x1 == -1 || y1 == -1) {
    if (root_one_two(p, x, y, "L0.short") || root_one_two(p, y, x, "L0.short")) return;
    p.fail("L0.short", "root edge cannot be colored");
  }

  const int dx = g.degree(x1), dy = g.degree(y1);
  if (dx == 3 && dy == 3) {
    const auto xs = other_neighbors(g, x1, x), ys = other_neighbors(g, y1, y);
    std::vector<Edge> links;
    for (int a : xs)
      for (int b : ys)
        if (g.adjacent(a, b)) links.push_back({a, b});
    if (links.size() >= 2 && g.order() == 8) {
      // The exceptional 8-vertex graph: fixed coloring.
      const auto [x11, y11] = links[0];
      const auto [x12, y12] = links[1];
      const std::vector<std::pair<int, int>> plan = {
          {x1, 1}, {x, 3}, {y, 2}, {y1, 1}, {x11, 2}, {y11, 0}, {x12, 0}, {y12, 3}};
      for (auto [v, s] : plan) p.erase(v);
      for (auto [v, s] : plan) p.paint(v, s, "L0.case1.exceptional");
      return;
    }
    if (links.size() == 1) {
      const int a = links[0].first;
      const bool ok = p.color(a) == 0 ? root_one_two(p, y, x, "L0.case1.link")
                                      : root_one_two(p, x, y, "L0.case1.link");
      if (ok) return;
      p.fail("L0.case1.link", "root edge cannot be colored");
    }
    if (root_one_two(p, x, y, "L0.case1") || root_one_two(p, y, x, "L0.case1")) return;
    p.fail("L0.case1", "root edge cannot be colored");
  }
  if (dx == 3 || dy == 3) {
    const int low = dx == 3 ? y : x, high = dx == 3 ? x : y;
    if (root_one_two(p, high, low, "L0.case2")) return;
    p.fail("L0.case2", "root edge cannot be colored");
  }
  if (g.adjacent(x1, y1)) {
    for (int v : {x, y, x1, y1}) p.erase(v);
    p.paint(x, 0, "L0.case3.square");
    p.paint(y1, 0, "L0.case3.square");
    p.paint(y, 1, "L0.case3.square");
    p.paint(x1, 2, "L0.case3.square");
    return;
  }
  const int sx = p.first_fitting(x, twos_1222());
  if (sx == -1) p.fail("L0.case3", "no color 2 free at the root");
  p.paint(x, sx, "L0.case3");
  const int sy = p.first_fitting(y, twos_1222());
  if (sy == -1) p.fail("L0.case3", "no color 2 free at the root");
  p.paint(y, sy, "L0.case3");
}

// ---------------------------------------------------------------------------
// (1,1,2) on 3-irregular graphs: slot 0 = 1a, 1 = 1b, 2 = 2

constexpr int kTwo112 = 2;

void top_level_112(Painter& p, const LevelOrdering& lo) {
  const int r = lo.depth();
  auto pieces = level_pieces(p.graph(), lo, r);
  if (pieces.empty() && !lo.levels[r].empty()) p.fail("top.shape", "deepest level is not paths");
  for (const auto& piece : pieces) {
    if (piece.cycle) p.fail("top.shape", "deepest level has a cycle");
    for (std::size_t i = 0; i < piece.walk.size(); ++i)
      p.paint(piece.walk[i], i % 2 == 0 ? k1a : k1b, "top.alternate");
  }
}

void level_vertex_112(Painter& p, int u) {
  const Graph& g = p.graph();
  const bool has_a = p.has_neighbor_colored(u, k1a), has_b = p.has_neighbor_colored(u, k1b);
  if (!(has_a && has_b)) {
    p.paint(u, has_a ? k1b : k1a, "level.one");
    return;
  }
  if (g.degree(u) <= 2) p.fail("level.one", "low-degree vertex sees both colors 1");
  const int u1 = neighbor_with(p, u, k1a, {}), u2 = neighbor_with(p, u, k1b, {});
  if (!p.has_neighbor_colored(u1, k1b)) {
    p.paint(u1, k1b, "level.flip");
    p.paint(u, k1a, "level.one");
  } else if (!p.has_neighbor_colored(u2, k1a)) {
    p.paint(u2, k1a, "level.flip");
    p.paint(u, k1b, "level.one");
  } else {
    p.paint(u, kTwo112, "level.two");
  }
}

void endgame_112(Painter& p, Edge root) {
  const Graph& g = p.graph();
  auto [x, y] = root;
  for (int a : {k1a, k1b}) {
    if (p.fits(x, a) && p.fits(y, other_one(a))) {
      p.paint(x, a, "L0.ones");
      p.paint(y, other_one(a), "L0.ones");
      return;
    }
  }
  const int x1 = third_neighbor(g, x, {y});
  if (x1 == -1 || !is_one(p.color(x1))) p.fail("L0", "root neighborhood has an unexpected coloring");
  const int A = p.color(x1), B = other_one(A);
  if (g.degree(x1) <= 2) {
    const auto outer = outer_colors(p, x1, x);
    if (!outer.count(B) && !g.adjacent(x1, y) && p.fits(y, B)) {
      p.paint(x1, B, "L0.flip");
      p.paint(x, A, "L0.flip");
      p.paint(y, B, "L0.flip");
      return;
    }
  }
  p.paint(y, B, "L0.two");
  p.paint(x, kTwo112, "L0.two");
}

// ---------------------------------------------------------------------------
// Drivers

Construction trivial(const Graph& g, const SSequence& seq, const std::string& method) {
  Painter p(g, seq, method, nullptr, {});
  for (int v = 0; v < g.order(); ++v) p.paint(v, 0, "trivial");
  return p.finish(std::nullopt);
}

template <class Body>
Construction guarded(const std::string& method, const Graph& g, const SSequence& seq,
                     const ConstructOptions& opts, Body body) {
  try {
    return body();
  } catch (const ConstructionError& e) {
    if (opts.mode == ConstructMode::Strict) throw;
    Decision d = decide(g, seq, opts.solver);
    if (d.verdict != Verdict::Sat)
      throw ConstructionError(method, e.case_id(), std::string("solver fallback failed after: ") + e.what());
    Construction out;
    out.graph = g;
    out.sequence = seq;
    out.coloring = *d.coloring;
    out.fell_back = true;
    out.fallback_reason = e.what();
    return out;
  }
}

Construction make_construction(const Graph& g, const SSequence& seq, const std::string& method,
                               const Coloring& c, const std::string& rule) {
  if (!c.complete() || !verify_coloring(g, seq, c).empty())
    throw ConstructionError(method, "final", "coloring violates a packing constraint");
  Construction out;
  out.graph = g;
  out.sequence = seq;
  out.coloring = c;
  for (int v = 0; v < g.order(); ++v) out.log.push_back({v, c.slot[v], -1, method + "." + rule});
  return out;
}

}  // namespace

SSequence lifted_sequence(const SSequence& s) {
  std::vector<int> terms{1};
  for (int t : s.terms()) terms.push_back(2 * t + 1);
  return SSequence(terms);
}

Coloring lift_subdivision(const Graph& g, const SSequence& s, const Coloring& c) {
  if (c.slot.size() != static_cast<std::size_t>(g.order()) || !c.complete() ||
      !verify_coloring(g, s, c).empty())
    throw PreconditionError("input coloring is not a complete valid coloring");
  Coloring out(g.order() + g.size());
  for (int v = 0; v < g.order(); ++v) out.slot[v] = c.slot[v] + 1;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) out.slot[g.order() + i] = 0;
  return out;
}

Construction color_subdivided_1333(const Graph& g, const ConstructOptions& opts) {
  require(classify(g).is_subcubic, "graph must be subcubic");
  const Graph sg = subdivide(g);
  const SSequence seq{1, 3, 3, 3};
  return guarded("s1333", sg, seq, opts, [&] {
    const int n = g.order();
    const auto comps = g.components();
    std::vector<bool> k4(n, false);
    std::vector<int> rest_index(n, -1), rest;
    for (const auto& comp : comps) {
      int edges = 0;
      for (int v : comp) edges += g.degree(v);
      const bool is_k4 = comp.size() == 4 && edges == 12;
      for (int v : comp) {
        k4[v] = is_k4;
        if (!is_k4) {
          rest_index[v] = static_cast<int>(rest.size());
          rest.push_back(v);
        }
      }
    }
    std::vector<Edge> rest_edges;
    for (const Edge& e : g.edges())
      if (!k4[e.first]) rest_edges.push_back({rest_index[e.first], rest_index[e.second]});
    const Graph h = Graph::from_edges(static_cast<int>(rest.size()), rest_edges);
    Coloring base(n);
    if (h.order() > 0) {
      Decision d = decide(h, SSequence({1, 1, 1}), opts.solver);
      if (d.verdict != Verdict::Sat)
        throw ConstructionError("s1333", "base", "no (1,1,1)-coloring of the non-K4 part found");
      for (int i = 0; i < h.order(); ++i) base.slot[rest[i]] = d.coloring->slot[i];
    }
    Coloring c(sg.order());
    for (int v = 0; v < n; ++v) c.slot[v] = k4[v] ? 0 : base.slot[v] + 1;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
      const auto [a, b] = g.edges()[i];
      if (!k4[a]) {
        c.slot[n + i] = 0;
        continue;
      }
      // Rank the endpoints inside their K4 to pick the perfect matching.
      const auto& comp = *std::find_if(comps.begin(), comps.end(), [&](const std::vector<int>& cc) {
        return std::find(cc.begin(), cc.end(), a) != cc.end();
      });
      std::vector<int> sorted(comp.begin(), comp.end());
      std::sort(sorted.begin(), sorted.end());
      int ia = static_cast<int>(std::find(sorted.begin(), sorted.end(), a) - sorted.begin());
      int ib = static_cast<int>(std::find(sorted.begin(), sorted.end(), b) - sorted.begin());
      if (ia > ib) std::swap(ia, ib);
      c.slot[n + i] = matching_class(ia, ib);
    }
    return make_construction(sg, seq, "s1333", c, "lift");
  });
}

Construction color_1_2x6(const Graph& g, const ConstructOptions& opts) {
  require_connected_subcubic(g, false);
  const SSequence seq{1, 2, 2, 2, 2, 2, 2};
  if (g.size() == 0) return trivial(g, seq, "12x6");
  return guarded("12x6", g, seq, opts, [&] {
    const std::vector<int> kSlots{0, 1, 2, 3, 4, 5, 6};
    const Edge root = lowest_edge(g);
    const LevelOrdering lo = level_ordering(g, root);
    Painter p(g, seq, "12x6", &lo, {1, 2, 3, 4, 5, 6, 0},
              {{1, 4}, {2, 5}, {3, 6}, {4, 1}, {5, 2}, {6, 3}});
    p.enable_repairs(opts.mode == ConstructMode::Lenient);
    if (lo.depth() >= 1) {
      top_level_12x6(p, lo);
      color_levels(p, lo, kSlots, [&](int u) { level_vertex_12x6(p, u); });
    }
    step_with_repair(p, {root.first, root.second}, kSlots, [&] { endgame_12x6(p, root); });
    return p.finish(root);
  });
}

Construction color_11223(const Graph& g, const ConstructOptions& opts) {
  require_connected_subcubic(g, false);
  const SSequence seq{1, 1, 2, 2, 3};
  if (g.size() == 0) return trivial(g, seq, "11223");
  return guarded("11223", g, seq, opts, [&] {
    const std::vector<int> kSlots{k1a, k1b, k2a, k2b, k3};
    const Edge root = lowest_edge(g);
    const LevelOrdering lo = level_ordering(g, root);
    Painter p(g, seq, "11223", &lo, {k2a, k2b, k3}, {{k2a, k2b}, {k2b, k2a}, {k3, k2a}});
    p.enable_repairs(opts.mode == ConstructMode::Lenient);
    if (lo.depth() >= 1) {
      top_level_11223(p, lo);
      color_levels(p, lo, kSlots, [&](int u) { level_vertex_11223(p, lo, u); });
    }
    step_with_repair(p, {root.first, root.second}, kSlots, [&] { endgame_11223(p, root); });
    return p.finish(root);
  });
}

Construction color_3irr_1222(const Graph& g, const ConstructOptions& opts) {
  require_connected_subcubic(g, true);
  const SSequence seq{1, 2, 2, 2};
  if (g.size() == 0) return trivial(g, seq, "1222");
  if (auto c = special_1222(g)) return make_construction(g, seq, "1222", *c, "special");
  return guarded("1222", g, seq, opts, [&] {
    const auto root = lowest_edge_low_degree(g);
    if (!root) return make_construction(g, seq, "1222", color_1222_suppressed(g, opts.solver), "suppressed");
    const std::vector<int> kSlots{0, 1, 2, 3};
    const LevelOrdering lo = level_ordering(g, *root);
    Painter p(g, seq, "1222", &lo, {});
    p.enable_repairs(opts.mode == ConstructMode::Lenient);
    if (lo.depth() >= 1) {
      top_level_1222(p, lo);
      color_levels(p, lo, kSlots, [&](int u) { level_vertex_1222(p, u); });
    }
    step_with_repair(p, {root->first, root->second}, kSlots, [&] { endgame_1222(p, *root); });
    return p.finish(*root);
  });
}

Construction color_3irr_112(const Graph& g, const ConstructOptions& opts) {
  require_connected_subcubic(g, true);
  const SSequence seq{1, 1, 2};
  if (g.size() == 0) return trivial(g, seq, "112");
  return guarded("112", g, seq, opts, [&] {
    const auto root = lowest_edge_low_degree(g);
    if (!root) {
      const auto side = bipartition(g);
      if (side.empty()) throw ConstructionError("112", "bipartite", "graph is not bipartite");
      Coloring c(g.order());
      for (int v = 0; v < g.order(); ++v) c.slot[v] = side[v] ? k1b : k1a;
      return make_construction(g, seq, "112", c, "bipartite");
    }
    const std::vector<int> kSlots{k1a, k1b, kTwo112};
    const LevelOrdering lo = level_ordering(g, *root);
    Painter p(g, seq, "112", &lo, {});
    p.enable_repairs(opts.mode == ConstructMode::Lenient);
    if (lo.depth() >= 1) {
      top_level_112(p, lo);
      color_levels(p, lo, kSlots, [&](int u) { level_vertex_112(p, u); });
    }
    step_with_repair(p, {root->first, root->second}, kSlots, [&] { endgame_112(p, *root); });
    return p.finish(*root);
  });
}

Construction construct(const std::string& method, const Graph& g, const ConstructOptions& opts) {
  if (method == "s1333") return color_subdivided_1333(g, opts);
  if (method == "12x6") return color_1_2x6(g, opts);
  if (method == "1222") return color_3irr_1222(g, opts);
  if (method == "11223") return color_11223(g, opts);
  if (method == "112") return color_3irr_112(g, opts);
  if (method == "lift") {
    for (int k = 1; k <= std::max(1, g.order()); ++k) {
      const SSequence base(std::vector<int>(k, 1));
      Decision d = decide(g, base, opts.solver);
      if (d.verdict == Verdict::Unknown) throw ConstructionError("lift", "base", "solver budget exhausted");
      if (d.verdict != Verdict::Sat) continue;
      const Graph sg = subdivide(g);
      return make_construction(sg, lifted_sequence(base), "lift", lift_subdivision(g, base, *d.coloring),
                               "lift");
    }
    throw ConstructionError("lift", "base", "graph has no proper coloring");
  }
  throw std::invalid_argument("unknown construction method: " + method);
}

BipartiteReport check_bipartite_equivalence(const Graph& g, const SolverOptions& opts) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < 3) throw PreconditionError("minimum degree must be at least 3");
  const Graph sg = subdivide(g);
  BipartiteReport r;
  auto run = [&](std::initializer_list<int> terms) {
    Decision d = decide(sg, SSequence(terms), opts);
    if (d.verdict == Verdict::Unknown) r.complete = false;
    return d.verdict == Verdict::Sat;
  };
  r.s_122 = run({1, 2, 2});
  r.s_123 = run({1, 2, 3});
  r.s_133 = run({1, 3, 3});
  r.bipartite = classify(g).is_bipartite;
  r.agree = r.s_122 == r.bipartite && r.s_123 == r.bipartite && r.s_133 == r.bipartite;
  return r;
}

nlohmann::json log_entry_json(const LogEntry& e) {
  nlohmann::json j{{"vertex", e.vertex}, {"slot", e.slot}, {"rule", e.rule}};
  j["subsidiary"] = e.subsidiary == -1 ? nlohmann::json(nullptr) : nlohmann::json(e.subsidiary);
  return j;
}

}  // namespace packcol
