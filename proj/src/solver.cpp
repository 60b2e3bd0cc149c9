#include "packcol/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "balls.hpp"

namespace packcol {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

/// Decreasing degree, then decreasing eccentricity, then index.
std::vector<int> search_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> ecc(g.order());
  for (int v = 0; v < g.order(); ++v) ecc[v] = g.eccentricity(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return ecc[a] > ecc[b];
  });
  return order;
}

class BudgetClock {
 public:
  explicit BudgetClock(const Budget& b) : budget_(b), start_(Clock::now()) {}

  /// Counts one node; true once the budget is exhausted.
  bool tick(std::uint64_t& nodes) {
    ++nodes;
    if (budget_.max_nodes && nodes > budget_.max_nodes) return true;
    if (budget_.time_limit.count() && (nodes & 1023) == 0 &&
        Clock::now() - start_ > budget_.time_limit)
      return true;
    return false;
  }

  std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

 private:
  Budget budget_;
  Clock::time_point start_;
};

class PackingSearch {
 public:
  PackingSearch(const Graph& g, const SSequence& s, const SolverOptions& opts)
      : g_(g), s_(s), opts_(opts), clock_(opts.budget), order_(search_order(g)),
        slots_(g.order(), g.order()), assignment_(g.order()) {
    std::map<int, int> radius_index;
    for (int r : s.terms())
      if (!radius_index.count(r)) {
        radius_index[r] = static_cast<int>(balls_.size());
        balls_.push_back(detail::distance_balls(g, r));
      }
    const int k = s.length();
    ball_of_slot_.resize(k);
    group_of_slot_.resize(k);
    for (int i = 0; i < k; ++i) {
      ball_of_slot_[i] = radius_index[s[i]];
      if (i > 0 && s[i] == s[i - 1]) {
        group_of_slot_[i] = group_of_slot_[i - 1];
      } else {
        group_of_slot_[i] = static_cast<int>(group_start_.size());
        group_start_.push_back(i);
        group_end_.push_back(i);
      }
      group_end_[group_of_slot_[i]] = i + 1;
    }
    group_used_.assign(group_start_.size(), 0);
  }

  Decision run() {
    Decision d;
    const bool found = g_.order() == 0 || extend(0);
    d.stats = stats_;
    d.stats.elapsed = clock_.elapsed();
    if (aborted_) {
      d.verdict = Verdict::Unknown;
    } else if (found) {
      d.verdict = Verdict::Sat;
      d.coloring = assignment_;
    } else {
      d.verdict = Verdict::Unsat;
    }
    return d;
  }

 private:
  bool extend(int depth) {
    if (clock_.tick(stats_.nodes)) {
      aborted_ = true;
      return false;
    }
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (depth == g_.order()) return true;
    const int v = order_[depth];
    const int words = slots_.words();
    for (std::size_t grp = 0; grp < group_start_.size(); ++grp) {
      const int first = group_start_[grp];
      int last = group_end_[grp];
      if (opts_.symmetry_breaking) last = std::min(last, first + group_used_[grp] + 1);
      for (int slot = first; slot < last; ++slot) {
        if (detail::intersects(balls_[ball_of_slot_[slot]].row(v), slots_.row(slot), words)) continue;
        const bool opens = slot == first + group_used_[grp];
        if (opens) ++group_used_[grp];
        slots_.set(slot, v);
        assignment_[v] = slot;
        if (extend(depth + 1)) return true;
        assignment_[v] = kUnassigned;
        slots_.reset(slot, v);
        if (opens) --group_used_[grp];
        if (aborted_) return false;
      }
    }
    return false;
  }

  const Graph& g_;
  const SSequence& s_;
  SolverOptions opts_;
  BudgetClock clock_;
  std::vector<int> order_;
  std::vector<detail::BitRows> balls_;
  detail::BitRows slots_;
  Coloring assignment_;
  std::vector<int> ball_of_slot_;
  std::vector<int> group_of_slot_;
  std::vector<int> group_start_, group_end_, group_used_;
  SearchStats stats_;
  bool aborted_ = false;
};

}  // namespace

Decision decide(const Graph& g, const SSequence& s, const SolverOptions& opts) {
  return PackingSearch(g, s, opts).run();
}

LengthResult chromatic_length(const Graph& g, const SSequence& family, const SolverOptions& opts) {
  LengthResult r;
  for (int k = 1; k <= family.length(); ++k) {
    Decision d = decide(g, family.prefix(k), opts);
    r.stats += d.stats;
    r.length = k;
    if (d.verdict == Verdict::Sat) {
      r.verdict = Verdict::Sat;
      r.witness = std::move(d.coloring);
      return r;
    }
    if (d.verdict == Verdict::Unknown) {
      r.verdict = Verdict::Unknown;
      return r;
    }
  }
  r.verdict = Verdict::Unsat;
  return r;
}

PackingResult packing_chromatic(const Graph& g, const SolverOptions& opts) {
  PackingResult r;
  if (g.order() == 0) {
    r.verdict = Verdict::Sat;
    r.witness = Coloring(0);
    return r;
  }
  for (int k = 1; k <= g.order(); ++k) {
    Decision d = decide(g, SSequence::packing(k), opts);
    r.stats += d.stats;
    if (d.verdict == Verdict::Sat) {
      r.verdict = Verdict::Sat;
      r.value = k;
      r.witness = std::move(d.coloring);
      return r;
    }
    if (d.verdict == Verdict::Unknown) {
      r.verdict = Verdict::Unknown;
      r.value = k;
      return r;
    }
  }
  return r;  // unreachable: n distinct slots always suffice
}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, const Budget& budget)
      : g_(g), clock_(budget), order_(search_order(g)), slots_(3, g.order()),
        current_(g.order()), best_(g.order()) {
    for (int r = 1; r <= 3; ++r) balls_.push_back(detail::distance_balls(g, r));
  }

  SubsetResult run() {
    search(0, 0);
    SubsetResult r;
    r.size = best_size_;
    r.witness = best_;
    r.optimal = !aborted_;
    r.stats = stats_;
    r.stats.elapsed = clock_.elapsed();
    return r;
  }

 private:
  void search(int depth, int colored) {
    if (aborted_) return;
    if (clock_.tick(stats_.nodes)) {
      aborted_ = true;
      return;
    }
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (colored > best_size_) {
      best_size_ = colored;
      best_ = current_;
    }
    if (depth == g_.order() || colored + (g_.order() - depth) <= best_size_) return;
    const int v = order_[depth];
    for (int slot = 0; slot < 3; ++slot) {
      if (detail::intersects(balls_[slot].row(v), slots_.row(slot), slots_.words())) continue;
      slots_.set(slot, v);
      current_[v] = slot;
      search(depth + 1, colored + 1);
      current_[v] = kUnassigned;
      slots_.reset(slot, v);
      if (aborted_ || best_size_ == g_.order()) return;
    }
    search(depth + 1, colored);
  }

  const Graph& g_;
  BudgetClock clock_;
  std::vector<int> order_;
  std::vector<detail::BitRows> balls_;
  detail::BitRows slots_;
  Coloring current_, best_;
  int best_size_ = 0;
  SearchStats stats_;
  bool aborted_ = false;
};

}  // namespace

SubsetResult max_123_subset(const Graph& g, const Budget& budget) {
  return SubsetSearch(g, budget).run();
}

}  // namespace packcol
