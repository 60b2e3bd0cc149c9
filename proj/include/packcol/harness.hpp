#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <algorithm>
#include <exception>
#include <vector>

#include "packcol/enumeration.hpp"
#include <json.hpp>
#include "packcol/sequence.hpp"
#include "packcol/solver.hpp"

namespace packcol {

/// Runs f(0..count-1) on `jobs` threads pulling indices from a shared counter.
/// Results are stored by index, so the output does not depend on scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int jobs, F f) {
  std::vector<R> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        out[i] = f(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Default worker count: PACKCOL_JOBS if set, else the hardware concurrency.
int default_jobs();

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableOptions {
  SSequence family{1};
  int min_n = 4;
  int max_n = 14;
  int jobs = 1;
  SolverOptions solver;
};

/// Number of graphs of each order per chromatic length under a family.
struct ChromaticTable {
  SSequence family{1};
  std::string provider;
  /// rows[n][length] = count.
  std::map<int, std::map<int, int>> rows;
  std::uint64_t nodes = 0;
  double seconds = 0;

  int total(int n) const;
};

/// Classifies every graph of each even order in [min_n, max_n]. Throws
/// TableError if any graph ends Unknown or is not colorable by the whole
/// family.
ChromaticTable build_table(CubicProvider& provider, const TableOptions& opts);

/// Key-sorted JSON without timing data, so equal inputs give equal bytes.
nlohmann::json table_json(const ChromaticTable& t);
std::string table_csv(const ChromaticTable& t);
/// Aligned text, one column per prefix length with any nonzero count.
std::string table_text(const ChromaticTable& t);

struct ScreenQuestion {
  std::string id;
  std::string text;
  SSequence sequence{1};
  /// Apply the question to S(G) instead of G.
  bool subdivide = false;
  bool exclude_petersen = false;
};

/// q1..q6, the open questions restated over cubic graphs. A counterexample
/// is a graph (or subdivision) that is not colorable by `sequence`.
const std::vector<ScreenQuestion>& screen_questions();
const ScreenQuestion& screen_question(const std::string& id);

struct ScreeningReport {
  std::string question;
  int min_n = 4;
  int max_n = 4;
  int checked = 0;
  std::vector<std::string> counterexamples;
  /// False if any instance exhausted its budget.
  bool complete = true;
};

ScreeningReport screen(CubicProvider& provider, const ScreenQuestion& q, int min_n, int max_n, int jobs,
                       const SolverOptions& solver = {});

nlohmann::json screening_json(const ScreeningReport& r);

}  // namespace packcol
