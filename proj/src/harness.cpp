#include "packcol/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "packcol/canonical.hpp"
#include "packcol/graph6.hpp"

namespace packcol {

int default_jobs() {
  if (const char* env = std::getenv("PACKCOL_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int ChromaticTable::total(int n) const {
  int sum = 0;
  if (auto it = rows.find(n); it != rows.end())
    for (const auto& [len, count] : it->second) sum += count;
  return sum;
}

ChromaticTable build_table(CubicProvider& provider, const TableOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  ChromaticTable t;
  t.family = opts.family;
  t.provider = provider.name();
  for (int n = opts.min_n + opts.min_n % 2; n <= opts.max_n; n += 2) {
    const std::vector<Graph> graphs = provider.graphs(n);
    auto results = parallel_map<LengthResult>(graphs.size(), opts.jobs, [&](std::size_t i) {
      return chromatic_length(graphs[i], opts.family, opts.solver);
    });
    auto& row = t.rows[n];
    for (int len = 1; len <= opts.family.length(); ++len) row[len] = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const LengthResult& r = results[i];
      t.nodes += r.stats.nodes;
      if (r.verdict == Verdict::Unknown)
        throw TableError("budget exhausted on " + write_graph6(graphs[i]) + " at prefix length " +
                         std::to_string(r.length));
      if (r.verdict == Verdict::Unsat)
        throw TableError(write_graph6(graphs[i]) + " is not colorable by " + opts.family.to_string());
      ++row[r.length];
    }
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

nlohmann::json table_json(const ChromaticTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, counts] : t.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [len, count] : counts)
      cells.push_back({{"length", len}, {"prefix", t.family.prefix(len).to_string()}, {"count", count}});
    rows.push_back({{"n", n}, {"total", t.total(n)}, {"counts", cells}});
  }
  return {{"family", t.family.to_string()}, {"provider", t.provider}, {"rows", rows}, {"unknown", 0}};
}

std::string table_csv(const ChromaticTable& t) {
  std::ostringstream out;
  out << "n,length,prefix,count\n";
  for (const auto& [n, counts] : t.rows)
    for (const auto& [len, count] : counts)
      out << n << ',' << len << ",\"" << t.family.prefix(len).to_string() << "\"," << count << '\n';
  return out.str();
}

std::string table_text(const ChromaticTable& t) {
  int lo = t.family.length() + 1, hi = 0;
  for (const auto& [n, counts] : t.rows)
    for (const auto& [len, count] : counts)
      if (count > 0) {
        lo = std::min(lo, len);
        hi = std::max(hi, len);
      }
  std::ostringstream out;
  if (hi == 0) return "(empty table)\n";
  std::vector<std::string> heads;
  std::size_t width = 5;
  for (int len = lo; len <= hi; ++len) {
    heads.push_back("(" + t.family.prefix(len).to_string() + ")");
    width = std::max(width, heads.back().size());
  }
  out << std::setw(4) << "n";
  for (const auto& h : heads) out << "  " << std::setw(static_cast<int>(width)) << h;
  out << "  " << std::setw(6) << "total" << '\n';
  for (const auto& [n, counts] : t.rows) {
    out << std::setw(4) << n;
    for (int len = lo; len <= hi; ++len) {
      auto it = counts.find(len);
      out << "  " << std::setw(static_cast<int>(width)) << (it == counts.end() ? 0 : it->second);
    }
    out << "  " << std::setw(6) << t.total(n) << '\n';
  }
  return out.str();
}

const std::vector<ScreenQuestion>& screen_questions() {
  static const std::vector<ScreenQuestion> qs = {
      {"q1", "every subcubic graph except the Petersen graph is (1,1,2,3)-colorable", SSequence{1, 1, 2, 3},
       false, true},
      {"q2", "every subcubic graph except the Petersen graph is (1,2,2,2,2,2)-colorable",
       SSequence{1, 2, 2, 2, 2, 2}, false, true},
      {"q3", "some 3-irregular subcubic graph is not (1,2,2,3)-colorable (tested on subdivisions)",
       SSequence{1, 2, 2, 3}, true, false},
      {"q4", "every 3-irregular subcubic graph is (1,1,3)-colorable (tested on subdivisions)",
       SSequence{1, 1, 3}, true, false},
      {"q5", "the subdivision of every subcubic graph is (1,2,3,4,5)-colorable", SSequence{1, 2, 3, 4, 5},
       true, false},
      {"q6", "some cubic graph has packing chromatic number above 13", SSequence::packing(13), false, false},
  };
  return qs;
}

const ScreenQuestion& screen_question(const std::string& id) {
  for (const auto& q : screen_questions())
    if (q.id == id) return q;
  throw std::invalid_argument("unknown question: " + id + " (expected q1..q6)");
}

ScreeningReport screen(CubicProvider& provider, const ScreenQuestion& q, int min_n, int max_n, int jobs,
                       const SolverOptions& solver) {
  ScreeningReport r;
  r.question = q.id;
  r.min_n = min_n;
  r.max_n = max_n;
  const std::string petersen = canonical_form(named_graph("petersen")).graph6;
  for (int n = min_n + min_n % 2; n <= max_n; n += 2) {
    std::vector<Graph> graphs;
    for (Graph& g : provider.graphs(n)) {
      if (q.exclude_petersen && n == 10 && canonical_form(g).graph6 == petersen) continue;
      graphs.push_back(q.subdivide ? subdivide(g) : std::move(g));
    }
    auto verdicts = parallel_map<Verdict>(graphs.size(), jobs, [&](std::size_t i) {
      return decide(graphs[i], q.sequence, solver).verdict;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      ++r.checked;
      if (verdicts[i] == Verdict::Unknown) {
        r.complete = false;
        continue;
      }
      if (verdicts[i] == Verdict::Sat) continue;
      SolverOptions plain = solver;
      plain.symmetry_breaking = false;
      const Verdict again = decide(graphs[i], q.sequence, plain).verdict;
      if (again == Verdict::Unsat) r.counterexamples.push_back(write_graph6(graphs[i]));
      else r.complete = false;
    }
  }
  return r;
}

nlohmann::json screening_json(const ScreeningReport& r) {
  const ScreenQuestion& q = screen_question(r.question);
  return {{"question", r.question},
          {"text", q.text},
          {"sequence", q.sequence.to_string()},
          {"subdivided", q.subdivide},
          {"min_n", r.min_n},
          {"max_n", r.max_n},
          {"checked", r.checked},
          {"complete", r.complete},
          {"counterexamples", r.counterexamples}};
}

}  // namespace packcol
