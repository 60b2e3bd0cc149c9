#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "packcol/canonical.hpp"
#include "packcol/constructive.hpp"
#include "packcol/enumeration.hpp"
#include "packcol/graph6.hpp"
#include "packcol/harness.hpp"
#include "packcol/solver.hpp"

using namespace packcol;

namespace {

// Pinned limits.
constexpr double kTableSeconds = 600.0;
constexpr double kPackingTableSeconds = 900.0;
constexpr double kCertificateSeconds = 1.0;
constexpr std::uint32_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

GeneratedProvider& corpus() {
  static GeneratedProvider provider;
  return provider;
}

oracle::EdgeList edge_list(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

std::string row_text(const std::map<int, int>& row, int lo, int hi) {
  std::string out;
  for (int k = lo; k <= hi; ++k) {
    if (k > lo) out += '/';
    auto it = row.find(k);
    out += std::to_string(it == row.end() ? 0 : it->second);
  }
  return out;
}

/// Builds the table and compares every listed row; rows map length -> count.
Outcome table_criterion(const SSequence& family, int lo, int hi, int max_n,
                        const std::map<int, std::map<int, int>>& expected, double limit) {
  TableOptions opts;
  opts.family = family;
  opts.min_n = 4;
  opts.max_n = max_n;
  opts.jobs = default_jobs();
  const auto start = Clock::now();
  const ChromaticTable t = build_table(corpus(), opts);
  const double elapsed = seconds_since(start);
  bool ok = elapsed <= limit;
  std::ostringstream detail;
  for (int n = 4; n <= max_n; n += 2) {
    std::map<int, int> want = expected.at(n), got = t.rows.count(n) ? t.rows.at(n) : std::map<int, int>{};
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
    const bool row_ok = want == got;
    ok = ok && row_ok;
    detail << "n=" << n << ' ' << row_text(got, lo, hi);
    if (!row_ok) detail << " (expected " << row_text(want, lo, hi) << ')';
    detail << "; ";
  }
  detail << "family " << family.to_string() << ", " << opts.jobs << " jobs, " << elapsed << " s (limit " << limit
         << " s)";
  return {ok, detail.str()};
}

std::map<int, std::map<int, int>> rows(int first_length, const std::map<int, std::vector<int>>& counts) {
  std::map<int, std::map<int, int>> out;
  for (const auto& [n, row] : counts)
    for (std::size_t i = 0; i < row.size(); ++i) out[n][first_length + static_cast<int>(i)] = row[i];
  return out;
}

Outcome criterion_1(int max_n) {
  const auto expected = rows(4, {{4, {1, 0, 0, 0}},
                                 {6, {1, 1, 0, 0}},
                                 {8, {2, 1, 2, 0}},
                                 {10, {11, 7, 0, 1}},
                                 {12, {11, 74, 0, 0}},
                                 {14, {254, 250, 5, 0}},
                                 {16, {1031, 3017, 12, 0}}});
  return table_criterion({1, 2, 2, 2, 2, 2, 2}, 4, 7, max_n, expected, kTableSeconds);
}

Outcome criterion_2(int max_n) {
  const auto expected = rows(2, {{4, {0, 0, 1, 0}},
                                 {6, {1, 0, 1, 0}},
                                 {8, {1, 2, 2, 0}},
                                 {10, {2, 9, 7, 1}},
                                 {12, {5, 42, 38, 0}},
                                 {14, {13, 314, 182, 0}},
                                 {16, {38, 2808, 1214, 0}}});
  return table_criterion({1, 1, 2, 3, 3}, 2, 5, max_n, expected, kTableSeconds);
}

Outcome criterion_3(int max_n) {
  const auto expected = rows(4, {{4, {1, 0, 0, 0, 0, 0}},
                                 {6, {1, 1, 0, 0, 0, 0}},
                                 {8, {0, 3, 2, 0, 0, 0}},
                                 {10, {0, 3, 15, 1, 0, 0}},
                                 {12, {0, 7, 42, 36, 0, 0}},
                                 {14, {0, 13, 252, 222, 22, 0}},
                                 {16, {0, 34, 907, 2685, 433, 1}}});
  return table_criterion(SSequence::packing(9), 4, 9, max_n, expected, kPackingTableSeconds);
}

struct Certificate {
  std::string label;
  Graph graph;
  std::function<bool(const Graph&, std::string&)> check;
};

Outcome run_certificates(const std::vector<Certificate>& certs) {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : certs) {
    std::string note;
    const auto start = Clock::now();
    const bool right = c.check(c.graph, note);
    const double elapsed = seconds_since(start);
    const bool fast = elapsed <= kCertificateSeconds;
    ok = ok && right && fast;
    detail << c.label << ' ' << note << " in " << elapsed << " s" << (right && fast ? "" : " [FAIL]") << "; ";
  }
  detail << "limit " << kCertificateSeconds << " s each";
  return {ok, detail.str()};
}

std::function<bool(const Graph&, std::string&)> expect(SSequence s, Verdict want) {
  return [s, want](const Graph& g, std::string& note) {
    const Decision d = decide(g, s);
    note = s.to_string() + " " + to_string(d.verdict);
    if (d.verdict == Verdict::Sat && !verify_coloring(g, s, *d.coloring).empty()) {
      note += " (witness invalid)";
      return false;
    }
    return d.verdict == want;
  };
}

std::function<bool(const Graph&, std::string&)> expect_packing(int want) {
  return [want](const Graph& g, std::string& note) {
    const PackingResult r = packing_chromatic(g);
    note = "packing number " + std::to_string(r.value);
    return r.verdict == Verdict::Sat && r.value == want &&
           verify_coloring(g, SSequence::packing(r.value), *r.witness).empty();
  };
}

Outcome criterion_4() {
  return run_certificates({
      {"petersen", named_graph("petersen"), expect({1, 2, 2, 2, 2, 2}, Verdict::Unsat)},
      {"petersen", named_graph("petersen"), expect({1, 1, 2, 3}, Verdict::Unsat)},
      {"fbip14", named_graph("fbip14"), expect({1, 2, 2, 2, 2, 3}, Verdict::Unsat)},
      {"f1p16", named_graph("f1p16"), expect({1, 1, 3, 3, 3}, Verdict::Unsat)},
      {"C5", named_graph("cycle5"), expect({1, 2, 2}, Verdict::Unsat)},
      {"K4", named_graph("k4"), expect({1, 1, 1}, Verdict::Unsat)},
  });
}

Outcome criterion_5() {
  return run_certificates({
      {"K4", named_graph("k4"), expect_packing(4)},
      {"S(K4)", subdivide(named_graph("k4")), expect_packing(5)},
      {"petersen", named_graph("petersen"), expect({1, 2, 2, 2, 2, 2, 2}, Verdict::Sat)},
      {"petersen", named_graph("petersen"), expect({1, 1, 2, 2, 3}, Verdict::Sat)},
  });
}

/// Connected subcubic graph on n vertices: a random tree plus random extra
/// edges, each kept only while both ends have degree below 3.
Graph random_subcubic(std::mt19937& rng, int n, int extra) {
  std::vector<Edge> edges;
  std::vector<int> deg(n, 0);
  std::set<Edge> used;
  auto add = [&](int u, int v) {
    if (u == v || deg[u] == 3 || deg[v] == 3) return false;
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!used.insert(e).second) return false;
    edges.push_back(e);
    ++deg[u];
    ++deg[v];
    return true;
  };
  for (int v = 1; v < n; ++v) {
    int p;
    do p = static_cast<int>(rng() % v);
    while (deg[p] == 3);
    add(p, v);
  }
  for (int t = 0; t < extra; ++t) add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
  return Graph::from_edges(n, edges);
}

/// Random connected 3-irregular subcubic graph: every edge joining two
/// degree-3 vertices of a random subcubic graph is subdivided.
Graph random_3irregular(std::mt19937& rng) {
  const int n = 2 + static_cast<int>(rng() % 24);
  const Graph base = random_subcubic(rng, n, static_cast<int>(rng() % (n + 1)));
  std::vector<Edge> edges;
  int next = n;
  for (const auto& [u, v] : base.edges()) {
    if (base.degree(u) == 3 && base.degree(v) == 3) {
      edges.emplace_back(u, next);
      edges.emplace_back(next, v);
      ++next;
    } else {
      edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(next, edges);
}

Outcome criterion_6() {
  std::vector<std::string> failures;
  std::map<std::string, int> fallbacks;
  int runs = 0;
  auto run = [&](const std::string& method, const Graph& g, const std::string& label) {
    ++runs;
    try {
      const Construction c = construct(method, g);
      if (!c.coloring.complete() || !verify_coloring(c.graph, c.sequence, c.coloring).empty()) {
        failures.push_back(method + " on " + label + ": invalid coloring");
        return;
      }
      for (const LogEntry& e : c.log)
        if (e.rule.ends_with(".direct")) ++fallbacks[e.rule];
    } catch (const ConstructionError& e) {
      std::string note;
      const std::string form = canonical_form(g).graph6;
      for (const auto& name : fixture_names())
        if (canonical_form(named_graph(name)).graph6 == form) note = " (isomorphic to fixture " + name + ")";
      failures.push_back(method + " on " + label + note + ": case " + e.case_id());
    } catch (const std::exception& e) {
      failures.push_back(method + " on " + label + ": " + e.what());
    }
  };

  int cubic = 0;
  for (int n = 4; n <= 14; n += 2)
    for (const Graph& g : corpus().graphs(n)) {
      ++cubic;
      const std::string g6 = write_graph6(g);
      run("12x6", g, g6);
      run("11223", g, g6);
      if (n <= 10) {
        run("1222", subdivide(g), "S(" + g6 + ")");
        run("112", subdivide(g), "S(" + g6 + ")");
      }
    }
  std::mt19937 rng(kSeed);
  for (int t = 0; t < 1000; ++t) {
    const Graph g = random_3irregular(rng);
    const std::string g6 = write_graph6(g);
    run("1222", g, g6);
    run("112", g, g6);
  }

  std::ostringstream detail;
  detail << runs << " strict runs over " << cubic << " cubic graphs and 1000 random 3-irregular graphs; "
         << failures.size() << " case failures";
  for (const auto& f : failures) detail << "; " << f;
  int total = 0;
  for (const auto& [rule, count] : fallbacks) total += count;
  detail << "; " << total << " steps finished by direct recoloring of their own vertices";
  for (const auto& [rule, count] : fallbacks) detail << " [" << rule << " x" << count << ']';
  return {failures.empty(), detail.str()};
}

std::vector<SSequence> sequences_over(int max_term, int max_length) {
  std::vector<SSequence> out;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int lo) {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int t = lo; t <= max_term; ++t) {
      cur.push_back(t);
      grow(t);
      cur.pop_back();
    }
  };
  grow(1);
  return out;
}

Outcome criterion_7() {
  std::vector<Graph> graphs;
  for (int n = 4; n <= 8; n += 2)
    for (const Graph& g : corpus().graphs(n)) graphs.push_back(g);
  const std::size_t cubic = graphs.size();
  std::mt19937 rng(kSeed + 7);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 && deg[u] < 3 && deg[v] < 3) {
          edges.emplace_back(u, v);
          ++deg[u];
          ++deg[v];
        }
    graphs.push_back(Graph::from_edges(n, edges));
  }
  const auto seqs = sequences_over(3, 4);
  SolverOptions plain;
  plain.symmetry_breaking = false;
  int checks = 0, mismatches = 0, bad_witness = 0, symmetry_mismatches = 0;
  std::string first;
  for (const Graph& g : graphs) {
    for (const SSequence& s : seqs) {
      ++checks;
      const Decision d = decide(g, s);
      const Decision p = decide(g, s, plain);
      const bool expected = oracle::colorable(g.order(), edge_list(g), s.terms());
      if (d.verdict != (expected ? Verdict::Sat : Verdict::Unsat)) {
        ++mismatches;
        if (first.empty()) first = write_graph6(g) + " " + s.to_string();
      }
      if (p.verdict != d.verdict) ++symmetry_mismatches;
      if (d.coloring && !verify_coloring(g, s, *d.coloring).empty()) ++bad_witness;
      if (p.coloring && !verify_coloring(g, s, *p.coloring).empty()) ++bad_witness;
    }
  }
  std::ostringstream detail;
  detail << checks << " (graph, sequence) pairs over " << cubic << " cubic and " << graphs.size() - cubic
         << " random subcubic graphs, " << seqs.size() << " sequences; " << mismatches
         << " oracle mismatches, " << symmetry_mismatches << " symmetry-breaking mismatches, " << bad_witness
         << " invalid witnesses";
  if (!first.empty()) detail << "; first mismatch " << first;
  return {mismatches == 0 && symmetry_mismatches == 0 && bad_witness == 0, detail.str()};
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Outcome criterion_8() {
  std::mt19937 rng(kSeed + 8);
  std::ostringstream detail;
  bool ok = true;

  int roundtrip_fail = 0;
  for (int t = 0; t < 10000; ++t) {
    const int n = static_cast<int>(rng() % 41);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g = Graph::from_edges(n, edges);
    if (!(parse_graph6(write_graph6(g)) == g)) ++roundtrip_fail;
  }
  for (int n = 4; n <= 14; n += 2)
    for (const Graph& g : corpus().graphs(n))
      if (!(parse_graph6(write_graph6(g)) == g)) ++roundtrip_fail;
  ok = ok && roundtrip_fail == 0;
  detail << "graph6 roundtrip: " << roundtrip_fail << " failures on 10000 random + 621 cubic graphs; ";

  std::vector<Graph> corpus12;
  for (int n = 4; n <= 12; n += 2)
    for (const Graph& g : corpus().graphs(n)) corpus12.push_back(g);
  const auto seqs = sequences_over(3, 5);
  int dominance_fail = 0, pairs = 0;
  for (const Graph& g : corpus12) {
    std::vector<bool> sat;
    for (const SSequence& s : seqs) sat.push_back(decide(g, s).verdict == Verdict::Sat);
    for (std::size_t i = 0; i < seqs.size(); ++i)
      for (std::size_t j = 0; j < seqs.size(); ++j)
        if (dominates(seqs[j], seqs[i])) {
          ++pairs;
          if (sat[i] && !sat[j]) ++dominance_fail;
        }
  }
  ok = ok && dominance_fail == 0;
  detail << "dominance: " << dominance_fail << " violations over " << pairs << " (graph, pair) checks; ";

  int lift_fail = 0, lifted = 0;
  const auto lift_seqs = sequences_over(3, 4);
  while (lifted < 500) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Graph g = relabel(random_subcubic(rng, n, static_cast<int>(rng() % (n + 1))), random_perm(rng, n));
    const SSequence& s = lift_seqs[rng() % lift_seqs.size()];
    const Decision d = decide(g, s);
    if (d.verdict != Verdict::Sat) continue;
    ++lifted;
    const Coloring c = lift_subdivision(g, s, *d.coloring);
    if (!verify_coloring(subdivide(g), lifted_sequence(s), c).empty()) ++lift_fail;
  }
  ok = ok && lift_fail == 0;
  detail << "lift: " << lift_fail << " invalid of " << lifted << "; ";

  int canon_fail = 0, canon_graphs = 0;
  std::vector<Graph> canon_corpus = corpus12;
  for (const auto& name : fixture_names()) canon_corpus.push_back(named_graph(name));
  for (const Graph& g : canon_corpus) {
    ++canon_graphs;
    const CanonicalForm base = canonical_form(g);
    for (int t = 0; t < 100; ++t)
      if (canonical_form(relabel(g, random_perm(rng, g.order()))) != base) ++canon_fail;
  }
  ok = ok && canon_fail == 0;
  detail << "canonical form: " << canon_fail << " changes under 100 permutations of each of " << canon_graphs
         << " graphs";
  return {ok, detail.str()};
}

Outcome criterion_9() {
  int checked = 0, disagree = 0, bipartite = 0;
  std::string first;
  for (int n = 4; n <= 12; n += 2)
    for (const Graph& g : corpus().graphs(n)) {
      ++checked;
      const BipartiteReport r = check_bipartite_equivalence(g);
      bipartite += r.bipartite;
      if (!r.agree || !r.complete || r.bipartite != classify(g).is_bipartite) {
        ++disagree;
        if (first.empty()) first = write_graph6(g);
      }
    }
  std::ostringstream detail;
  detail << checked << " cubic graphs (" << bipartite << " bipartite); " << disagree << " disagreements";
  if (!first.empty()) detail << "; first " << first;
  return {disagree == 0, detail.str()};
}

Outcome criterion_10() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int n = 4; n <= 10; n += 2)
    for (const Graph& g : corpus().graphs(n)) graphs.emplace_back(write_graph6(g), g);
  for (const char* name : {"petersen", "k4", "k33", "g1222", "cycle5", "path7"})
    graphs.emplace_back(name, named_graph(name));
  graphs.emplace_back("K1", Graph::from_edges(1, {}));
  std::mt19937 rng(kSeed + 10);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_subcubic(rng, n, static_cast<int>(rng() % (n + 1)));
    graphs.emplace_back(write_graph6(g), g);
  }
  int mismatches = 0, invalid = 0;
  std::string first;
  for (const auto& [label, g] : graphs) {
    const SubsetResult r = max_123_subset(g);
    const int expected = oracle::max_123(g.order(), edge_list(g));
    if (!r.optimal || r.size != expected) {
      ++mismatches;
      if (first.empty()) first = label + " got " + std::to_string(r.size) + " expected " + std::to_string(expected);
    }
    if (r.witness.assigned_count() != r.size || !verify_coloring(g, {1, 2, 3}, r.witness).empty()) ++invalid;
  }
  std::ostringstream detail;
  detail << "max {1,2,3} subset on " << graphs.size() << " graphs with n <= 10: " << mismatches
         << " brute-force mismatches, " << invalid << " invalid witnesses";
  if (!first.empty()) detail << "; first " << first;
  detail << "; the order-38 and order-24 graphs are not reproducible (adjacency not given) and are not run";
  return {mismatches == 0 && invalid == 0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0, max_n = 14;
  app.add_option("--only", only, "Run a single criterion (1..10)")->check(CLI::Range(1, 10));
  app.add_option("--max-n", max_n, "Largest order for the table criteria (14 or 16)")
      ->check(CLI::IsMember({14, 16}));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"length table for (1,2,2,2,2,2,2)", [&] { return criterion_1(max_n); }},
      {"length table for (1,1,2,3,3)", [&] { return criterion_2(max_n); }},
      {"packing chromatic number table", [&] { return criterion_3(max_n); }},
      {"negative certificates", criterion_4},
      {"positive certificates", criterion_5},
      {"constructive sweep in strict mode", criterion_6},
      {"solver vs brute-force oracle", criterion_7},
      {"property suites", criterion_8},
      {"bipartite equivalence", criterion_9},
      {"max {1,2,3} subset vs brute force", criterion_10},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != static_cast<int>(i) + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
