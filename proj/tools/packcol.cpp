#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "packcol/canonical.hpp"
#include "packcol/coloring.hpp"
#include "packcol/constructive.hpp"
#include "packcol/enumeration.hpp"
#include "packcol/graph.hpp"
#include "packcol/graph6.hpp"
#include "packcol/harness.hpp"
#include "packcol/sequence.hpp"
#include "packcol/solver.hpp"

using namespace packcol;

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;

/// "@name" selects a fixture; anything else is a graph6 record.
Graph load_graph(const std::string& source) {
  if (!source.empty() && source[0] == '@') return named_graph(source.substr(1));
  return parse_graph6(source);
}

/// Edge list text: "n m" then m lines "u v".
Graph read_edge_list(std::istream& in) {
  int n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw GraphError("edge list must start with \"n m\"");
  std::vector<Edge> edges(m);
  for (auto& [u, v] : edges)
    if (!(in >> u >> v)) throw GraphError("edge list ended early");
  return Graph::from_edges(n, edges);
}

std::string edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

SolverOptions solver_options(std::uint64_t max_nodes, int time_limit_ms, bool no_symmetry) {
  SolverOptions o;
  o.budget.max_nodes = max_nodes;
  o.budget.time_limit = std::chrono::milliseconds(time_limit_ms);
  o.symmetry_breaking = !no_symmetry;
  return o;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Sat: return kExitSat;
    case Verdict::Unsat: return kExitUnsat;
    case Verdict::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-packing colorings of subcubic graphs"};
  app.require_subcommand(1);

  std::string graph_src, sequence_text, family_text = "1,2,2,2,2,2,2", provider = "generate", format = "text";
  std::string method, question, convert_to = "edges", input;
  std::uint64_t max_nodes = 0;
  int time_limit_ms = 0, min_n = 4, max_n = 14, jobs = default_jobs(), order = 0;
  bool subdivide_flag = false, no_symmetry = false, strict = false, with_log = false, bipartite_only = false;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", max_nodes, "Search node limit per solver call (0 = unlimited)");
    sub->add_option("--time-limit-ms", time_limit_ms, "Time limit per solver call (0 = unlimited)");
  };

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a graph is S-packing colorable");
  decide_cmd->add_option("--graph", graph_src, "graph6 text or @fixture")->required();
  decide_cmd->add_option("--sequence", sequence_text, "Sequence, e.g. 1,2,2,3")->required();
  decide_cmd->add_flag("--subdivide", subdivide_flag, "Decide for the subdivision S(G)");
  decide_cmd->add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
  add_budget(decide_cmd);

  auto* packing_cmd = app.add_subcommand("packing", "Packing chromatic number of a graph");
  packing_cmd->add_option("--graph", graph_src, "graph6 text or @fixture")->required();
  packing_cmd->add_flag("--subdivide", subdivide_flag, "Use the subdivision S(G)");
  add_budget(packing_cmd);

  auto* table_cmd = app.add_subcommand("table", "Count cubic graphs by chromatic length under a family");
  table_cmd->add_option("--family", family_text, "Sequence family, e.g. 1,1,2,3,3");
  table_cmd->add_option("--min-n", min_n, "Smallest order");
  table_cmd->add_option("--max-n", max_n, "Largest order")->check(CLI::Range(4, 16));
  table_cmd->add_option("--provider", provider, "generate or catalog:FILE");
  table_cmd->add_option("--jobs", jobs, "Worker threads (default: PACKCOL_JOBS or all cores)");
  table_cmd->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  add_budget(table_cmd);

  auto* screen_cmd = app.add_subcommand("screen", "Search cubic graphs for counterexamples to an open question");
  screen_cmd->add_option("--question", question, "q1..q6")->required();
  screen_cmd->add_option("--min-n", min_n, "Smallest order");
  screen_cmd->add_option("--max-n", max_n, "Largest order")->check(CLI::Range(4, 16));
  screen_cmd->add_option("--provider", provider, "generate or catalog:FILE");
  screen_cmd->add_option("--jobs", jobs, "Worker threads");
  add_budget(screen_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Run a constructive coloring algorithm");
  construct_cmd->add_option("--method", method, "lift, s1333, 12x6, 1222, 11223 or 112")
      ->required()
      ->check(CLI::IsMember({"lift", "s1333", "12x6", "1222", "11223", "112"}));
  construct_cmd->add_option("--graph", graph_src, "graph6 text or @fixture")->required();
  construct_cmd->add_flag("--strict", strict, "Fail on the first proof case that cannot be carried out");
  construct_cmd->add_flag("--log", with_log, "Include the rule log");

  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph6 and edge lists");
  convert_cmd->add_option("--to", convert_to, "edges or graph6")->check(CLI::IsMember({"edges", "graph6"}));
  convert_cmd->add_option("--graph", graph_src, "graph6 text or @fixture (default: read stdin)");
  convert_cmd->add_option("--input", input, "Input file (default: stdin)");

  auto* enum_cmd = app.add_subcommand("enumerate", "List connected cubic graphs of one order as graph6");
  enum_cmd->add_option("--n", order, "Order (even, 4..16)")->required();
  enum_cmd->add_flag("--bipartite", bipartite_only, "Bipartite graphs only");
  enum_cmd->add_option("--provider", provider, "generate or catalog:FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const SolverOptions solver = solver_options(max_nodes, time_limit_ms, no_symmetry);

    if (*decide_cmd) {
      Graph g = load_graph(graph_src);
      if (subdivide_flag) g = subdivide(g);
      const SSequence s = SSequence::parse(sequence_text);
      const Decision d = decide(g, s, solver);
      nlohmann::json out{{"verdict", to_string(d.verdict)}, {"nodes", d.stats.nodes}, {"graph6", write_graph6(g)}};
      if (d.coloring) out["witness"] = witness_json(s, *d.coloring);
      std::cout << out.dump(2) << '\n';
      return exit_for(d.verdict);
    }

    if (*packing_cmd) {
      Graph g = load_graph(graph_src);
      if (subdivide_flag) g = subdivide(g);
      const PackingResult r = packing_chromatic(g, solver);
      nlohmann::json out{{"verdict", to_string(r.verdict)}, {"nodes", r.stats.nodes}};
      if (r.verdict == Verdict::Sat) {
        out["packing_chromatic_number"] = r.value;
        out["witness"] = witness_json(SSequence::packing(r.value), *r.witness);
      } else {
        out["undecided_at"] = r.value;
      }
      std::cout << out.dump(2) << '\n';
      return exit_for(r.verdict);
    }

    if (*table_cmd) {
      auto prov = make_provider(provider);
      TableOptions opts;
      opts.family = SSequence::parse(family_text);
      opts.min_n = min_n;
      opts.max_n = max_n;
      opts.jobs = jobs;
      opts.solver = solver;
      const ChromaticTable t = build_table(*prov, opts);
      if (format == "json") std::cout << table_json(t).dump(2) << '\n';
      else if (format == "csv") std::cout << table_csv(t);
      else std::cout << table_text(t);
      std::cerr << "table: " << t.nodes << " nodes, " << t.seconds << " s\n";
      return kExitSat;
    }

    if (*screen_cmd) {
      auto prov = make_provider(provider);
      const ScreeningReport r = screen(*prov, screen_question(question), min_n, max_n, jobs, solver);
      std::cout << screening_json(r).dump(2) << '\n';
      if (!r.counterexamples.empty()) return kExitUnsat;
      return r.complete ? kExitSat : kExitUnknown;
    }

    if (*construct_cmd) {
      const Graph g = load_graph(graph_src);
      ConstructOptions opts;
      opts.mode = strict ? ConstructMode::Strict : ConstructMode::Lenient;
      try {
        const Construction c = construct(method, g, opts);
        nlohmann::json out{{"method", method},
                           {"graph6", write_graph6(c.graph)},
                           {"witness", witness_json(c.sequence, c.coloring)},
                           {"fell_back", c.fell_back}};
        if (c.root) out["root"] = {c.root->first, c.root->second};
        if (c.fell_back) out["fallback_reason"] = c.fallback_reason;
        if (with_log) {
          out["log"] = nlohmann::json::array();
          for (const auto& e : c.log) out["log"].push_back(log_entry_json(e));
        }
        std::cout << out.dump(2) << '\n';
        return kExitSat;
      } catch (const ConstructionError& e) {
        nlohmann::json out{{"method", e.method()}, {"case", e.case_id()}, {"error", e.what()}};
        std::cout << out.dump(2) << '\n';
        return kExitUnsat;
      }
    }

    if (*convert_cmd) {
      std::ifstream file;
      if (!input.empty()) {
        file.open(input);
        if (!file) throw std::invalid_argument("cannot open " + input);
      }
      std::istream& in = input.empty() ? std::cin : file;
      if (convert_to == "edges") {
        if (!graph_src.empty()) {
          std::cout << edge_list(load_graph(graph_src));
        } else {
          Graph6Reader reader(in);
          while (auto g = reader.next()) std::cout << edge_list(*g);
        }
      } else {
        const Graph g = graph_src.empty() ? read_edge_list(in) : load_graph(graph_src);
        std::cout << write_graph6(g) << '\n';
      }
      return kExitSat;
    }

    if (*enum_cmd) {
      auto prov = make_provider(provider);
      std::vector<Graph> graphs = prov->graphs(order);
      if (bipartite_only) graphs = filter_bipartite(graphs);
      for (const Graph& g : graphs) std::cout << write_graph6(g) << '\n';
      return kExitSat;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitInput;
  } catch (const TableError& e) {
    std::cerr << "table: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const Graph6Error& e) {
    std::cerr << "graph6: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
