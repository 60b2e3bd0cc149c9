#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packcol/coloring.hpp"
#include "packcol/graph.hpp"
#include "packcol/level_ordering.hpp"
#include "packcol/sequence.hpp"
#include "packcol/solver.hpp"

namespace packcol {

// Constructive colorings of subcubic graphs. Each algorithm colors the levels
// of a level ordering from the deepest level up, then colors the root edge
// with a fixed case analysis, recoloring nearby vertices by their subsidiary
// colors where needed.
//
// Frozen slot names (slot index -> color):
//   lift / s1333: 0 -> 1,  1.. -> 3a, 3b, 3c (lift: 2*s_i+1)
//   12x6:         0 -> 1,  1..6 -> 2a..2f
//   1222:         0 -> 1,  1..3 -> 2a, 2b, 2c
//   11223:        0 -> 1a, 1 -> 1b, 2 -> 2a, 3 -> 2b, 4 -> 3
//   112:          0 -> 1a, 1 -> 1b, 2 -> 2

enum class ConstructMode {
  /// Unmatched proof cases raise ConstructionError.
  Strict,
  /// A failed proof step is undone and the vertices around it are recolored
  /// by exhaustive local search; if that fails too, the exact solver colors
  /// the whole graph.
  Lenient,
};

struct ConstructOptions {
  ConstructMode mode = ConstructMode::Strict;
  /// Budget for solver calls (the (1,1,1) base coloring and lenient fallback).
  SolverOptions solver;
};

/// One rule application: vertex painted with slot (and subsidiary, or -1).
struct LogEntry {
  int vertex = 0;
  int slot = 0;
  int subsidiary = -1;
  std::string rule;
};

struct Construction {
  /// The graph that was colored (S(G) for the subdivision methods).
  Graph graph;
  SSequence sequence{1};
  Coloring coloring;
  std::vector<LogEntry> log;
  /// Root edge of the level ordering, when one was used.
  std::optional<Edge> root;
  /// Set in lenient mode when a proof case failed and the solver was used.
  bool fell_back = false;
  std::string fallback_reason;
};

/// A proof step could not be carried out on this input.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string method, std::string case_id, const std::string& detail)
      : std::runtime_error(method + ": case " + case_id + " failed: " + detail),
        method_(std::move(method)), case_id_(std::move(case_id)) {}

  const std::string& method() const noexcept { return method_; }
  const std::string& case_id() const noexcept { return case_id_; }

 private:
  std::string method_;
  std::string case_id_;
};

/// Input violates an algorithm's precondition (degree, irregularity,
/// connectivity, invalid input coloring).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (1, 2*s1+1, ..., 2*sk+1).
SSequence lifted_sequence(const SSequence& s);

/// Colors S(g): subdivision vertices take slot 0 (radius 1), originals keep
/// their slot shifted by one. c must be a complete valid s-coloring of g.
Coloring lift_subdivision(const Graph& g, const SSequence& s, const Coloring& c);

/// (1,3,3,3)-coloring of S(g) for subcubic g: K4 components via a proper edge
/// 3-coloring, everything else by lifting a (1,1,1)-coloring.
Construction color_subdivided_1333(const Graph& g, const ConstructOptions& opts = {});

/// (1,2,2,2,2,2,2)-coloring of a connected subcubic graph.
Construction color_1_2x6(const Graph& g, const ConstructOptions& opts = {});

/// (1,2,2,2)-coloring of a connected 3-irregular subcubic graph.
Construction color_3irr_1222(const Graph& g, const ConstructOptions& opts = {});

/// (1,1,2,2,3)-coloring of a connected subcubic graph.
Construction color_11223(const Graph& g, const ConstructOptions& opts = {});

/// (1,1,2)-coloring of a connected 3-irregular subcubic graph.
Construction color_3irr_112(const Graph& g, const ConstructOptions& opts = {});

/// Dispatch by method name: lift, s1333, 12x6, 1222, 11223, 112. "lift"
/// colors g with the solver under (1,1,1,...) of minimum length and lifts it.
Construction construct(const std::string& method, const Graph& g, const ConstructOptions& opts = {});

struct BipartiteReport {
  bool s_122 = false;
  bool s_123 = false;
  bool s_133 = false;
  bool bipartite = false;
  /// All four verdicts equal.
  bool agree = false;
  /// False if a solver budget ran out (verdicts then are not trustworthy).
  bool complete = true;
};

/// Evaluates S(g) (1,2,2)/(1,2,3)/(1,3,3)-colorability and bipartiteness of
/// g. Requires minimum degree >= 3.
BipartiteReport check_bipartite_equivalence(const Graph& g, const SolverOptions& opts = {});

nlohmann::json log_entry_json(const LogEntry& e);

}  // namespace packcol
