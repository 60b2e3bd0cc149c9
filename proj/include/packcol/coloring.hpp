#pragma once

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "packcol/graph.hpp"
#include "packcol/sequence.hpp"

namespace packcol {

inline constexpr int kUnassigned = -1;

/// Vertex -> slot index into an SSequence. kUnassigned marks vertices left
/// uncolored in a partial coloring.
struct Coloring {
  std::vector<int> slot;

  Coloring() = default;
  explicit Coloring(int n) : slot(n, kUnassigned) {}
  explicit Coloring(std::vector<int> s) : slot(std::move(s)) {}

  int size() const noexcept { return static_cast<int>(slot.size()); }
  int operator[](int v) const { return slot[v]; }
  int& operator[](int v) { return slot[v]; }
  bool assigned(int v) const { return slot[v] != kUnassigned; }
  int assigned_count() const;
  bool complete() const { return assigned_count() == size(); }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Two same-slot vertices closer than the slot's radius allows.
struct Violation {
  int u = 0;
  int v = 0;
  int slot = 0;
  int distance = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class ColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All violated packing constraints, u < v, ordered by (u, v). Unassigned
/// vertices impose nothing. Throws ColoringError on a size mismatch or a slot
/// index outside the sequence.
std::vector<Violation> verify_coloring(const Graph& g, const SSequence& s, const Coloring& c);

/// {"sequence":[...], "assignment":[slot per vertex]} with null for
/// unassigned vertices.
nlohmann::json witness_json(const SSequence& s, const Coloring& c);

/// Inverse of witness_json. Throws ColoringError on malformed input.
std::pair<SSequence, Coloring> witness_from_json(const nlohmann::json& j);

}  // namespace packcol
