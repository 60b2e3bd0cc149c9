#include "packcol/coloring.hpp"

#include <algorithm>
#include <string>

namespace packcol {

int Coloring::assigned_count() const {
  return static_cast<int>(std::count_if(slot.begin(), slot.end(), [](int s) { return s != kUnassigned; }));
}

std::vector<Violation> verify_coloring(const Graph& g, const SSequence& s, const Coloring& c) {
  if (c.size() != g.order())
    throw ColoringError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                        std::to_string(g.order()));
  for (int v = 0; v < c.size(); ++v)
    if (c[v] != kUnassigned && (c[v] < 0 || c[v] >= s.length()))
      throw ColoringError("vertex " + std::to_string(v) + " uses slot " + std::to_string(c[v]) +
                          " outside sequence of length " + std::to_string(s.length()));
  std::vector<Violation> out;
  for (int u = 0; u < g.order(); ++u) {
    if (!c.assigned(u)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (c[v] != c[u]) continue;
      const int d = g.distance(u, v);
      if (d <= s[c[u]]) out.push_back({u, v, c[u], d});
    }
  }
  return out;
}

nlohmann::json witness_json(const SSequence& s, const Coloring& c) {
  nlohmann::json assignment = nlohmann::json::array();
  for (int v = 0; v < c.size(); ++v) {
    if (c.assigned(v))
      assignment.push_back(c[v]);
    else
      assignment.push_back(nullptr);
  }
  return {{"sequence", s.terms()}, {"assignment", std::move(assignment)}};
}

std::pair<SSequence, Coloring> witness_from_json(const nlohmann::json& j) {
  try {
    SSequence s(j.at("sequence").get<std::vector<int>>());
    const auto& a = j.at("assignment");
    if (!a.is_array()) throw ColoringError("assignment must be an array");
    Coloring c(static_cast<int>(a.size()));
    for (std::size_t v = 0; v < a.size(); ++v)
      if (!a[v].is_null()) c.slot[v] = a[v].get<int>();
    return {std::move(s), std::move(c)};
  } catch (const nlohmann::json::exception& e) {
    throw ColoringError(std::string("malformed witness: ") + e.what());
  }
}

}  // namespace packcol
