#include <doctest.h>

#include <random>

#include "packcol/constructive.hpp"
#include "packcol/enumeration.hpp"
#include "packcol/graph6.hpp"

using namespace packcol;

namespace {

ConstructOptions strict() { return {}; }

ConstructOptions lenient() {
  ConstructOptions o;
  o.mode = ConstructMode::Lenient;
  return o;
}

void check_valid(const Construction& c) {
  REQUIRE(c.coloring.size() == c.graph.order());
  CHECK(c.coloring.complete());
  CHECK(verify_coloring(c.graph, c.sequence, c.coloring).empty());
}

/// Level-coloring steps of the (1,2^6) construction may only use a color 2
/// when a neighbor already holds color 1 at that moment.
bool property_i_12x6(const Construction& c) {
  Coloring replay(c.graph.order());
  for (const LogEntry& e : c.log) {
    if (e.rule == "12x6.level.two") {
      bool blocked = false;
      for (int w : c.graph.neighbors(e.vertex)) blocked = blocked || replay[w] == 0;
      if (!blocked) return false;
    }
    replay[e.vertex] = e.slot;
  }
  return true;
}

/// No vertex of degree <= 2 ends with color 2 unless it lies on the root edge
/// or next to it.
bool property_i_112(const Construction& c) {
  if (!c.root) return true;
  const auto [x, y] = *c.root;
  for (int v = 0; v < c.graph.order(); ++v) {
    if (c.graph.degree(v) > 2 || c.coloring[v] != 2) continue;
    if (std::min(c.graph.distance(v, x), c.graph.distance(v, y)) > 1) return false;
  }
  return true;
}

Graph random_tree(std::mt19937& rng, int n) {
  std::vector<Edge> edges;
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v) {
    int p;
    do p = static_cast<int>(rng() % v);
    while (deg[p] == 3);
    ++deg[p];
    ++deg[v];
    edges.emplace_back(p, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("lift_subdivision") {
  const Graph k2 = named_graph("path2");
  const Coloring c = lift_subdivision(k2, {1, 1}, Coloring(std::vector<int>{0, 1}));
  CHECK(verify_coloring(subdivide(k2), {1, 3, 3}, c).empty());
  CHECK(lifted_sequence({1, 1}) == SSequence{1, 3, 3});

  const Graph c3 = named_graph("cycle3");
  const Coloring c6 = lift_subdivision(c3, {1, 1, 1}, Coloring(std::vector<int>{0, 1, 2}));
  CHECK(verify_coloring(subdivide(c3), {1, 3, 3, 3}, c6).empty());

  const Graph k33 = named_graph("k33");
  const auto side = bipartition(k33);
  const Coloring lifted = lift_subdivision(k33, {1, 1}, Coloring(side));
  CHECK(verify_coloring(subdivide(k33), {1, 3, 3}, lifted).empty());

  CHECK_THROWS_AS(lift_subdivision(k2, {1, 1}, Coloring(std::vector<int>{0, 0})), PreconditionError);
}

TEST_CASE("s1333") {
  const Construction k4 = color_subdivided_1333(named_graph("k4"));
  check_valid(k4);
  CHECK(k4.graph.order() == 10);
  for (int v = 0; v < 4; ++v) CHECK(k4.coloring[v] == 0);
  const Construction pet = color_subdivided_1333(named_graph("petersen"));
  check_valid(pet);
  CHECK(pet.graph.order() == 25);
  check_valid(color_subdivided_1333(named_graph("cycle3")));
  CHECK(color_subdivided_1333(named_graph("cycle3")).graph.order() == 6);
  CHECK_THROWS_AS(color_subdivided_1333(named_graph("complete5")), PreconditionError);
}

TEST_CASE("12x6") {
  for (const char* name : {"petersen", "k4", "k33", "f1p16", "cycle5", "path6", "g1222"}) {
    const Construction c = color_1_2x6(named_graph(name), strict());
    check_valid(c);
    CHECK_MESSAGE(property_i_12x6(c), name);
    CHECK_FALSE(c.fell_back);
  }
  CHECK_THROWS_AS(color_1_2x6(Graph::from_edges(4, {{0, 1}, {2, 3}})), PreconditionError);
  for (int n : {4, 6, 8, 10})
    for (const Graph& g : enumerate_cubic(n)) {
      const Construction c = color_1_2x6(g, strict());
      check_valid(c);
      CHECK(property_i_12x6(c));
    }
}

TEST_CASE("1222") {
  const Construction c5 = color_3irr_1222(named_graph("cycle5"), strict());
  check_valid(c5);
  const Construction g = color_3irr_1222(named_graph("g1222"), strict());
  check_valid(g);
  CHECK(g.coloring.slot == std::vector<int>{3, 2, 1, 1, 2, 0, 0, 3});
  const Graph shuffled = relabel(named_graph("g1222"), std::vector<int>{7, 6, 5, 4, 3, 2, 1, 0});
  check_valid(color_3irr_1222(shuffled, strict()));
  for (int n : {4, 6, 8})
    for (const Graph& h : enumerate_cubic(n)) check_valid(color_3irr_1222(subdivide(h), strict()));
  CHECK_THROWS_AS(color_3irr_1222(named_graph("k4")), PreconditionError);
}

TEST_CASE("11223") {
  for (const char* name : {"petersen", "f1p16", "k4", "fbip14", "cycle7"}) {
    const Construction c = color_11223(named_graph(name), strict());
    check_valid(c);
  }
  for (int n : {4, 6, 8, 10})
    for (const Graph& g : enumerate_cubic(n)) check_valid(color_11223(g, strict()));
}

TEST_CASE("112") {
  const Construction c5 = color_3irr_112(named_graph("cycle5"), strict());
  check_valid(c5);
  CHECK(property_i_112(c5));
  const Construction sp = color_3irr_112(subdivide(named_graph("petersen")), strict());
  check_valid(sp);
  CHECK(property_i_112(sp));
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Graph tree = random_tree(rng, 2 + static_cast<int>(rng() % 20));
    if (!classify(tree).is_3_irregular) continue;
    const Construction c = color_3irr_112(tree, strict());
    check_valid(c);
    CHECK(property_i_112(c));
  }
  for (int n : {4, 6, 8})
    for (const Graph& h : enumerate_cubic(n)) {
      const Construction c = color_3irr_112(subdivide(h), strict());
      check_valid(c);
      CHECK(property_i_112(c));
    }
}

TEST_CASE("strict failures are structured; lenient mode recovers") {
  const Graph g = named_graph("fbip14");
  try {
    color_1_2x6(g, strict());
    FAIL("expected a case failure");
  } catch (const ConstructionError& e) {
    CHECK(e.method() == "12x6");
    CHECK_FALSE(e.case_id().empty());
  }
  check_valid(color_1_2x6(g, lenient()));

  const Graph h = parse_graph6("MwEA@?QA_a@G@H@E?");
  CHECK_THROWS_AS(color_11223(h, strict()), ConstructionError);
  check_valid(color_11223(h, lenient()));
}

TEST_CASE("construct dispatch") {
  check_valid(construct("lift", named_graph("petersen")));
  check_valid(construct("s1333", named_graph("k4")));
  CHECK(construct("lift", named_graph("k33")).sequence == SSequence{1, 3, 3});
  CHECK_THROWS_AS(construct("nope", named_graph("k4")), std::invalid_argument);
  const Construction c = construct("11223", named_graph("petersen"));
  REQUIRE(c.root.has_value());
  CHECK_FALSE(c.log.empty());
  CHECK(log_entry_json(c.log.front()).contains("rule"));
}

TEST_CASE("bipartite equivalence") {
  const BipartiteReport k4 = check_bipartite_equivalence(named_graph("k4"));
  CHECK_FALSE(k4.s_122);
  CHECK_FALSE(k4.s_123);
  CHECK_FALSE(k4.s_133);
  CHECK_FALSE(k4.bipartite);
  CHECK(k4.agree);
  for (const char* name : {"k33", "fbip14"}) {
    const BipartiteReport r = check_bipartite_equivalence(named_graph(name));
    CHECK(r.s_122);
    CHECK(r.s_123);
    CHECK(r.s_133);
    CHECK(r.bipartite);
    CHECK(r.agree);
    CHECK(r.complete);
  }
  CHECK_THROWS_AS(check_bipartite_equivalence(named_graph("cycle5")), PreconditionError);
}
