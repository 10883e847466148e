#include <random>

#include "doctest.h"
#include "support.hpp"
#include "symtree/decomposition.hpp"
#include "symtree/error.hpp"

using namespace symtree;
using symtree::testing::make_graph;

namespace {

Graph c5() {
  return make_graph({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
}

Graph petersen() {
  std::vector<std::string> v;
  for (int i = 0; i < 10; ++i) v.push_back(std::to_string(i));
  symtree::testing::NamedEdges e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(std::to_string(i), std::to_string((i + 1) % 5));
    e.emplace_back(std::to_string(i), std::to_string(i + 5));
    e.emplace_back(std::to_string(5 + i), std::to_string(5 + (i + 2) % 5));
  }
  return make_graph(v, e);
}

Graph complete(std::size_t n) { return symtree::testing::graph_from_mask(n, ~std::uint64_t{0}); }

}  // namespace

TEST_CASE("validation reports the first problem") {
  const Graph g = c5();
  const Edge e12{0, 1}, e23{1, 2}, e34{2, 3}, e45{3, 4}, e15{0, 4};
  CHECK(validate(EdgeDecomposition(g, {{e12, e15, e34}, {e23, e45}}, DecompositionKind::partition)).ok);

  const auto missing = validate(EdgeDecomposition(g, {{e12, e15, e34}, {e23}}, DecompositionKind::partition));
  CHECK_FALSE(missing.ok);
  CHECK(missing.reason == "edge not covered");
  CHECK(missing.edge == std::pair<std::string, std::string>{"4", "5"});

  const auto twice = validate(EdgeDecomposition(g, {{e12, e15, e34}, {e23, e45, e12}}, DecompositionKind::partition));
  CHECK(twice.reason == "edge in more than one class");
  CHECK(validate(EdgeDecomposition(g, {{e12, e15, e34}, {e23, e45, e12}}, DecompositionKind::decomposition)).ok);

  const auto p4 = validate(EdgeDecomposition(g, {{e12, e23, e34}, {e45, e15}}, DecompositionKind::partition));
  CHECK(p4.reason == "class is not a cograph");
  CHECK(p4.witness == P4{"1", "2", "3", "4"});

  const auto stray = validate(EdgeDecomposition(g, {{e12, e15, e34, Edge{0, 2}}, {e23, e45}}, DecompositionKind::partition));
  CHECK(stray.reason == "class edge not in base graph");
  CHECK(validate(EdgeDecomposition(g, {{}, {e12, e23, e34, e45, e15}}, DecompositionKind::decomposition)).reason ==
        "empty class");
  CHECK_THROWS_AS(EdgeDecomposition(g, {{Edge{0, 9}}}, DecompositionKind::partition), InputError);
}

TEST_CASE("edge coloring stays within max degree + 1") {
  std::mt19937_64 rng(7);
  std::vector<Graph> graphs{petersen(), complete(5), complete(6), complete(7), hypercube(3), c5()};
  for (int i = 0; i < 100; ++i) graphs.push_back(symtree::testing::random_graph(rng, 5 + i % 20, 0.3));
  for (const Graph& g : graphs) {
    const EdgeColoring col = proper_edge_coloring(g);
    REQUIRE(is_proper_edge_coloring(g, col));
    const EdgeDecomposition p = coloring_to_partition(g, col);
    CHECK(validate(p).ok);
    CHECK(p.class_count() <= max_degree(g) + 1);
  }
  CHECK(coloring_to_partition(c5(), proper_edge_coloring(c5())).class_count() == 3);
  CHECK_THROWS_AS(coloring_to_partition(c5(), EdgeColoring(5, 0)), InputError);
  CHECK(proper_edge_coloring(Graph::from_indexed({"a"}, {})).empty());
}

TEST_CASE("coarsening merges until no union is a cograph") {
  const Graph k4 = complete(4);
  const EdgeDecomposition p = coloring_to_partition(k4, proper_edge_coloring(k4));
  const CoarsenResult r = coarsen(p);
  CHECK(r.subset_exact);
  CHECK(r.decomposition.class_count() == 1);
  CHECK(validate(r.decomposition).ok);

  const Graph g = c5();
  const CoarsenResult rc = coarsen(coloring_to_partition(g, proper_edge_coloring(g)));
  CHECK(rc.decomposition.class_count() == 2);
  CHECK(validate(rc.decomposition).ok);
}

TEST_CASE("cotree sets represent the graph") {
  const Graph g = c5();
  const auto r = exact_min_decomposition(g, DecompositionKind::partition, 3);
  REQUIRE(r.witness.has_value());
  const CotreeSet ts = to_cotree_set(*r.witness);
  CHECK(ts.trees.size() == 2);
  CHECK(represents(ts, g));
  const Graph more = make_graph({"1", "2", "3", "4", "5"},
                                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}, {"1", "3"}});
  CHECK_FALSE(represents(ts, more));
  CHECK_THROWS_AS(represents(ts, complete(5)), InputError);
  CotreeSet partial{ts.vertices, {ts.trees.front()}};
  CHECK_FALSE(represents(partial, g));
}

TEST_CASE("exact search on small graphs") {
  const auto r5 = exact_min_decomposition(c5(), DecompositionKind::decomposition, 3);
  CHECK(r5.status == SearchStatus::optimal);
  CHECK(r5.k == 2);
  CHECK(validate(*r5.witness).ok);

  const Graph p4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(exact_min_decomposition(p4, DecompositionKind::partition, 3).k == 2);
  CHECK(exact_min_decomposition(complete(6), DecompositionKind::partition, 3).k == 1);
  CHECK(exact_min_decomposition(c5(), DecompositionKind::partition, 1).status == SearchStatus::infeasible);

  const auto empty = exact_min_decomposition(Graph::from_indexed({"a", "b"}, {}), DecompositionKind::partition, 2);
  CHECK(empty.status == SearchStatus::optimal);
  CHECK(empty.k == 0);

  SearchBudget tiny;
  tiny.max_nodes = 3;
  CHECK(exact_min_decomposition(petersen(), DecompositionKind::partition, 4, tiny).status == SearchStatus::unknown);
}

TEST_CASE("enumeration counts decompositions up to class order") {
  // P4 a-b-c-d: 2-partitions are the splits of its 3 edges with the middle
  // edge not sharing a class with both ends: {ab,bc | cd}, {ab | bc,cd},
  // {ab,cd | bc}.
  const Graph p4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  std::vector<EdgeDecomposition> seen;
  const auto r = enumerate_decompositions(p4, DecompositionKind::partition, 2, [&](const EdgeDecomposition& d) {
    seen.push_back(d);
    return true;
  });
  CHECK(r.complete);
  CHECK(r.count == 3);
  for (const auto& d : seen) CHECK(validate(d).ok);

  // Decompositions also allow overlaps: every edge of P4 in {1}, {2} or {1,2}
  // with both classes nonempty and no class holding all three edges.
  const auto rd = enumerate_decompositions(p4, DecompositionKind::decomposition, 2, [](const auto&) { return true; });
  std::size_t expected = 0;
  for (int code = 0; code < 27; ++code) {
    int m1 = 0, m2 = 0;
    for (int e = 0, c = code; e < 3; ++e, c /= 3) {
      if (c % 3 != 1) m1 |= 1 << e;
      if (c % 3 != 0) m2 |= 1 << e;
    }
    if (m1 && m2 && m1 != 7 && m2 != 7) ++expected;
  }
  CHECK(rd.count == expected / 2);

  const auto stop = enumerate_decompositions(p4, DecompositionKind::partition, 2, [](const auto&) { return false; });
  CHECK_FALSE(stop.complete);
  CHECK(stop.count == 1);
}

TEST_CASE("decomposition JSON and DOT") {
  const Graph g = c5();
  const auto r = exact_min_decomposition(g, DecompositionKind::partition, 3);
  const std::string json = to_json(*r.witness);
  CHECK(json.starts_with("{\"kind\":\"partition\",\"classes\":[[[\"1\",\"2\"]"));
  CHECK(parse_decomposition_json(json, g) == *r.witness);
  CHECK_THROWS_AS(parse_decomposition_json("{\"kind\":\"cover\",\"classes\":[]}", g), InputError);
  CHECK_THROWS_AS(parse_decomposition_json("{\"kind\":\"partition\",\"classes\":[[[\"1\",\"9\"]]]}", g), InputError);
  const std::string dot = to_dot(*r.witness);
  CHECK(dot.starts_with("graph G {\n"));
  CHECK(dot.find("[color=red, style=solid, label=\"2\"]") != std::string::npos);
}

namespace {

// Least k <= 3 such that some assignment of a nonempty class subset per edge
// (a single class for partitions) gives k classes that all induce cographs.
std::size_t naive_min(const Graph& g, DecompositionKind kind) {
  const std::size_t m = g.size();
  if (m == 0) return 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<int> choices;
    for (int s = 1; s < 1 << k; ++s) {
      if (kind == DecompositionKind::decomposition || (s & (s - 1)) == 0) choices.push_back(s);
    }
    std::vector<std::size_t> digit(m, 0);
    while (true) {
      std::vector<std::vector<Edge>> classes(k);
      for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t i = 0; i < k; ++i) {
          if (choices[digit[e]] >> i & 1) classes[i].push_back(g.edges()[e]);
        }
      }
      const bool ok = std::all_of(classes.begin(), classes.end(), [&](const auto& c) {
        return !c.empty() && is_cograph(Graph::from_indexed(g.vertices(), c));
      });
      if (ok) return k;
      std::size_t e = 0;
      while (e < m && ++digit[e] == choices.size()) digit[e++] = 0;
      if (e == m) break;
    }
  }
  return 4;
}

}  // namespace

TEST_CASE("exact search matches naive enumeration") {
  std::mt19937_64 rng(11);
  std::size_t checked = 0;
  while (checked < 40) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 6)(rng);
    const Graph g = symtree::testing::random_graph(rng, n, 0.5);
    if (g.size() > 8) continue;
    ++checked;
    CAPTURE(to_json(g));
    const auto part = exact_min_decomposition(g, DecompositionKind::partition, 3);
    const auto dec = exact_min_decomposition(g, DecompositionKind::decomposition, 3);
    REQUIRE(part.status == SearchStatus::optimal);
    REQUIRE(dec.status == SearchStatus::optimal);
    CHECK(part.k == naive_min(g, DecompositionKind::partition));
    if (g.size() <= 6) CHECK(dec.k == naive_min(g, DecompositionKind::decomposition));
    CHECK(dec.k <= part.k);
    if (part.k > 0) {
      CHECK(validate(*part.witness).ok);
      CHECK(validate(*dec.witness).ok);
      CHECK(part.witness->class_count() == part.k);
    }
  }
}

TEST_CASE("coloring extremes") {
  const Graph triangle = complete(3);
  const auto tri = coloring_to_partition(triangle, proper_edge_coloring(triangle));
  CHECK(tri.class_count() == 3);
  const Graph star = make_graph({"c", "1", "2", "3", "4"}, {{"c", "1"}, {"c", "2"}, {"c", "3"}, {"c", "4"}});
  const auto s = coloring_to_partition(star, proper_edge_coloring(star));
  CHECK(s.class_count() == 4);
  CHECK(coarsen(s).decomposition.class_count() == 1);
}
