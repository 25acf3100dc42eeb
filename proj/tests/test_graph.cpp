#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "nbcube/graph.hpp"

using namespace nbcube;

TEST_CASE("graph construction and adjacency", "[graph]") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 1}, {1, 0}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);  // duplicates collapse
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));

  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::out_of_range);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(g.neighbors(4), std::out_of_range);
}

TEST_CASE("neighbor lists come back sorted", "[graph]") {
  Graph g = Graph::from_edges(5, {{3, 0}, {3, 4}, {3, 1}, {2, 3}});
  CHECK(g.neighbors(3) == std::vector<int>{0, 1, 2, 4});
  CHECK(g.min_degree_vertex() == 0);  // ties break to the lowest id
}

TEST_CASE("components are sorted and ordered by smallest member", "[graph]") {
  Graph g = Graph::from_edges(7, {{4, 2}, {2, 6}, {1, 5}, {0, 3}});
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 3});
  CHECK(comps[1] == std::vector<int>{1, 5});
  CHECK(comps[2] == std::vector<int>{2, 4, 6});
}

TEST_CASE("classification precedence", "[graph]") {
  CHECK(classify(Graph(0)) == GraphClass::Empty);
  CHECK(classify(Graph(1)) == GraphClass::Complete);  // K_1
  CHECK(classify(corpus::complete_graph(2)) == GraphClass::Complete);
  CHECK(classify(corpus::complete_graph(5)) == GraphClass::Complete);
  CHECK(classify(Graph(3)) == GraphClass::Disconnected);  // no edges, 3 vertices
  CHECK(classify(corpus::cycle_graph(5)) == GraphClass::Other);
  CHECK(classify(Graph::from_edges(4, {{0, 1}, {2, 3}})) == GraphClass::Disconnected);

  CHECK(std::string(to_string(GraphClass::Empty)) == "empty");
  CHECK(std::string(to_string(GraphClass::Complete)) == "complete");
  CHECK(std::string(to_string(GraphClass::Disconnected)) == "disconnected");
  CHECK(std::string(to_string(GraphClass::Other)) == "other");
}

TEST_CASE("classify_alive agrees with classify on the induced graph", "[graph]") {
  Graph g = corpus::petersen();
  const int n = g.vertex_count();
  std::vector<int> scratch;
  // All 2^10 masks.
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<char> alive(n, 0);
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) {
        alive[v] = 1;
        keep.push_back(v);
      }
    GraphClass direct = classify(induced_subgraph(g, keep).graph);
    GraphClass masked = classify_alive(g, alive, scratch);
    REQUIRE(direct == masked);
  }
}

TEST_CASE("induced subgraph keeps ids and structure straight", "[graph]") {
  Graph g = corpus::cycle_graph(6);
  InducedSubgraph sub = induced_subgraph(g, {1, 2, 4, 5});
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.to_host == std::vector<int>{1, 2, 4, 5});
  CHECK(sub.to_local(4) == 2);
  CHECK(sub.to_local(3) == -1);
  CHECK(sub.graph.adjacent(0, 1));        // 1 -- 2
  CHECK(sub.graph.adjacent(2, 3));        // 4 -- 5
  CHECK_FALSE(sub.graph.adjacent(1, 2));  // 2 -- 4 is not an edge
  CHECK(sub.graph.adjacent(3, 0) == false);  // 5 -- 1 is not an edge either
}

TEST_CASE("path predicate", "[graph]") {
  Graph g = corpus::cycle_graph(6);
  CHECK(is_path(g, {0, 1, 2, 3}));
  CHECK(is_path(g, {4}));
  CHECK_FALSE(is_path(g, {}));
  CHECK_FALSE(is_path(g, {0, 2}));           // gap
  CHECK_FALSE(is_path(g, {0, 1, 0}));        // repeat
  CHECK_FALSE(is_path(g, {0, 1, 2, 1}));     // repeat in the middle
}

TEST_CASE("internally disjoint family predicate", "[graph]") {
  Graph g = corpus::cycle_graph(6);
  PathFamily fam;
  fam.source = 0;
  fam.target = 3;
  fam.paths = {{0, 1, 2, 3}, {0, 5, 4, 3}};
  CHECK(is_internally_disjoint_family(g, fam));

  fam.paths = {{0, 1, 2, 3}, {0, 1, 2, 3}};
  CHECK_FALSE(is_internally_disjoint_family(g, fam));

  Graph h = corpus::complete_graph(5);
  PathFamily shared;
  shared.source = 0;
  shared.target = 4;
  shared.paths = {{0, 1, 4}, {0, 2, 1, 3, 4}};  // 1 reused internally
  CHECK_FALSE(is_internally_disjoint_family(h, shared));

  PathFamily wrong_ends;
  wrong_ends.source = 0;
  wrong_ends.target = 3;
  wrong_ends.paths = {{0, 1, 2}};
  CHECK_FALSE(is_internally_disjoint_family(g, wrong_ends));
}

TEST_CASE("fan predicate", "[graph]") {
  Graph g = corpus::star_graph(4);
  Fan f;
  f.apex = 0;
  f.paths = {{0, 1}, {0, 2}, {0, 3}};
  CHECK(is_fan(g, f));

  f.paths = {{0, 1}, {0, 1}};  // duplicate target
  CHECK_FALSE(is_fan(g, f));

  Graph h = corpus::cycle_graph(5);
  Fan walk;
  walk.apex = 0;
  walk.paths = {{0, 1, 2}, {0, 4, 3, 2}};  // same target twice
  CHECK_FALSE(is_fan(h, walk));

  Fan ok;
  ok.apex = 0;
  ok.paths = {{0, 1, 2}, {0, 4, 3}};
  CHECK(is_fan(h, ok));
}
