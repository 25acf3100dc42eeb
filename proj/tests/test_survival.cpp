#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "nbcube/cube.hpp"
#include "nbcube/survival.hpp"

using namespace nbcube;

TEST_CASE("fault sets normalize and mask correctly", "[survival]") {
  Graph g = corpus::cycle_graph(6);
  FaultSet u(g, {3, 1, 3});
  CHECK(u.vertices() == std::vector<int>{1, 3});
  CHECK(u.size() == 2);
  CHECK(u.closed_neighborhood() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(u.healthy_vertices() == std::vector<int>{5});
  CHECK(u.is_suppressed(0));
  CHECK(u.is_suppressed(1));
  CHECK(u.is_healthy(5));
  CHECK_THROWS_AS(FaultSet(g, {9}), std::out_of_range);

  FaultSet none(g, {});
  CHECK(none.size() == 0);
  CHECK(none.healthy_vertices().size() == 6);
}

TEST_CASE("survival subgraph keeps host ids", "[survival]") {
  Graph g = corpus::cycle_graph(6);
  InducedSubgraph sub = survival_subgraph(g, FaultSet(g, {0}));
  CHECK(sub.to_host == std::vector<int>{2, 3, 4});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.adjacent(0, 1));
  CHECK(sub.graph.adjacent(1, 2));
  CHECK_FALSE(sub.graph.adjacent(0, 2));
}

TEST_CASE("search handles already-qualifying graphs at level zero", "[survival]") {
  NbcResult k5 = neighbor_connectivity_exact(corpus::complete_graph(5), 0);
  CHECK(k5.value == 0);
  CHECK(k5.witness.empty());
  CHECK(k5.classification == GraphClass::Complete);

  NbcResult scattered = neighbor_connectivity_exact(Graph(3), 0);
  CHECK(scattered.value == 0);
  CHECK(scattered.classification == GraphClass::Disconnected);

  NbcResult empty = neighbor_connectivity_exact(Graph(0), 0);
  CHECK(empty.value == 0);
  CHECK(empty.classification == GraphClass::Empty);
}

TEST_CASE("search finds the first witness in lexicographic order", "[survival]") {
  NbcResult c4 = neighbor_connectivity_exact(corpus::cycle_graph(4), 2);
  CHECK(c4.value == 1);
  CHECK(c4.witness == std::vector<int>{0});
  CHECK(c4.classification == GraphClass::Complete);  // lone far vertex

  NbcResult c6 = neighbor_connectivity_exact(corpus::cycle_graph(6), 3);
  CHECK(c6.value == 2);
  CHECK(c6.witness == std::vector<int>{0, 1});
  CHECK(c6.classification == GraphClass::Complete);  // the surviving edge 3--4

  NbcResult star = neighbor_connectivity_exact(corpus::star_graph(5), 2);
  CHECK(star.value == 1);
  CHECK(star.witness == std::vector<int>{0});
  CHECK(star.classification == GraphClass::Empty);  // center erases everything

  NbcResult pet = neighbor_connectivity_exact(corpus::petersen(), 3);
  CHECK(pet.value == 2);
  CHECK(pet.witness == std::vector<int>{0, 1});
}

TEST_CASE("search agrees with the unpruned oracle on the corpus", "[survival]") {
  for (const auto& [name, g] : corpus::property_corpus()) {
    INFO(name);
    auto expect = oracles::brute_neighbor_connectivity(g, g.vertex_count());
    REQUIRE(expect.value >= 0);
    NbcResult got = neighbor_connectivity_exact(g, g.vertex_count());
    CHECK(got.value == expect.value);
    CHECK(got.witness == expect.witness);
    CHECK(static_cast<int>(got.classification) == expect.classification);
  }
}

TEST_CASE("vertex-transitive pruning changes nothing", "[survival]") {
  for (const auto& [name, g] : corpus::transitive_corpus()) {
    INFO(name);
    NbcResult plain = neighbor_connectivity_exact(g, g.vertex_count());
    NbcResult pruned = neighbor_connectivity_exact(g, g.vertex_count(),
                                                   Symmetry::VertexTransitive);
    CHECK(plain.value == pruned.value);
    CHECK(plain.witness == pruned.witness);
    CHECK(plain.classification == pruned.classification);
  }
}

TEST_CASE("worker count never changes the answer", "[survival]") {
  Graph g = build_cube(CubeSpec(3, 2));
  NbcResult base = neighbor_connectivity_exact(g, 4);
  for (int workers : {2, 3, 5}) {
    NbcResult r = neighbor_connectivity_exact(g, 4, Symmetry::None, workers);
    CHECK(r.value == base.value);
    CHECK(r.witness == base.witness);
    CHECK(r.classification == base.classification);
  }
  NbcResult pruned = neighbor_connectivity_exact(g, 4,
                                                 Symmetry::VertexTransitive, 4);
  CHECK(pruned.value == base.value);
  CHECK(pruned.witness == base.witness);
}

TEST_CASE("budget exhaustion reports the budget", "[survival]") {
  Graph g = corpus::cycle_graph(6);
  try {
    neighbor_connectivity_exact(g, 1);
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(e.budget == 1);
  }
  CHECK_THROWS_AS(neighbor_connectivity_exact(corpus::cycle_graph(4), 0),
                  BudgetExhausted);
  CHECK_THROWS_AS(neighbor_connectivity_exact(g, -1), std::invalid_argument);
  CHECK_THROWS_AS(neighbor_connectivity_exact(g, 2, Symmetry::None, 0),
                  std::invalid_argument);
}

TEST_CASE("closed-form values across the theorem ranges", "[survival]") {
  const int one_dim[] = {0, 0, 1, 1, 2, 2, 2};  // k = 2..8
  for (int k = 2; k <= 8; ++k)
    CHECK(neighbor_connectivity_formula(1, k) == one_dim[k - 2]);
  CHECK(neighbor_connectivity_formula(1, 50) == 2);

  const int binary[] = {1, 2, 2, 3, 3, 4};  // n = 2..7, k = 2
  for (int n = 2; n <= 7; ++n)
    CHECK(neighbor_connectivity_formula(n, 2) == binary[n - 2]);

  for (int n = 2; n <= 6; ++n)
    for (int k = 3; k <= 6; ++k)
      CHECK(neighbor_connectivity_formula(n, k) == n);

  CHECK_THROWS_AS(neighbor_connectivity_formula(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(neighbor_connectivity_formula(2, 1), std::invalid_argument);
}

TEST_CASE("survival connectivity floor check", "[survival]") {
  CubeSpec t(3, 3);
  Graph g = build_cube(t);
  auto rep = survival_lower_bound_check(g, FaultSet(g, {0}), 3, 3);
  CHECK(rep.bound == 4);
  CHECK(rep.survival_connectivity >= 4);
  CHECK(rep.pass);

  auto two = survival_lower_bound_check(g, FaultSet(g, {0, 13}), 3, 3);
  CHECK(two.bound == 2);
  CHECK(two.pass);

  CubeSpec h(3, 2);
  Graph q3 = build_cube(h);
  auto hyp = survival_lower_bound_check(q3, FaultSet(q3, {0}), 3, 2);
  CHECK(hyp.bound == 1);
  CHECK(hyp.pass);
  auto clamped = survival_lower_bound_check(q3, FaultSet(q3, {0, 7}), 3, 2);
  CHECK(clamped.bound == 0);  // n - 2l goes negative, floor clamps to zero
  CHECK(clamped.pass);

  CHECK_THROWS_AS(survival_lower_bound_check(q3, FaultSet(q3, {0, 3, 5}), 3, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      survival_lower_bound_check(g, FaultSet(g, {0, 1, 2, 5}), 3, 3),
      std::invalid_argument);
}

TEST_CASE("neighbor connectivity never beats plain connectivity", "[survival]") {
  for (const auto& [name, g] : corpus::property_corpus()) {
    INFO(name);
    auto rep = nbc_le_connectivity_check(g, Symmetry::None);
    CHECK(rep.pass);
    CHECK(rep.neighbor_connectivity <= rep.connectivity);
  }
}
