#pragma once

// Small named graphs shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nbcube/graph.hpp"

namespace corpus {

inline nbcube::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return nbcube::Graph::from_edges(n, e);
}

inline nbcube::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return nbcube::Graph::from_edges(n, e);
}

inline nbcube::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return nbcube::Graph::from_edges(n, e);
}

// Vertex 0 is the center.
inline nbcube::Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return nbcube::Graph::from_edges(leaves + 1, e);
}

inline nbcube::Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return nbcube::Graph::from_edges(a + b, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline nbcube::Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return nbcube::Graph::from_edges(10, e);
}

// Triangular prism: triangles 0,1,2 and 3,4,5 joined by rungs.
inline nbcube::Graph prism() {
  return nbcube::Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline nbcube::Graph circulant(int n, const std::vector<int>& jumps) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j : jumps) e.emplace_back(i, (i + j) % n);
  return nbcube::Graph::from_edges(n, e);
}

// Random spanning tree plus `extra` chords; avoids distribution classes so
// the edge set is identical on every platform.
inline nbcube::Graph random_connected(int n, int extra, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % v), v);
  int added = 0;
  int guard = 0;
  while (added < extra && ++guard < 1000) {
    int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % n);
    if (a == b) continue;
    bool dup = false;
    for (auto& [x, y] : e)
      if ((x == a && y == b) || (x == b && y == a)) dup = true;
    if (dup) continue;
    e.emplace_back(a, b);
    ++added;
  }
  return nbcube::Graph::from_edges(n, e);
}

struct NamedGraph {
  std::string name;
  nbcube::Graph graph;
};

// Mixed bag for invariant checks (kappa oracle, domination, search oracle).
inline std::vector<NamedGraph> property_corpus() {
  std::vector<NamedGraph> out;
  for (int n = 3; n <= 8; ++n)
    out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (int n = 2; n <= 5; ++n)
    out.push_back({"K" + std::to_string(n), complete_graph(n)});
  out.push_back({"P4", path_graph(4)});
  out.push_back({"P6", path_graph(6)});
  out.push_back({"star5", star_graph(5)});
  out.push_back({"K33", complete_bipartite(3, 3)});
  out.push_back({"prism", prism()});
  out.push_back({"petersen", petersen()});
  out.push_back({"circ8-12", circulant(8, {1, 2})});
  out.push_back({"rand8", random_connected(8, 4, 11)});
  out.push_back({"rand9", random_connected(9, 5, 23)});
  out.push_back({"rand10", random_connected(10, 6, 37)});
  return out;
}

// Vertex-transitive members only; safe for the pruned search comparison.
inline std::vector<NamedGraph> transitive_corpus() {
  std::vector<NamedGraph> out;
  for (int n = 4; n <= 12; ++n)
    out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (int n = 4; n <= 6; ++n)
    out.push_back({"K" + std::to_string(n), complete_graph(n)});
  out.push_back({"K33", complete_bipartite(3, 3)});
  out.push_back({"prism", prism()});
  out.push_back({"petersen", petersen()});
  out.push_back({"circ8-12", circulant(8, {1, 2})});
  out.push_back({"circ10-12", circulant(10, {1, 2})});
  out.push_back({"circ12-13", circulant(12, {1, 3})});
  return out;
}

}  // namespace corpus
