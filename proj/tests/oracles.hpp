#pragma once

// Brute-force reference implementations, written against an adjacency
// matrix and plain recursion so they share no code with the library.

#include <algorithm>
#include <vector>

#include "nbcube/graph.hpp"

namespace oracles {

inline std::vector<std::vector<char>> matrix_of(const nbcube::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v][w] = 1;
  return adj;
}

// 0 empty, 1 complete, 2 disconnected, 3 other; mirrors GraphClass order.
inline int classify_mask(const std::vector<std::vector<char>>& adj,
                         const std::vector<char>& alive) {
  const int n = static_cast<int>(adj.size());
  int count = 0, seed = -1;
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      ++count;
      if (seed < 0) seed = v;
    }
  if (count == 0) return 0;

  bool complete = true;
  for (int v = 0; v < n && complete; ++v)
    for (int w = v + 1; w < n && complete; ++w)
      if (alive[v] && alive[w] && !adj[v][w]) complete = false;
  if (complete) return 1;

  std::vector<char> seen(n, 0);
  std::vector<int> stack{seed};
  seen[seed] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w = 0; w < n; ++w)
      if (adj[v][w] && alive[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached < count ? 2 : 3;
}

inline bool mask_disconnected(const std::vector<std::vector<char>>& adj,
                              const std::vector<char>& alive) {
  return classify_mask(adj, alive) == 2;
}

// Minimum vertex cut by ascending-size subset enumeration; complete graphs
// (every removal stays complete) give n - 1.
inline int brute_vertex_connectivity(const nbcube::Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  auto adj = matrix_of(g);
  std::vector<char> alive(n, 1);
  std::vector<int> chosen;

  auto search = [&](auto&& self, int next, int want) -> bool {
    if (want == 0) return mask_disconnected(adj, alive);
    for (int v = next; v < n; ++v) {
      alive[v] = 0;
      if (self(self, v + 1, want - 1)) {
        alive[v] = 1;
        return true;
      }
      alive[v] = 1;
    }
    return false;
  };
  for (int size = 0; size <= n - 2; ++size)
    if (search(search, 0, size)) return size;
  return n - 1;
}

struct BruteNbc {
  int value = -1;  // -1 when the budget is exhausted
  std::vector<int> witness;
  int classification = 3;  // classify_mask code
};

// Unpruned level-by-level scan in lexicographic order; independent of the
// library search, including its own closed-neighborhood removal.
inline BruteNbc brute_neighbor_connectivity(const nbcube::Graph& g, int budget) {
  const int n = g.vertex_count();
  auto adj = matrix_of(g);
  std::vector<char> everyone(n, 1);
  int whole = classify_mask(adj, everyone);
  if (whole != 3) return {0, {}, whole};

  std::vector<char> alive(n, 1);
  std::vector<int> chosen;
  BruteNbc hit;

  auto evaluate = [&]() {
    std::fill(alive.begin(), alive.end(), 1);
    for (int u : chosen) {
      alive[u] = 0;
      for (int w = 0; w < n; ++w)
        if (adj[u][w]) alive[w] = 0;
    }
    return classify_mask(adj, alive);
  };
  auto search = [&](auto&& self, int next, int want) -> bool {
    if (want == 0) {
      int cls = evaluate();
      if (cls == 3) return false;
      hit.witness = chosen;
      hit.classification = cls;
      return true;
    }
    for (int v = next; v < n; ++v) {
      chosen.push_back(v);
      if (self(self, v + 1, want - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int level = 1; level <= budget && level <= n; ++level)
    if (search(search, 0, level)) {
      hit.value = level;
      return hit;
    }
  return {};
}

}  // namespace oracles
