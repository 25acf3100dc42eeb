#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nbcube {

using Path = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1, immutable once built.
/// Adjacency lists are sorted ascending and contain no duplicates.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int vertex_count) : adj_(check_count(vertex_count)) {}

  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
      g.require_vertex(u);
      g.require_vertex(v);
      if (u == v) throw std::invalid_argument("self loop rejected");
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adj_) total += list.size();
    return total / 2;
  }

  const std::vector<int>& neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  int min_degree_vertex() const {
    if (adj_.empty()) throw std::logic_error("empty graph has no vertices");
    int best = 0;
    for (int v = 1; v < vertex_count(); ++v)
      if (adj_[v].size() < adj_[best].size()) best = v;
    return best;
  }

  void require_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("vertex id " + std::to_string(v) +
                              " outside 0.." + std::to_string(vertex_count() - 1));
  }

 private:
  static int check_count(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }

  std::vector<std::vector<int>> adj_;
};

/// Family of internally disjoint paths sharing the endpoints source/target.
struct PathFamily {
  int source = -1;
  int target = -1;
  std::vector<Path> paths;

  int size() const { return static_cast<int>(paths.size()); }
  bool empty() const { return paths.empty(); }
};

/// Paths from one apex to a set of targets, pairwise sharing only the apex.
struct Fan {
  int apex = -1;
  std::vector<Path> paths;  // each runs apex -> target

  int size() const { return static_cast<int>(paths.size()); }
};

enum class GraphClass { Empty, Complete, Disconnected, Other };

inline const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Empty: return "empty";
    case GraphClass::Complete: return "complete";
    case GraphClass::Disconnected: return "disconnected";
    case GraphClass::Other: return "other";
  }
  return "?";
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;  // discovery from ascending seeds => ordered by smallest member
}

inline bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

/// Precedence: empty before complete before disconnected. K_1 and K_2 are
/// complete; the empty graph is empty, not disconnected.
inline GraphClass classify(const Graph& g) {
  if (g.vertex_count() == 0) return GraphClass::Empty;
  if (is_complete(g)) return GraphClass::Complete;
  if (components(g).size() > 1) return GraphClass::Disconnected;
  return GraphClass::Other;
}

/// Classification of the subgraph induced on {v : alive[v]}, without building it.
/// Equivalent to classify(induced subgraph); used by search inner loops.
inline GraphClass classify_alive(const Graph& g, const std::vector<char>& alive,
                                 std::vector<int>& scratch) {
  const int n = g.vertex_count();
  int alive_count = 0;
  int seed = -1;
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      ++alive_count;
      if (seed < 0) seed = v;
    }
  if (alive_count == 0) return GraphClass::Empty;

  bool complete = true;
  for (int v = 0; v < n && complete; ++v) {
    if (!alive[v]) continue;
    int d = 0;
    for (int w : g.neighbors(v))
      if (alive[w]) ++d;
    if (d != alive_count - 1) complete = false;
  }
  if (complete) return GraphClass::Complete;

  scratch.clear();
  scratch.push_back(seed);
  std::vector<char> seen(n, 0);
  seen[seed] = 1;
  int reached = 0;
  while (!scratch.empty()) {
    int v = scratch.back();
    scratch.pop_back();
    ++reached;
    for (int w : g.neighbors(v))
      if (alive[w] && !seen[w]) {
        seen[w] = 1;
        scratch.push_back(w);
      }
  }
  return reached < alive_count ? GraphClass::Disconnected : GraphClass::Other;
}

/// Induced subgraph on a sorted set of kept vertices.
/// to_host maps local ids (positions) back to the original ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;

  int to_local(int host) const {
    auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
    if (it == to_host.end() || *it != host) return -1;
    return static_cast<int>(it - to_host.begin());
  }
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    for (int w : g.neighbors(keep[i])) {
      if (w <= keep[i]) continue;
      auto it = std::lower_bound(keep.begin(), keep.end(), w);
      if (it != keep.end() && *it == w)
        edges.emplace_back(i, static_cast<int>(it - keep.begin()));
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<int>(keep.size()), edges);
  out.to_host = std::move(keep);
  return out;
}

/// True iff p is a path in g: nonempty, consecutive vertices adjacent,
/// no repeated vertex. A single vertex is a path of length 0.
inline bool is_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int v = p[i];
    if (v < 0 || v >= g.vertex_count()) return false;
    if (seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(p[i - 1], v)) return false;
  }
  return true;
}

/// True iff the family consists of internally disjoint source->target paths.
/// Paths must be pairwise distinct as sequences; any two may share only the
/// two endpoints.
inline bool is_internally_disjoint_family(const Graph& g, const PathFamily& f) {
  if (f.source == f.target) return false;
  std::vector<int> uses(g.vertex_count(), 0);
  for (std::size_t a = 0; a < f.paths.size(); ++a) {
    const Path& p = f.paths[a];
    if (!is_path(g, p)) return false;
    if (p.front() != f.source || p.back() != f.target) return false;
    for (int v : p) ++uses[v];
    for (std::size_t b = a + 1; b < f.paths.size(); ++b)
      if (f.paths[b] == p) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == f.source || v == f.target) continue;
    if (uses[v] > 1) return false;
  }
  return true;
}

/// True iff the fan's paths run from the apex to pairwise distinct targets
/// and share no vertex but the apex.
inline bool is_fan(const Graph& g, const Fan& f) {
  std::vector<int> uses(g.vertex_count(), 0);
  std::vector<char> target_seen(g.vertex_count(), 0);
  for (const Path& p : f.paths) {
    if (!is_path(g, p)) return false;
    if (p.front() != f.apex || p.size() < 2) return false;
    if (target_seen[p.back()]) return false;
    target_seen[p.back()] = 1;
    for (int v : p) ++uses[v];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == f.apex) continue;
    if (uses[v] > 1) return false;
  }
  return true;
}

}  // namespace nbcube
