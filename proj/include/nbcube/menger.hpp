#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "nbcube/graph.hpp"

namespace nbcube {

struct FanInfeasible : std::runtime_error {
  explicit FanInfeasible(const std::string& what) : std::runtime_error(what) {}
};

struct PathsInfeasible : std::runtime_error {
  explicit PathsInfeasible(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Unit-capacity flow network with every vertex split into in/out halves, so a
// unit of flow occupies a whole vertex. Node 2v is v's in-half, 2v+1 its
// out-half. Forward edges sit at even indices, their residual twins at odd
// ones; `carrying` lives on the forward edge only. Edges are inserted in
// ascending (tail, head) order and augmenting paths are found by BFS scanning
// that order, which makes the flow, and the paths later peeled off it,
// deterministic.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, const std::vector<char>& blocked, int source,
            int sink)
      : source_out_(2 * source + 1), sink_in_(2 * sink) {
    const int n = g.vertex_count();
    head_.resize(2 * n);
    for (int v = 0; v < n; ++v) {
      if (blocked[v]) continue;
      add_edge(2 * v, 2 * v + 1);  // through-capacity of one per vertex
      for (int w : g.neighbors(v))
        if (!blocked[w]) add_edge(2 * v + 1, 2 * w);
    }
  }

  int run() {
    int total = 0;
    while (augment()) ++total;
    return total;
  }

  // Peel the flow into vertex-disjoint source->sink paths. From each out-half
  // the flow edge toward the lowest-id vertex is taken first.
  std::vector<Path> extract_paths(int flow_value) {
    std::vector<Path> out;
    out.reserve(flow_value);
    for (int i = 0; i < flow_value; ++i) {
      Path p;
      int node = source_out_;
      p.push_back(node / 2);
      while (node != sink_in_) {
        int chosen = -1;
        for (int e : head_[node]) {
          if (e % 2 != 0 || !edges_[e].carrying) continue;
          if (chosen == -1 || edges_[e].to < edges_[chosen].to) chosen = e;
        }
        if (chosen == -1) throw std::logic_error("flow conservation violated");
        edges_[chosen].carrying = false;
        node = edges_[chosen].to;  // an in-half
        p.push_back(node / 2);
        if (node != sink_in_) node ^= 1;  // hop to the out-half
      }
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  struct Edge {
    int to;
    bool carrying;
  };

  void add_edge(int from, int to) {
    head_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, false});
    head_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, false});  // twin; capacity tracked on the forward edge
  }

  bool augment() {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(source_out_);
    seen[source_out_] = 1;
    while (!q.empty() && !seen[sink_in_]) {
      int node = q.front();
      q.pop();
      for (int e : head_[node]) {
        bool available =
            (e % 2 == 0) ? !edges_[e].carrying : edges_[e ^ 1].carrying;
        int to = edges_[e].to;
        if (!available || seen[to]) continue;
        seen[to] = 1;
        via[to] = e;
        q.push(to);
      }
    }
    if (!seen[sink_in_]) return false;
    for (int node = sink_in_; node != source_out_;) {
      int e = via[node];
      if (e % 2 == 0)
        edges_[e].carrying = true;  // push along the forward edge
      else
        edges_[e ^ 1].carrying = false;  // cancel the forward twin
      node = edges_[e ^ 1].to;
    }
    return true;
  }

  int source_out_;
  int sink_in_;
  std::vector<std::vector<int>> head_;
  std::vector<Edge> edges_;
};

inline std::vector<char> make_blocked(const Graph& g,
                                      const std::vector<int>& forbidden) {
  std::vector<char> blocked(g.vertex_count(), 0);
  for (int v : forbidden) {
    g.require_vertex(v);
    blocked[v] = 1;
  }
  return blocked;
}

// Copy of g with one extra vertex (id = old vertex count) attached to `attach`.
inline Graph with_apex(const Graph& g, const std::vector<int>& attach) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v))
      if (v < w) edges.emplace_back(v, w);
  for (int v : attach) {
    g.require_vertex(v);
    edges.emplace_back(v, n);
  }
  return Graph::from_edges(n + 1, edges);
}

}  // namespace detail

/// Maximum family of internally disjoint x->y paths that avoid `forbidden`.
/// If y is unreachable the family comes back empty; that is the only signal.
inline PathFamily disjoint_paths(const Graph& g, int x, int y,
                                 const std::vector<int>& forbidden = {}) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("disjoint_paths: x == y");
  auto blocked = detail::make_blocked(g, forbidden);
  if (blocked[x] || blocked[y])
    throw std::invalid_argument("disjoint_paths: endpoint forbidden");
  detail::SplitFlow flow(g, blocked, x, y);
  int value = flow.run();
  PathFamily family;
  family.source = x;
  family.target = y;
  family.paths = flow.extract_paths(value);
  return family;
}

/// Fan from x to every vertex of Y inside g - F: |Y| paths that start at x,
/// end at pairwise distinct members of Y, avoid F, and share only x.
/// Computed as a max-flow from x to an auxiliary collector adjacent to Y with
/// F removed, so it succeeds exactly when such a fan exists.
inline Fan fan(const Graph& g, int x, const std::vector<int>& Y,
               const std::vector<int>& F = {}) {
  g.require_vertex(x);
  if (Y.empty()) throw std::invalid_argument("fan: no targets");
  auto blocked = detail::make_blocked(g, F);
  if (blocked[x]) throw std::invalid_argument("fan: apex forbidden");
  for (int y : Y) {
    g.require_vertex(y);
    if (y == x) throw std::invalid_argument("fan: apex among targets");
    if (blocked[y]) throw std::invalid_argument("fan: target forbidden");
  }
  std::vector<int> targets(Y);
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw std::invalid_argument("fan: duplicate target");

  Graph h = detail::with_apex(g, targets);
  const int collector = g.vertex_count();
  blocked.push_back(0);
  detail::SplitFlow flow(h, blocked, x, collector);
  int value = flow.run();
  if (value < static_cast<int>(targets.size()))
    throw FanInfeasible("fan: only " + std::to_string(value) + " of " +
                        std::to_string(targets.size()) + " paths exist");
  auto raw = flow.extract_paths(value);
  Fan out;
  out.apex = x;
  for (auto& p : raw) {
    p.pop_back();  // drop the collector
    out.paths.push_back(std::move(p));
  }
  std::sort(out.paths.begin(), out.paths.end(),
            [](const Path& a, const Path& b) { return a.back() < b.back(); });
  return out;
}

/// |X| pairwise fully disjoint paths, each from a distinct X-vertex to a
/// distinct Y-vertex, avoiding F. Built by attaching an apex to X and fanning
/// to Y. Requires |X| == |Y| and X, Y disjoint; the X-to-Y matching is
/// whatever the flow produces. Paths are ordered by their X endpoint.
inline std::vector<Path> disjoint_set_paths(const Graph& g,
                                            const std::vector<int>& X,
                                            const std::vector<int>& Y,
                                            const std::vector<int>& F = {}) {
  if (X.empty() || X.size() != Y.size())
    throw std::invalid_argument("disjoint_set_paths: need |X| == |Y| >= 1");
  std::vector<int> xs(X), ys(Y);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() ||
      std::adjacent_find(ys.begin(), ys.end()) != ys.end())
    throw std::invalid_argument("disjoint_set_paths: duplicate endpoint");
  std::vector<int> overlap;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty())
    throw std::invalid_argument("disjoint_set_paths: X and Y must be disjoint");

  Graph h = detail::with_apex(g, xs);
  const int apex = g.vertex_count();
  Fan f;
  try {
    f = fan(h, apex, ys, F);
  } catch (const FanInfeasible& e) {
    throw PathsInfeasible(std::string("disjoint_set_paths: ") + e.what());
  }
  std::vector<Path> out;
  for (auto& p : f.paths) {
    p.erase(p.begin());  // drop the apex
    if (p.empty() ||
        !std::binary_search(xs.begin(), xs.end(), p.front()))
      throw std::logic_error("disjoint_set_paths: stripped path leaves X");
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const Path& a, const Path& b) { return a.front() < b.front(); });
  return out;
}

/// Exact vertex connectivity. Complete K_m (including K_1, K_2) gives m-1,
/// a disconnected or empty graph gives 0. Otherwise the minimum s-t cut is
/// taken over a minimum-degree vertex v against all its non-neighbors, and
/// over all non-adjacent pairs of neighbors of v.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (is_complete(g)) return n - 1;
  if (components(g).size() > 1) return 0;

  const int v = g.min_degree_vertex();
  int best = std::numeric_limits<int>::max();
  std::vector<char> no_block(n, 0);
  auto cut = [&](int s, int t) {
    detail::SplitFlow flow(g, no_block, s, t);
    best = std::min(best, flow.run());
  };
  for (int w = 0; w < n; ++w)
    if (w != v && !g.adjacent(v, w)) cut(v, w);
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) cut(nb[i], nb[j]);
  return best;
}

}  // namespace nbcube
