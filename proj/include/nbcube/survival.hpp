#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nbcube/graph.hpp"
#include "nbcube/menger.hpp"

namespace nbcube {

struct BudgetExhausted : std::runtime_error {
  int budget;
  explicit BudgetExhausted(int b)
      : std::runtime_error("no qualifying fault set up to size " +
                           std::to_string(b)),
        budget(b) {}
};

/// A set of failed vertices together with its closed neighborhood in the
/// host graph. Vertices in N[U] count as suppressed; everything else is
/// healthy.
class FaultSet {
 public:
  FaultSet(const Graph& g, std::vector<int> faults)
      : vertex_count_(g.vertex_count()), faults_(std::move(faults)) {
    std::sort(faults_.begin(), faults_.end());
    faults_.erase(std::unique(faults_.begin(), faults_.end()), faults_.end());
    suppressed_mask_.assign(vertex_count_, 0);
    for (int v : faults_) {
      g.require_vertex(v);
      suppressed_mask_[v] = 1;
      for (int w : g.neighbors(v)) suppressed_mask_[w] = 1;
    }
    for (int v = 0; v < vertex_count_; ++v)
      if (suppressed_mask_[v]) suppressed_.push_back(v);
  }

  const std::vector<int>& vertices() const { return faults_; }
  const std::vector<int>& closed_neighborhood() const { return suppressed_; }
  int size() const { return static_cast<int>(faults_.size()); }

  bool is_suppressed(int v) const { return suppressed_mask_[v] != 0; }
  bool is_healthy(int v) const { return !is_suppressed(v); }

  std::vector<int> healthy_vertices() const {
    std::vector<int> out;
    out.reserve(vertex_count_ - suppressed_.size());
    for (int v = 0; v < vertex_count_; ++v)
      if (!suppressed_mask_[v]) out.push_back(v);
    return out;
  }

 private:
  int vertex_count_;
  std::vector<int> faults_;
  std::vector<int> suppressed_;
  std::vector<char> suppressed_mask_;
};

/// Subgraph induced on the healthy vertices, with the local-to-host id map.
inline InducedSubgraph survival_subgraph(const Graph& g, const FaultSet& u) {
  return induced_subgraph(g, u.healthy_vertices());
}

enum class Symmetry { None, VertexTransitive };

struct NbcResult {
  int value = -1;
  std::vector<int> witness;        // sorted fault set, empty when value == 0
  GraphClass classification = GraphClass::Other;
};

namespace detail {

// Lexicographically first size-len combination from {first..n-1}; returns
// false when exhausted. comb is advanced odometer-style.
inline bool next_combination(std::vector<int>& comb, int n) {
  int len = static_cast<int>(comb.size());
  for (int i = len - 1; i >= 0; --i) {
    if (comb[i] < n - (len - i)) {
      ++comb[i];
      for (int j = i + 1; j < len; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct LevelHit {
  std::uint64_t rank;
  std::vector<int> witness;
  GraphClass cls;
};

// Scan all fault sets of size `level` (optionally only those containing
// vertex 0) in lexicographic order, evaluating ranks congruent to
// worker_id mod stride. Returns the first qualifying set of this worker.
inline bool scan_level(const Graph& g, int level, bool fix_zero, int worker_id,
                       int stride, std::atomic<std::uint64_t>& best_rank,
                       LevelHit& hit) {
  const int n = g.vertex_count();
  const int free_len = fix_zero ? level - 1 : level;
  const int first = fix_zero ? 1 : 0;
  if (n - first < free_len) return false;

  std::vector<int> comb(free_len);
  for (int i = 0; i < free_len; ++i) comb[i] = first + i;

  std::vector<char> alive(n);
  std::vector<int> scratch;
  std::uint64_t rank = 0;
  bool found = false;
  do {
    if (rank % static_cast<std::uint64_t>(stride) ==
            static_cast<std::uint64_t>(worker_id) &&
        rank < best_rank.load(std::memory_order_relaxed)) {
      std::fill(alive.begin(), alive.end(), 1);
      auto kill = [&](int v) {
        alive[v] = 0;
        for (int w : g.neighbors(v)) alive[w] = 0;
      };
      if (fix_zero) kill(0);
      for (int v : comb) kill(v);
      GraphClass cls = classify_alive(g, alive, scratch);
      if (cls != GraphClass::Other) {
        hit.rank = rank;
        hit.cls = cls;
        hit.witness.clear();
        if (fix_zero) hit.witness.push_back(0);
        hit.witness.insert(hit.witness.end(), comb.begin(), comb.end());
        found = true;
        std::uint64_t prev = best_rank.load(std::memory_order_relaxed);
        while (prev > rank &&
               !best_rank.compare_exchange_weak(prev, rank,
                                                std::memory_order_relaxed)) {
        }
        break;
      }
    }
    ++rank;
  } while (next_combination(comb, n));
  return found;
}

}  // namespace detail

/// Smallest fault set whose survival subgraph is empty, complete, or
/// disconnected, searched level by level (0, 1, 2, ...) up to `budget`
/// inclusive. The reported witness is the lexicographically first one on the
/// first level with a hit, independent of worker count. With
/// Symmetry::VertexTransitive only sets containing vertex 0 are scanned,
/// which is sound because the automorphism group can move any witness onto
/// one through vertex 0. Throws BudgetExhausted when no level qualifies.
inline NbcResult neighbor_connectivity_exact(const Graph& g, int budget,
                                             Symmetry symmetry = Symmetry::None,
                                             int workers = 1) {
  if (budget < 0) throw std::invalid_argument("negative budget");
  if (workers < 1) throw std::invalid_argument("need at least one worker");

  GraphClass whole = classify(g);
  if (whole != GraphClass::Other) return {0, {}, whole};

  const bool fix_zero = symmetry == Symmetry::VertexTransitive;
  for (int level = 1; level <= std::min(budget, g.vertex_count()); ++level) {
    std::atomic<std::uint64_t> best_rank{~std::uint64_t{0}};
    std::vector<detail::LevelHit> hits(workers);
    std::vector<char> got(workers, 0);
    if (workers == 1) {
      got[0] = detail::scan_level(g, level, fix_zero, 0, 1, best_rank, hits[0]);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          got[w] = detail::scan_level(g, level, fix_zero, w, workers,
                                      best_rank, hits[w]);
        });
      for (auto& t : pool) t.join();
    }
    int winner = -1;
    for (int w = 0; w < workers; ++w)
      if (got[w] && (winner < 0 || hits[w].rank < hits[winner].rank))
        winner = w;
    if (winner >= 0)
      return {level, hits[winner].witness, hits[winner].cls};
  }
  throw BudgetExhausted(budget);
}

/// Closed-form neighbor connectivity of the k-ary n-cube.
inline int neighbor_connectivity_formula(int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("need n >= 1 and k >= 2");
  if (n == 1 && k <= 3) return 0;
  if (n == 1 && k >= 6) return 2;
  if (n >= 2 && k == 2) return (n + 1) / 2;
  return n;  // covers n == 1 with k in {4, 5}, and n >= 2 with k >= 3
}

struct SurvivalBoundReport {
  int survival_connectivity;
  int bound;
  bool pass;
};

/// Checks that removing N[U] from the k-ary n-cube leaves a graph whose
/// vertex connectivity still meets the guaranteed floor: n - 2|U| for k = 2
/// (for |U| <= ceil(n/2)) and 2n - 2|U| for k >= 3 (for |U| <= n), clamped
/// at zero.
inline SurvivalBoundReport survival_lower_bound_check(const Graph& g,
                                                      const FaultSet& u, int n,
                                                      int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("need n >= 1 and k >= 2");
  const int ell = u.size();
  if (k == 2 && ell > (n + 1) / 2)
    throw std::invalid_argument("fault count above ceil(n/2)");
  if (k >= 3 && ell > n) throw std::invalid_argument("fault count above n");
  int bound = (k == 2) ? std::max(n - 2 * ell, 0) : std::max(2 * n - 2 * ell, 0);
  int actual = vertex_connectivity(survival_subgraph(g, u).graph);
  return {actual, bound, actual >= bound};
}

struct DominationReport {
  int neighbor_connectivity;
  int connectivity;
  bool pass;
};

/// Sanity check that the neighbor connectivity never exceeds the ordinary
/// vertex connectivity (faulting a minimum separator suppresses it too).
inline DominationReport nbc_le_connectivity_check(const Graph& g,
                                                  Symmetry symmetry,
                                                  int workers = 1) {
  int kappa = vertex_connectivity(g);
  NbcResult r = neighbor_connectivity_exact(g, g.vertex_count(), symmetry,
                                            workers);
  return {r.value, kappa, r.value <= kappa};
}

}  // namespace nbcube
