#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbcube/graph.hpp"
#include "nbcube/survival.hpp"

namespace nbcube {

struct NotInverseClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ContainsIdentity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DoesNotGenerate : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidOrdering : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Direct product of cyclic groups Z_m0 x Z_m1 x ... with coordinate 0 least
/// significant in the element encoding: id = sum_i c_i * (m_0 * ... * m_{i-1}).
/// With all orders equal to k this matches the cube's vertex encoding.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("no cyclic factors");
    std::int64_t total = 1;
    for (int m : orders_) {
      if (m < 2) throw std::invalid_argument("cyclic order must be >= 2");
      total *= m;
      if (total > std::numeric_limits<int>::max())
        throw std::invalid_argument("group too large for int element ids");
    }
    order_ = static_cast<int>(total);
  }

  const std::vector<int>& orders() const { return orders_; }
  int order() const { return order_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int identity() const { return 0; }

  std::vector<int> coords(int a) const {
    require_element(a);
    std::vector<int> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      c[i] = a % orders_[i];
      a /= orders_[i];
    }
    return c;
  }

  int element(const std::vector<int>& c) const {
    if (c.size() != orders_.size())
      throw std::invalid_argument("coordinate count mismatch");
    int a = 0;
    for (int i = rank() - 1; i >= 0; --i) {
      if (c[i] < 0 || c[i] >= orders_[i])
        throw std::invalid_argument("coordinate out of range");
      a = a * orders_[i] + c[i];
    }
    return a;
  }

  int add(int a, int b) const {
    require_element(a);
    require_element(b);
    int out = 0, weight = 1;
    for (int m : orders_) {
      out += ((a % m + b % m) % m) * weight;
      a /= m;
      b /= m;
      weight *= m;
    }
    return out;
  }

  int inverse(int a) const {
    require_element(a);
    int out = 0, weight = 1;
    for (int m : orders_) {
      out += ((m - a % m) % m) * weight;
      a /= m;
      weight *= m;
    }
    return out;
  }

  void require_element(int a) const {
    if (a < 0 || a >= order_)
      throw std::out_of_range("element id out of range");
  }

 private:
  std::vector<int> orders_;
  int order_;
};

using GeneratorOrdering = std::vector<int>;

/// Validates a connection set: inverse-closed, no identity, generates the
/// whole group. Returns the set sorted and deduplicated.
inline std::vector<int> validate_generators(const AbelianGroup& group,
                                            std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw DoesNotGenerate("empty generator set");
  for (int a : s) {
    group.require_element(a);
    if (a == group.identity())
      throw ContainsIdentity("generator set contains the identity");
    if (!std::binary_search(s.begin(), s.end(), group.inverse(a)))
      throw NotInverseClosed("inverse of " + std::to_string(a) + " missing");
  }
  std::vector<char> reached(group.order(), 0);
  std::queue<int> q;
  reached[group.identity()] = 1;
  q.push(group.identity());
  int count = 1;
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int g : s) {
      int b = group.add(a, g);
      if (!reached[b]) {
        reached[b] = 1;
        ++count;
        q.push(b);
      }
    }
  }
  if (count != group.order())
    throw DoesNotGenerate("generator set spans only " + std::to_string(count) +
                          " of " + std::to_string(group.order()) + " elements");
  return s;
}

/// Cayley graph of the group with the given connection set: a is adjacent to
/// a + g for every generator g. Inverse-closure makes the relation symmetric.
inline Graph build_cayley(const AbelianGroup& group, const std::vector<int>& s) {
  auto gens = validate_generators(group, s);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < group.order(); ++a)
    for (int g : gens) edges.emplace_back(a, group.add(a, g));
  return Graph::from_edges(group.order(), edges);
}

/// An ordering s_1, ..., s_d of the connection set is usable when every
/// consecutive disjoint pair multiplies outside S and away from the identity:
/// s_1 s_2, s_3 s_4, ... A trailing unpaired element (odd d) is free.
inline bool is_valid_ordering(const AbelianGroup& group,
                              const std::vector<int>& s,
                              const GeneratorOrdering& ordering) {
  auto gens = validate_generators(group, s);
  if (ordering.size() != gens.size()) return false;
  auto sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != gens) return false;
  for (std::size_t i = 0; i + 1 < ordering.size(); i += 2) {
    int prod = group.add(ordering[i], ordering[i + 1]);
    if (prod == group.identity()) return false;
    if (std::binary_search(gens.begin(), gens.end(), prod)) return false;
  }
  return true;
}

/// Lexicographically first usable ordering by id, via backtracking over the
/// sorted connection set; empty optional when none exists.
inline std::optional<GeneratorOrdering> find_valid_ordering(
    const AbelianGroup& group, const std::vector<int>& s) {
  auto gens = validate_generators(group, s);
  const int d = static_cast<int>(gens.size());
  GeneratorOrdering chosen;
  std::vector<char> taken(d, 0);

  auto pair_ok = [&](int a, int b) {
    int prod = group.add(a, b);
    return prod != group.identity() &&
           !std::binary_search(gens.begin(), gens.end(), prod);
  };
  auto solve = [&](auto&& self, int depth) -> bool {
    if (depth == d) return true;
    for (int i = 0; i < d; ++i) {
      if (taken[i]) continue;
      // Odd depth fills the second slot of a pair; a trailing unpaired
      // element (odd d) sits at even depth and is unconstrained.
      if (depth % 2 == 1 && !pair_ok(chosen.back(), gens[i])) continue;
      taken[i] = 1;
      chosen.push_back(gens[i]);
      if (self(self, depth + 1)) return true;
      chosen.pop_back();
      taken[i] = 0;
    }
    return false;
  };
  if (solve(solve, 0)) return chosen;
  return std::nullopt;
}

struct CayleyWitness {
  FaultSet faults;
  GraphClass classification;
};

/// Builds a fault set of at most ceil(d/2) vertices whose suppression leaves
/// the Cayley graph disconnected or complete: one fault per ordering pair
/// (the pair's product), plus, when d is odd and the leftover generator has a
/// neighbor at distance exactly 2 from the identity, the least such neighbor.
/// The identity always survives.
inline CayleyWitness generator_pair_witness(const Graph& g,
                                            const AbelianGroup& group,
                                            const std::vector<int>& s,
                                            const GeneratorOrdering& ordering) {
  if (!is_valid_ordering(group, s, ordering))
    throw InvalidOrdering("ordering fails the pairing rule");
  if (g.vertex_count() != group.order())
    throw std::invalid_argument("graph does not match group");

  std::vector<int> faults;
  for (std::size_t i = 0; i + 1 < ordering.size(); i += 2)
    faults.push_back(group.add(ordering[i], ordering[i + 1]));
  std::sort(faults.begin(), faults.end());
  faults.erase(std::unique(faults.begin(), faults.end()), faults.end());

  if (ordering.size() % 2 == 1) {
    // Vertices at distance exactly 2 from the identity.
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[group.identity()] = 0;
    q.push(group.identity());
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (dist[v] == 2) continue;
      for (int w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    int extra = -1;
    for (int w : g.neighbors(ordering.back()))
      if (dist[w] == 2 && (extra < 0 || w < extra)) extra = w;
    if (extra >= 0 &&
        !std::binary_search(faults.begin(), faults.end(), extra)) {
      faults.push_back(extra);
      std::sort(faults.begin(), faults.end());
    }
  }

  CayleyWitness result{FaultSet(g, faults), GraphClass::Other};
  int half = (static_cast<int>(ordering.size()) + 1) / 2;
  if (result.faults.size() > half)
    throw std::logic_error("witness exceeded half the degree");
  if (!result.faults.is_healthy(group.identity()))
    throw std::logic_error("witness suppressed the identity");
  result.classification = classify(survival_subgraph(g, result.faults).graph);
  if (result.classification != GraphClass::Disconnected &&
      result.classification != GraphClass::Complete)
    throw std::logic_error("witness survival neither disconnected nor complete");
  return result;
}

}  // namespace nbcube
