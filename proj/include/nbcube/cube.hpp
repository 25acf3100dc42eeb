#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbcube/graph.hpp"
#include "nbcube/survival.hpp"

namespace nbcube {

/// Parameters of the k-ary n-cube: n dimensions, k positions per dimension.
struct CubeSpec {
  int n;
  int k;

  CubeSpec(int n_, int k_) : n(n_), k(k_) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (k < 2) throw std::invalid_argument("need k >= 2");
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) {
      count *= k;
      if (count > std::numeric_limits<int>::max())
        throw std::invalid_argument("cube too large for int vertex ids");
    }
  }

  int degree() const { return k == 2 ? n : 2 * n; }

  int vertex_count() const {
    int count = 1;
    for (int i = 0; i < n; ++i) count *= k;
    return count;
  }
};

/// Vertex ids encode digit strings in mixed radix with digit 0 least
/// significant: id = sum_i digit_i * k^i.
inline int digit(const CubeSpec& s, int v, int pos) {
  for (int i = 0; i < pos; ++i) v /= s.k;
  return v % s.k;
}

inline int with_digit(const CubeSpec& s, int v, int pos, int value) {
  int weight = 1;
  for (int i = 0; i < pos; ++i) weight *= s.k;
  return v + (value - digit(s, v, pos)) * weight;
}

inline std::vector<int> digits_of(const CubeSpec& s, int v) {
  std::vector<int> d(s.n);
  for (int i = 0; i < s.n; ++i) {
    d[i] = v % s.k;
    v /= s.k;
  }
  return d;
}

inline int vertex_from_digits(const CubeSpec& s, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != s.n)
    throw std::invalid_argument("digit count != n");
  int v = 0;
  for (int i = s.n - 1; i >= 0; --i) {
    if (d[i] < 0 || d[i] >= s.k) throw std::invalid_argument("digit out of range");
    v = v * s.k + d[i];
  }
  return v;
}

/// Digit string with the most significant digit first ("210" has digit 0 = 0).
/// Digits are dot-separated when k > 10, where single characters would be
/// ambiguous.
inline std::string vertex_string(const CubeSpec& s, int v) {
  auto d = digits_of(s, v);
  std::string out;
  for (int i = s.n - 1; i >= 0; --i) {
    if (s.k > 10 && i != s.n - 1) out += '.';
    out += std::to_string(d[i]);
  }
  return out;
}

inline int vertex_from_string(const CubeSpec& s, const std::string& text) {
  std::vector<int> d;
  if (text.find('.') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find('.', start);
      if (stop == std::string::npos) stop = text.size();
      d.push_back(std::stoi(text.substr(start, stop - start)));
      start = stop + 1;
    }
  } else {
    if (s.k > 10)
      throw std::invalid_argument("k > 10 needs dot-separated digits");
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad digit");
      d.push_back(c - '0');
    }
  }
  std::reverse(d.begin(), d.end());  // text is most significant first
  return vertex_from_digits(s, d);
}

/// The k-ary n-cube: vertices adjacent iff exactly one digit differs, by
/// +-1 mod k. For k = 2 the two directions coincide, so each edge is emitted
/// once (from its endpoint with digit 0); for k >= 3 the +1 step from every
/// vertex covers each edge exactly once.
inline Graph build_cube(const CubeSpec& s) {
  std::vector<std::pair<int, int>> edges;
  const int count = s.vertex_count();
  for (int v = 0; v < count; ++v) {
    for (int pos = 0; pos < s.n; ++pos) {
      int d = digit(s, v, pos);
      if (s.k == 2 && d != 0) continue;
      edges.emplace_back(v, with_digit(s, v, pos, (d + 1) % s.k));
    }
  }
  return Graph::from_edges(count, edges);
}

/// v with digit `pos` replaced by block index j: v's counterpart in block j
/// of the partition along dimension pos.
inline int outer_neighbor(const CubeSpec& s, int v, int pos, int j) {
  if (pos < 0 || pos >= s.n) throw std::invalid_argument("dimension out of range");
  if (j < 0 || j >= s.k) throw std::invalid_argument("block index out of range");
  return with_digit(s, v, pos, j);
}

/// Whether blocks i and j of a one-dimensional partition are joined by edges.
inline bool blocks_adjacent(const CubeSpec& s, int i, int j) {
  int diff = std::abs(i - j);
  return diff == 1 || diff == s.k - 1;
}

/// Partition of the cube along one dimension into k blocks, each inducing a
/// copy of the (n-1)-dimensional cube. blocks[i] lists the vertices with
/// digit `dim` equal to i, ascending.
struct SubcubePartition {
  int dim;
  std::vector<std::vector<int>> blocks;
};

inline SubcubePartition subcube_partition(const CubeSpec& s, int dim) {
  if (dim < 0 || dim >= s.n) throw std::invalid_argument("dimension out of range");
  SubcubePartition p;
  p.dim = dim;
  p.blocks.assign(s.k, {});
  const int count = s.vertex_count();
  for (int v = 0; v < count; ++v) p.blocks[digit(s, v, dim)].push_back(v);
  return p;
}

inline int common_neighbor_count(const Graph& g, int x, int y) {
  const auto& a = g.neighbors(x);
  const auto& b = g.neighbors(y);
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return static_cast<int>(common.size());
}

struct CommonNeighborReport {
  long long pairs_checked = 0;
  std::array<long long, 3> count_by_value{{0, 0, 0}};  // pairs with 0/1/2
  long long violations = 0;
  bool ok = true;
};

/// Sweeps all unordered vertex pairs and checks the common-neighbor law:
/// every pair has 0, 1 or 2 common neighbors; for k in {2, 4} the value 1
/// never occurs; for k = 3 the value is 1 exactly for adjacent pairs.
inline CommonNeighborReport check_common_neighbor_property(const CubeSpec& s,
                                                           const Graph& g) {
  CommonNeighborReport report;
  const int count = g.vertex_count();
  for (int x = 0; x < count; ++x) {
    for (int y = x + 1; y < count; ++y) {
      ++report.pairs_checked;
      int c = common_neighbor_count(g, x, y);
      bool bad = c > 2;
      if (!bad) ++report.count_by_value[c];
      if (!bad && (s.k == 2 || s.k == 4) && c == 1) bad = true;
      if (!bad && s.k == 3 && ((c == 1) != g.adjacent(x, y))) bad = true;
      if (bad) ++report.violations;
    }
  }
  report.ok = report.violations == 0;
  return report;
}

struct HealthyPairCheck {
  int bound;                 // required neighbor count
  std::vector<int> pairs;    // block-i vertices healthy together with their
                             // block-j counterparts
  int neighbors_of_x;        // how many of them are adjacent to x
  bool ok;
};

/// For adjacent blocks i, j of a one-dimensional partition and a healthy
/// vertex x in block i: counts the block-i vertices v such that both v and
/// its block-j counterpart are healthy, and checks that they outnumber
/// 2n - 2 - |U| - u_i - u_j and that at least that many are neighbors of x.
/// Needs n, k >= 3 and |U| < n; |U| = 0 is allowed.
inline HealthyPairCheck healthy_pair_check(const CubeSpec& s, const Graph& g,
                                           const FaultSet& u, int dim, int i,
                                           int j, int x) {
  if (s.n < 3 || s.k < 3) throw std::invalid_argument("need n, k >= 3");
  if (u.size() >= s.n) throw std::invalid_argument("need fewer than n faults");
  if (!blocks_adjacent(s, i, j))
    throw std::invalid_argument("blocks not adjacent");
  if (digit(s, x, dim) != i || !u.is_healthy(x))
    throw std::invalid_argument("x must be healthy and in block i");

  int faults_i = 0, faults_j = 0;
  for (int v : u.vertices()) {
    int d = digit(s, v, dim);
    if (d == i) ++faults_i;
    if (d == j) ++faults_j;
  }
  HealthyPairCheck result;
  result.bound = 2 * s.n - 2 - u.size() - faults_i - faults_j;

  const int count = s.vertex_count();
  result.neighbors_of_x = 0;
  for (int v = 0; v < count; ++v) {
    if (digit(s, v, dim) != i) continue;
    if (!u.is_healthy(v) || !u.is_healthy(outer_neighbor(s, v, dim, j)))
      continue;
    result.pairs.push_back(v);
    if (g.adjacent(x, v)) ++result.neighbors_of_x;
  }
  result.ok = static_cast<int>(result.pairs.size()) > result.bound &&
              result.neighbors_of_x >= result.bound;
  return result;
}

}  // namespace nbcube
