#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cube.hpp"
#include "graph.hpp"
#include "menger.hpp"
#include "survival.hpp"

namespace nbcube {

/// Raised when a builder cannot realise the guaranteed number of paths.
/// With inputs inside the documented preconditions this indicates a bug,
/// so the message names the failing stage.
struct ConstructionFailed : std::runtime_error {
  explicit ConstructionFailed(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the guarantee degenerates to zero paths, i.e. there is
/// nothing to build. Derives from invalid_argument so callers can treat
/// it as a precondition failure.
struct BoundIsZero : std::invalid_argument {
  explicit BoundIsZero(const std::string& what) : std::invalid_argument(what) {}
};

/// Bundle of internally disjoint x,y-paths that avoid the closed
/// neighbourhood of the fault seeds. `bound` records the count the
/// builder promises; `paths` may exceed it.
struct HealthyPathCertificate {
  CubeSpec spec;
  std::vector<int> faults;
  int x = -1;
  int y = -1;
  int bound = 0;
  std::vector<Path> paths;
};

/// Guaranteed number of disjoint healthy x,y-paths across two adjacent
/// blocks that hold uj and ujp of the ell fault seeds between them.
inline int adjacent_path_bound(int n, int ell, int uj, int ujp) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  if (ell < 1 || ell > n - 1) throw std::invalid_argument("need 1 <= ell <= n - 1");
  if (uj < 0 || ujp < 0 || uj + ujp > ell)
    throw std::invalid_argument("block seed counts must be nonnegative with sum at most ell");
  return uj + ujp == ell ? 2 * n - 2 * ell - 1 : 2 * n - 2 * ell;
}

namespace detail {

/// One block of a subcube partition with its own survival structure.
/// `sub` drops the block's closed in-block neighbourhood of its own
/// seeds; `blocked` lists local ids kept by that rule but suppressed by
/// seeds sitting in neighbouring blocks. Routing forbids `blocked`.
struct BlockSurvival {
  int block = -1;
  InducedSubgraph sub;
  std::vector<int> blocked;
};

inline BlockSurvival block_survival(const CubeSpec& s, const Graph& g,
                                    const FaultSet& u, int dim, int b) {
  std::vector<char> drop(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> block_seeds;
  for (int f : u.vertices())
    if (digit(s, f, dim) == b) {
      block_seeds.push_back(f);
      drop[f] = 1;
    }
  for (int f : block_seeds)
    for (int w : g.neighbors(f))
      if (digit(s, w, dim) == b) drop[w] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (digit(s, v, dim) == b && !drop[v]) keep.push_back(v);
  BlockSurvival bs{b, induced_subgraph(g, keep), {}};
  for (std::size_t i = 0; i < bs.sub.to_host.size(); ++i)
    if (!u.is_healthy(bs.sub.to_host[i])) bs.blocked.push_back(static_cast<int>(i));
  return bs;
}

inline int local_or_fail(const InducedSubgraph& sub, int host, const char* role) {
  int local = sub.to_local(host);
  if (local < 0)
    throw ConstructionFailed(std::string(role) + " is missing from the block survival graph");
  return local;
}

inline Path hosts_of(const InducedSubgraph& sub, const Path& local) {
  Path out;
  out.reserve(local.size());
  for (int v : local) out.push_back(sub.to_host[v]);
  return out;
}

/// Single path between two kept vertices of one block that avoids the
/// block's suppressed survivors plus `avoid_hosts`. from == to collapses
/// to the one-vertex path.
inline Path block_path(const BlockSurvival& bs, int from, int to,
                       const std::vector<int>& avoid_hosts = {}) {
  if (from == to) return {from};
  int lf = local_or_fail(bs.sub, from, "path source");
  int lt = local_or_fail(bs.sub, to, "path target");
  std::vector<int> forbidden = bs.blocked;
  for (int h : avoid_hosts) {
    int l = bs.sub.to_local(h);
    if (l >= 0) forbidden.push_back(l);
  }
  try {
    Fan f = fan(bs.sub.graph, lf, {lt}, forbidden);
    return hosts_of(bs.sub, f.paths.at(0));
  } catch (const FanInfeasible&) {
    throw ConstructionFailed("no in-block path between required vertices");
  }
}

/// target -> path running target..apex, pairwise disjoint except the apex.
inline std::map<int, Path> fan_tails(const BlockSurvival& bs, int apex,
                                     const std::vector<int>& targets) {
  std::map<int, Path> out;
  if (targets.empty()) return out;
  int la = local_or_fail(bs.sub, apex, "fan apex");
  std::vector<int> lt;
  lt.reserve(targets.size());
  for (int h : targets) lt.push_back(local_or_fail(bs.sub, h, "fan target"));
  try {
    Fan f = fan(bs.sub.graph, la, lt, bs.blocked);
    for (const Path& p : f.paths) {
      Path hosts = hosts_of(bs.sub, p);
      std::reverse(hosts.begin(), hosts.end());
      out[hosts.front()] = std::move(hosts);
    }
  } catch (const FanInfeasible&) {
    throw ConstructionFailed("fan inside a block is infeasible");
  }
  return out;
}

/// Partial path waiting for its tail. `prefix` ends one hop before
/// `entry`, which lies in the block the tail will be routed through.
struct Pending {
  Path prefix;
  int entry = -1;
};

/// Complete every pending path inside one block with a single fan whose
/// apex is `goal`. A pending whose entry already equals the goal is
/// closed directly; such entries may repeat, fan entries may not.
inline std::vector<Path> assemble(const BlockSurvival& bs, int goal,
                                  const std::vector<Pending>& pending) {
  std::vector<int> targets;
  for (const Pending& p : pending)
    if (p.entry != goal) targets.push_back(p.entry);
  {
    std::vector<int> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ConstructionFailed("pending entries collide");
  }
  std::map<int, Path> tails = fan_tails(bs, goal, targets);
  std::vector<Path> out;
  out.reserve(pending.size());
  for (const Pending& p : pending) {
    Path full = p.prefix;
    if (p.entry == goal) {
      full.push_back(goal);
    } else {
      const Path& tail = tails.at(p.entry);
      full.insert(full.end(), tail.begin(), tail.end());
    }
    out.push_back(std::move(full));
  }
  return out;
}

/// Vertex-disjoint pairing of `froms` onto `tos` inside one block,
/// keyed by the from-vertex. A vertex in both sets can only pair with
/// itself, so it becomes a one-vertex link and is walled off from the
/// flow that matches the rest.
inline std::map<int, Path> link_in_block(const BlockSurvival& bs,
                                         const std::vector<int>& froms,
                                         const std::vector<int>& tos) {
  if (froms.size() != tos.size())
    throw std::invalid_argument("link endpoint counts differ");
  auto contains = [](const std::vector<int>& xs, int v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
  };
  std::map<int, Path> out;
  std::vector<int> from_rest, to_rest, shared;
  for (int v : froms) {
    if (contains(tos, v)) {
      out[v] = {v};
      shared.push_back(v);
    } else {
      from_rest.push_back(v);
    }
  }
  for (int v : tos)
    if (!contains(froms, v)) to_rest.push_back(v);
  if (from_rest.empty()) return out;
  std::vector<int> lx, ly;
  std::vector<int> forbidden = bs.blocked;
  for (int v : shared) forbidden.push_back(local_or_fail(bs.sub, v, "shared link vertex"));
  for (int v : from_rest) lx.push_back(local_or_fail(bs.sub, v, "link source"));
  for (int v : to_rest) ly.push_back(local_or_fail(bs.sub, v, "link target"));
  try {
    std::vector<Path> linked = disjoint_set_paths(bs.sub.graph, lx, ly, forbidden);
    for (const Path& p : linked) {
      Path hosts = hosts_of(bs.sub, p);
      out[hosts.front()] = std::move(hosts);
    }
  } catch (const PathsInfeasible&) {
    throw ConstructionFailed("cannot link strands across a block");
  }
  return out;
}

}  // namespace detail

/// Builds internally disjoint healthy x,y-paths across two adjacent
/// blocks of the dimension-`dim` partition, all of whose vertices stay
/// inside those two blocks. x must be healthy in block bj, y in the
/// adjacent block bjp. Produces at least adjacent_path_bound(...) paths.
inline HealthyPathCertificate adjacent_subcube_paths(const CubeSpec& s, const Graph& g,
                                                     const FaultSet& u, int dim, int bj,
                                                     int bjp, int x, int y) {
  if (s.k < 3) throw std::invalid_argument("need k >= 3");
  if (s.n < 3) throw std::invalid_argument("need n >= 3");
  if (dim < 0 || dim >= s.n) throw std::invalid_argument("dimension out of range");
  const int ell = static_cast<int>(u.size());
  if (ell < 1 || ell > s.n - 1) throw std::invalid_argument("need 1 <= seeds <= n - 1");
  if (!blocks_adjacent(s, bj, bjp)) throw std::invalid_argument("blocks are not adjacent");
  if (digit(s, x, dim) != bj || digit(s, y, dim) != bjp)
    throw std::invalid_argument("endpoints are not in the stated blocks");
  if (!u.is_healthy(x) || !u.is_healthy(y))
    throw std::invalid_argument("endpoints must be healthy");

  auto seed_count = [&](int blk) {
    int c = 0;
    for (int f : u.vertices())
      if (digit(s, f, dim) == blk) ++c;
    return c;
  };
  int ua = seed_count(bj);
  int ub = seed_count(bjp);
  const int m = adjacent_path_bound(s.n, ell, ua, ub);

  // Route from the seed-heavy side: every case below assumes block a
  // holds at least as many seeds as block b.
  int a = bj, b = bjp, xx = x, yy = y;
  bool swapped = false;
  if (ua < ub) {
    std::swap(a, b);
    std::swap(xx, yy);
    std::swap(ua, ub);
    swapped = true;
  }

  auto step_between = [&](int from, int to) {
    return (from + 1) % s.k == to ? 1 : -1;
  };

  // Lone seed outside both blocks: keep it out of the block past b so
  // the image of x beside y stays healthy. Flipping the roles moves the
  // ring successor of b away from the seed's block.
  if (ua == 0 && ell == 1 && s.k >= 4) {
    int seed_block = digit(s, u.vertices().front(), dim);
    int sdir = step_between(a, b);
    if (seed_block == ((b + sdir) % s.k + s.k) % s.k) {
      std::swap(a, b);
      std::swap(xx, yy);
      swapped = !swapped;
    }
  }

  auto outer_b = [&](int v) { return with_digit(s, v, dim, b); };
  detail::BlockSurvival bsa = detail::block_survival(s, g, u, dim, a);
  detail::BlockSurvival bsb = detail::block_survival(s, g, u, dim, b);

  // In-block neighbours of x that survive together with their image in
  // block b; each one seeds the two-edge start x, v, image(v).
  std::vector<int> cand;
  for (int v : g.neighbors(xx))
    if (digit(s, v, dim) == a && u.is_healthy(v) && u.is_healthy(outer_b(v)))
      cand.push_back(v);
  const int quota = 2 * s.n - 2 - ell - ua - ub;
  const int x1 = outer_b(xx);

  auto require_healthy = [&](int v, const char* what) {
    if (!u.is_healthy(v))
      throw ConstructionFailed(std::string(what) + " is suppressed, which the case analysis rules out");
  };
  auto take_quota = [&]() {
    if (static_cast<int>(cand.size()) < quota)
      throw ConstructionFailed("not enough healthy neighbour pairs beside x");
    return std::vector<int>(cand.begin(), cand.begin() + quota);
  };

  std::vector<detail::Pending> pending;
  if (ua == ell && ell == s.n - 1) {
    // Every seed sits beside x, block b is untouched: the crossing edge
    // at x followed by any healthy route to y is the one promised path.
    require_healthy(x1, "the image of x beside y");
    pending.push_back({{xx}, x1});
  } else if (ua >= 1) {
    std::vector<int> xs = take_quota();
    for (int v : xs) pending.push_back({{xx, v}, outer_b(v)});
    if (u.is_healthy(x1)) {
      pending.push_back({{xx}, x1});
    } else {
      // Reach one more surviving crossing pair through block a.
      int z = -1;
      for (int v = 0; v < g.vertex_count() && z < 0; ++v) {
        if (digit(s, v, dim) != a || v == xx) continue;
        if (!u.is_healthy(v) || !u.is_healthy(outer_b(v))) continue;
        if (std::find(xs.begin(), xs.end(), v) != xs.end()) continue;
        z = v;
      }
      if (z < 0) throw ConstructionFailed("no spare crossing pair beside x");
      Path pxz = detail::block_path(bsa, xx, z, xs);
      pending.push_back({std::move(pxz), outer_b(z)});
    }
  } else if (ell >= 2) {
    // No seeds in either block and the quota already covers the bound.
    std::vector<int> xs = take_quota();
    for (int v : xs) pending.push_back({{xx, v}, outer_b(v)});
  } else if (s.k >= 4) {
    // Lone outside seed, steered away from the block past b above.
    require_healthy(x1, "the image of x beside y");
    std::vector<int> xs = take_quota();
    for (int v : xs) pending.push_back({{xx, v}, outer_b(v)});
    pending.push_back({{xx}, x1});
  } else {
    // k == 3 with a lone seed in the block adjacent to both a and b.
    // Both images below survive because their only neighbours in the
    // seed's block are neighbours of the healthy x and y.
    const int y0 = with_digit(s, yy, dim, a);
    require_healthy(x1, "the image of x beside y");
    require_healthy(y0, "the image of y beside x");
    if (yy == x1) {
      std::vector<int> xs = take_quota();
      for (int v : xs) pending.push_back({{xx, v}, outer_b(v)});
      pending.push_back({{xx}, yy});
    } else {
      // One candidate hands its fan seat to the in-block route that
      // reaches y through its image y0. Dropping y0 itself when it is a
      // candidate keeps that route clear.
      std::vector<int> xs = take_quota();
      auto hit = std::find(xs.begin(), xs.end(), y0);
      if (hit != xs.end())
        xs.erase(hit);
      else
        xs.pop_back();
      for (int v : xs) pending.push_back({{xx, v}, outer_b(v)});
      pending.push_back({{xx}, x1});
      Path pxy0 = detail::block_path(bsa, xx, y0, xs);
      pending.push_back({std::move(pxy0), yy});
    }
  }

  std::vector<Path> paths = detail::assemble(bsb, yy, pending);
  if (static_cast<int>(paths.size()) < m)
    throw ConstructionFailed("adjacent-block builder fell short of its bound");
  if (swapped)
    for (Path& p : paths) std::reverse(p.begin(), p.end());
  return HealthyPathCertificate{s, u.vertices(), x, y, m, std::move(paths)};
}

/// Builds at least n - 2*seeds internally disjoint healthy x,y-paths in
/// the binary cube. Requires seeds <= ceil(n/2); throws BoundIsZero when
/// the guarantee is nonpositive.
inline HealthyPathCertificate hypercube_survival_paths(const CubeSpec& s, const Graph& g,
                                                       const FaultSet& u, int x, int y) {
  if (s.k != 2) throw std::invalid_argument("need k == 2");
  if (s.n < 2) throw std::invalid_argument("need n >= 2");
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("endpoints must differ");
  if (!u.is_healthy(x) || !u.is_healthy(y))
    throw std::invalid_argument("endpoints must be healthy");
  const int ell = static_cast<int>(u.size());
  if (ell > (s.n + 1) / 2)
    throw std::invalid_argument("more seeds than the guarantee covers");
  const int bound = s.n - 2 * ell;
  if (bound <= 0) throw BoundIsZero("the path guarantee is zero for this many seeds");

  if (ell == 0) {
    PathFamily fam = disjoint_paths(g, x, y);
    if (static_cast<int>(fam.paths.size()) < bound)
      throw ConstructionFailed("seedless cube yielded too few disjoint paths");
    return HealthyPathCertificate{s, u.vertices(), x, y, bound, fam.paths};
  }

  int dim = 0;
  while (digit(s, x, dim) == digit(s, y, dim)) ++dim;
  auto seed_count = [&](int blk) {
    int c = 0;
    for (int f : u.vertices())
      if (digit(s, f, dim) == blk) ++c;
    return c;
  };
  int a = digit(s, x, dim), b = digit(s, y, dim);
  int xx = x, yy = y;
  bool swapped = false;
  if (seed_count(a) < seed_count(b)) {
    std::swap(a, b);
    std::swap(xx, yy);
    swapped = true;
  }

  detail::BlockSurvival bsb = detail::block_survival(s, g, u, dim, b);
  const int x1 = with_digit(s, xx, dim, b);
  const bool image_ok = u.is_healthy(x1);
  const int quota = image_ok ? s.n - 1 - 2 * ell : s.n - 2 * ell;
  std::vector<int> cand;
  for (int v : g.neighbors(xx))
    if (digit(s, v, dim) == a && u.is_healthy(v) &&
        u.is_healthy(with_digit(s, v, dim, b)))
      cand.push_back(v);
  if (static_cast<int>(cand.size()) < quota)
    throw ConstructionFailed("not enough healthy neighbour pairs beside x");
  cand.resize(static_cast<std::size_t>(quota));

  std::vector<detail::Pending> pending;
  if (image_ok) pending.push_back({{xx}, x1});
  for (int v : cand) pending.push_back({{xx, v}, with_digit(s, v, dim, b)});
  std::vector<Path> paths = detail::assemble(bsb, yy, pending);
  if (static_cast<int>(paths.size()) < bound)
    throw ConstructionFailed("hypercube builder fell short of its bound");
  if (swapped)
    for (Path& p : paths) std::reverse(p.begin(), p.end());
  return HealthyPathCertificate{s, u.vertices(), x, y, bound, std::move(paths)};
}

/// Builds at least 2*(n - seeds) internally disjoint healthy x,y-paths
/// in the k-ary n-cube for k >= 3. Requires seeds <= n; throws
/// BoundIsZero when the guarantee is nonpositive.
inline HealthyPathCertificate kary_survival_paths(const CubeSpec& s, const Graph& g,
                                                  const FaultSet& u, int x, int y) {
  if (s.k < 3) throw std::invalid_argument("need k >= 3");
  if (s.n < 2) throw std::invalid_argument("need n >= 2");
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("endpoints must differ");
  if (!u.is_healthy(x) || !u.is_healthy(y))
    throw std::invalid_argument("endpoints must be healthy");
  const int ell = static_cast<int>(u.size());
  if (ell > s.n) throw std::invalid_argument("more seeds than the guarantee covers");
  const int bound = 2 * (s.n - ell);
  if (bound <= 0) throw BoundIsZero("the path guarantee is zero for this many seeds");

  if (ell == 0) {
    PathFamily fam = disjoint_paths(g, x, y);
    if (static_cast<int>(fam.paths.size()) < bound)
      throw ConstructionFailed("seedless cube yielded too few disjoint paths");
    return HealthyPathCertificate{s, u.vertices(), x, y, bound, fam.paths};
  }

  if (s.n == 2) {
    // One seed in a 2-cube: route directly in the survival graph.
    InducedSubgraph sub = survival_subgraph(g, u);
    int lx = sub.to_local(x), ly = sub.to_local(y);
    if (lx < 0 || ly < 0)
      throw ConstructionFailed("healthy endpoint missing from the survival graph");
    PathFamily fam = disjoint_paths(sub.graph, lx, ly);
    if (static_cast<int>(fam.paths.size()) < bound)
      throw ConstructionFailed("2-cube survival graph yielded too few disjoint paths");
    std::vector<Path> paths;
    for (const Path& p : fam.paths) paths.push_back(detail::hosts_of(sub, p));
    return HealthyPathCertificate{s, u.vertices(), x, y, bound, std::move(paths)};
  }

  int dim = 0;
  while (digit(s, x, dim) == digit(s, y, dim)) ++dim;
  const int bx = digit(s, x, dim);
  const int by = digit(s, y, dim);
  auto seed_count = [&](int blk) {
    int c = 0;
    for (int f : u.vertices())
      if (digit(s, f, dim) == blk) ++c;
    return c;
  };
  auto step_between = [&](int from, int to) {
    return (from + 1) % s.k == to ? 1 : -1;
  };

  if (blocks_adjacent(s, bx, by)) {
    HealthyPathCertificate cert = adjacent_subcube_paths(s, g, u, dim, bx, by, x, y);
    if (seed_count(bx) + seed_count(by) == ell) {
      // Every seed lives beside the crossing, so the far side of the
      // ring is clean: walk x's image around it and cut across to y in
      // the block just past y. All of those images survive because
      // their only neighbours in seeded blocks are x and y themselves.
      const int sdir = step_between(bx, by);
      Path extra{x};
      for (int j = 1; j <= s.k - 3; ++j)
        extra.push_back(with_digit(s, x, dim, ((bx - j * sdir) % s.k + s.k) % s.k));
      const int c = ((by + sdir) % s.k + s.k) % s.k;
      detail::BlockSurvival bsc = detail::block_survival(s, g, u, dim, c);
      Path mid = detail::block_path(bsc, with_digit(s, x, dim, c), with_digit(s, y, dim, c));
      extra.insert(extra.end(), mid.begin(), mid.end());
      extra.push_back(y);
      cert.paths.push_back(std::move(extra));
    }
    if (static_cast<int>(cert.paths.size()) < bound)
      throw ConstructionFailed("adjacent-block case fell short of the cube bound");
    cert.bound = bound;
    return cert;
  }

  // Endpoint blocks are separated on the ring (k >= 4). Route stage by
  // stage along one ring direction, keeping every consecutive block
  // pair strictly below the seed total so each stage meets the full
  // bound; a pair can only reach the total when every seed lives in x's
  // own block, which the last branch handles with one fewer strand plus
  // a detour around the far side of the ring.
  int ca = bx, cb = by, xx = x, yy = y;
  bool swapped = false;
  if (seed_count(bx) < seed_count(by)) {
    std::swap(ca, cb);
    std::swap(xx, yy);
    swapped = true;
  }
  const int heavy = seed_count(ca);
  const int m = heavy == ell ? bound - 1 : bound;

  auto route_for = [&](int sdir) {
    std::vector<int> r{ca};
    int blk = ca;
    while (blk != cb) {
      blk = ((blk + sdir) % s.k + s.k) % s.k;
      r.push_back(blk);
    }
    return r;
  };
  auto pair_clean = [&](const std::vector<int>& r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (seed_count(r[i]) + seed_count(r[i + 1]) == ell) return false;
    return true;
  };
  std::vector<int> route = route_for(1);
  if (heavy < ell && !pair_clean(route)) {
    route = route_for(-1);
    if (!pair_clean(route))
      throw ConstructionFailed("no ring direction keeps every block pair under the seed total");
  }
  const int t = static_cast<int>(route.size()) - 1;

  std::vector<int> rep(route.size(), -1);
  rep[0] = xx;
  rep[static_cast<std::size_t>(t)] = yy;
  for (int i = 1; i < t; ++i) {
    for (int v = 0; v < g.vertex_count() && rep[i] < 0; ++v)
      if (digit(s, v, dim) == route[i] && u.is_healthy(v)) rep[i] = v;
    if (rep[i] < 0) throw ConstructionFailed("a ring block has no healthy vertex");
  }

  auto first_crossing = [&](const Path& p, int from_block) {
    for (std::size_t q = 0; q + 1 < p.size(); ++q)
      if (digit(s, p[q], dim) == from_block && digit(s, p[q + 1], dim) != from_block)
        return static_cast<int>(q);
    throw ConstructionFailed("a stage path never crosses between its blocks");
  };
  auto last_crossing = [&](const Path& p, int from_block) {
    for (std::size_t q = p.size(); q-- > 0;)
      if (digit(s, p[q], dim) == from_block) return static_cast<int>(q);
    throw ConstructionFailed("a stage path never crosses between its blocks");
  };

  // Strand = a partial path ending just before `entry`, the vertex it
  // will use in the next block on the route.
  struct Strand {
    Path part;
    int entry;
  };
  std::vector<Strand> strands;
  {
    HealthyPathCertificate fam =
        adjacent_subcube_paths(s, g, u, dim, route[0], route[1], xx, rep[1]);
    if (static_cast<int>(fam.paths.size()) < m)
      throw ConstructionFailed("first ring stage fell short");
    for (int j = 0; j < m; ++j) {
      const Path& p = fam.paths[static_cast<std::size_t>(j)];
      int q = first_crossing(p, route[0]);
      strands.push_back({Path(p.begin(), p.begin() + q + 1), p[q + 1]});
    }
  }
  for (int i = 1; i <= t - 2; ++i) {
    // Only the stage's crossing edges are kept: they hand each strand a
    // fresh healthy exit from this block and entry into the next one.
    HealthyPathCertificate fam =
        adjacent_subcube_paths(s, g, u, dim, route[i], route[i + 1], rep[i], rep[i + 1]);
    if (static_cast<int>(fam.paths.size()) < m)
      throw ConstructionFailed("a middle ring stage fell short");
    std::vector<int> exits;
    for (int j = 0; j < m; ++j) {
      const Path& p = fam.paths[static_cast<std::size_t>(j)];
      exits.push_back(p[first_crossing(p, route[i])]);
    }
    detail::BlockSurvival bsi = detail::block_survival(s, g, u, dim, route[i]);
    std::vector<int> entries;
    for (const Strand& st : strands) entries.push_back(st.entry);
    std::map<int, Path> links = detail::link_in_block(bsi, entries, exits);
    for (Strand& st : strands) {
      const Path& lp = links.at(st.entry);
      st.part.insert(st.part.end(), lp.begin(), lp.end());
      st.entry = with_digit(s, lp.back(), dim, route[i + 1]);
    }
  }

  std::vector<Path> paths;
  if (heavy < ell) {
    HealthyPathCertificate fam =
        adjacent_subcube_paths(s, g, u, dim, route[t - 1], route[t], rep[t - 1], yy);
    if (static_cast<int>(fam.paths.size()) < m)
      throw ConstructionFailed("final ring stage fell short");
    std::vector<int> exits;
    std::map<int, Path> tails;
    for (int j = 0; j < m; ++j) {
      const Path& p = fam.paths[static_cast<std::size_t>(j)];
      int q = last_crossing(p, route[t - 1]);
      exits.push_back(p[q]);
      Path suffix(p.begin() + q + 1, p.end());
      if (!tails.emplace(suffix.front(), std::move(suffix)).second)
        throw ConstructionFailed("final stage suffixes collide");
    }
    detail::BlockSurvival bsl = detail::block_survival(s, g, u, dim, route[t - 1]);
    std::vector<int> entries;
    for (const Strand& st : strands) entries.push_back(st.entry);
    std::map<int, Path> links = detail::link_in_block(bsl, entries, exits);
    for (Strand& st : strands) {
      const Path& lp = links.at(st.entry);
      st.part.insert(st.part.end(), lp.begin(), lp.end());
      auto it = tails.find(with_digit(s, lp.back(), dim, route[t]));
      if (it == tails.end())
        throw ConstructionFailed("no suffix waiting at the final crossing");
      st.part.insert(st.part.end(), it->second.begin(), it->second.end());
      tails.erase(it);
      paths.push_back(std::move(st.part));
    }
  } else {
    // Every seed is beside x. Walk the strands into chosen crossing
    // pairs one block short of y, then fan them onto y inside y's
    // untouched block; the missing strand detours around the far side
    // of the ring and enters y's block just past it.
    auto ring = [&](int i) { return ((ca + i) % s.k + s.k) % s.k; };
    std::vector<int> targets;
    for (int v = 0; v < g.vertex_count() && static_cast<int>(targets.size()) < m; ++v)
      if (digit(s, v, dim) == route[t - 1] && u.is_healthy(v) &&
          u.is_healthy(with_digit(s, v, dim, route[t])))
        targets.push_back(v);
    if (static_cast<int>(targets.size()) < m)
      throw ConstructionFailed("not enough crossing pairs into y's block");
    detail::BlockSurvival bsl = detail::block_survival(s, g, u, dim, route[t - 1]);
    std::vector<int> entries;
    for (const Strand& st : strands) entries.push_back(st.entry);
    std::map<int, Path> links = detail::link_in_block(bsl, entries, targets);
    for (Strand& st : strands) {
      const Path& lp = links.at(st.entry);
      st.part.insert(st.part.end(), lp.begin(), lp.end());
      st.entry = with_digit(s, lp.back(), dim, route[t]);
    }

    const int past = ring(t + 1);
    detail::BlockSurvival bsd = detail::block_survival(s, g, u, dim, past);
    const int xd = with_digit(s, xx, dim, past);
    const int yd = with_digit(s, yy, dim, past);
    Path prefix{xx};
    for (int i = s.k - 1; i >= t + 2; --i)
      prefix.push_back(with_digit(s, xx, dim, ring(i)));
    std::vector<detail::Pending> pending;
    for (Strand& st : strands) pending.push_back({std::move(st.part), st.entry});
    if (u.is_healthy(yd)) {
      Path mid = detail::block_path(bsd, xd, yd);
      prefix.insert(prefix.end(), mid.begin(), mid.end());
      pending.push_back({std::move(prefix), yy});
    } else {
      std::vector<int> used;
      for (const detail::Pending& p : pending) used.push_back(p.entry);
      int z = -1;
      for (int v = 0; v < g.vertex_count() && z < 0; ++v) {
        if (digit(s, v, dim) != route[t] || v == yy) continue;
        if (!u.is_healthy(v) || !u.is_healthy(with_digit(s, v, dim, past))) continue;
        if (std::find(used.begin(), used.end(), v) != used.end()) continue;
        z = v;
      }
      if (z < 0) throw ConstructionFailed("no detour entry into y's block");
      Path mid = detail::block_path(bsd, xd, with_digit(s, z, dim, past));
      prefix.insert(prefix.end(), mid.begin(), mid.end());
      pending.push_back({std::move(prefix), z});
    }
    detail::BlockSurvival bst = detail::block_survival(s, g, u, dim, route[t]);
    paths = detail::assemble(bst, yy, pending);
  }

  if (static_cast<int>(paths.size()) < bound)
    throw ConstructionFailed("ring case fell short of the cube bound");
  if (swapped)
    for (Path& p : paths) std::reverse(p.begin(), p.end());
  return HealthyPathCertificate{s, u.vertices(), x, y, bound, std::move(paths)};
}

/// Outcome of checking a certificate against its own cube. `pass` is
/// false iff diagnostics were recorded.
struct ValidationReport {
  bool pass = true;
  std::vector<std::string> diagnostics;
};

/// Recomputes everything a certificate claims: endpoints healthy, every
/// path a healthy simple x,y-path, paths pairwise disjoint except at
/// the endpoints, and at least `bound` of them.
inline ValidationReport validate_certificate(const HealthyPathCertificate& cert) {
  ValidationReport report;
  auto flag = [&](std::string msg) {
    report.pass = false;
    report.diagnostics.push_back(std::move(msg));
  };
  Graph g;
  try {
    g = build_cube(cert.spec);
  } catch (const std::exception& e) {
    flag(std::string("BadSpec: ") + e.what());
    return report;
  }
  auto in_range = [&](int v) { return 0 <= v && v < g.vertex_count(); };
  for (int f : cert.faults)
    if (!in_range(f)) {
      flag("BadSeed: seed id " + std::to_string(f) + " is out of range");
      return report;
    }
  if (!in_range(cert.x) || !in_range(cert.y)) {
    flag("BadEndpoint: an endpoint id is out of range");
    return report;
  }
  if (cert.x == cert.y) flag("BadEndpoint: x equals y");
  std::vector<int> seeds = cert.faults;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  FaultSet u(g, seeds);
  if (!u.is_healthy(cert.x) || !u.is_healthy(cert.y))
    flag("BadEndpoint: an endpoint is inside the suppressed neighbourhood");
  if (static_cast<int>(cert.paths.size()) < cert.bound)
    flag("TooFewPaths: " + std::to_string(cert.paths.size()) + " paths for a bound of " +
         std::to_string(cert.bound));
  for (std::size_t i = 0; i < cert.paths.size(); ++i) {
    const Path& p = cert.paths[i];
    const std::string tag = "path " + std::to_string(i);
    if (p.empty()) {
      flag("EmptyPath: " + tag);
      continue;
    }
    bool ids_ok = true;
    for (int v : p)
      if (!in_range(v)) {
        flag("BadVertex: " + tag + " leaves the vertex range");
        ids_ok = false;
        break;
      }
    if (!ids_ok) continue;
    if (p.front() != cert.x || p.back() != cert.y)
      flag("BadEndpoint: " + tag + " does not run from x to y");
    if (!is_path(g, p)) flag("NotAPath: " + tag + " has a gap or a repeated vertex");
    for (int v : p)
      if (!u.is_healthy(v)) {
        flag("UnhealthyVertex: " + tag + " visits " + std::to_string(v));
        break;
      }
  }
  for (std::size_t i = 0; i < cert.paths.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.paths.size(); ++j) {
      if (cert.paths[i] == cert.paths[j]) {
        flag("DuplicatePath: paths " + std::to_string(i) + " and " + std::to_string(j) +
             " are identical");
        continue;
      }
      std::vector<int> a = cert.paths[i], b = cert.paths[j];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<int> shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(shared));
      for (int v : shared)
        if (v != cert.x && v != cert.y) {
          flag("NotInternallyDisjoint: paths " + std::to_string(i) + " and " +
               std::to_string(j) + " share vertex " + std::to_string(v));
          break;
        }
    }
  }
  return report;
}

}  // namespace nbcube
