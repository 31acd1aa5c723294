#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locgame/engine.hpp"
#include "locgame/graph.hpp"

namespace locgame {

using StateMask = std::uint32_t;

inline constexpr int kSolverMaxVertices = 12;
inline constexpr int kSolverMaxCops = 3;
inline constexpr int kDimensionMaxVertices = 16;

/// For every post-move candidate set (bitmask over V): the number of rounds
/// the cops need to force capture, or robber_win.
struct GameStateTable {
  static constexpr int robber_win = std::numeric_limits<int>::max();

  int n = 0;
  int k = 0;
  std::vector<Probe> probes;        // all min(k, n)-subsets of V, lexicographic
  std::vector<int> depth;           // per mask; robber_win if the cops cannot force capture
  std::vector<int> witness;         // per mask; index into probes, -1 if none
  std::vector<StateMask> closed_nbhd;

  StateMask full() const { return n == 32 ? ~StateMask{0} : (StateMask{1} << n) - 1; }
  bool cop_win(StateMask s) const { return depth[s] != robber_win; }
  bool cops_win() const { return cop_win(full()); }

  StateMask expand(StateMask s) const {
    StateMask out = 0;
    for (StateMask b = s; b; b &= b - 1) out |= closed_nbhd[std::countr_zero(b)];
    return out;
  }

  static StateMask mask_of(std::span<const Vertex> vs) {
    StateMask m = 0;
    for (Vertex v : vs) m |= StateMask{1} << v;
    return m;
  }
};

inline long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

/// Admissible instance sizes: n <= 12 and a state-space budget equal to
/// 2^12 * C(12, 3); any k >= n is trivial and always admitted.
inline bool solver_within_limits(int n, int k) {
  if (n > kSolverMaxVertices || n < 1 || k < 1) return false;
  if (k >= n) return true;
  const long long budget = (1LL << kSolverMaxVertices) * binomial(kSolverMaxVertices, kSolverMaxCops);
  return (1LL << n) * binomial(n, k) <= budget;
}

namespace detail {

inline std::vector<Probe> all_subsets(int n, int r) {
  std::vector<Probe> out;
  Probe cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

/// Least fixpoint of "some probe sends every non-singleton class to a
/// cop-winning expansion", computed by rounds of increasing depth: a state
/// gets depth d when some probe leaves only singletons or classes whose
/// expansions were settled with depth <= d - 1.
inline std::pair<bool, GameStateTable> cops_win(const Graph& g, int k) {
  require_connected(g);
  const int n = g.order();
  require(solver_within_limits(n, k), ErrorCode::size_limit,
          "exact solver limited to n <= 12 with a 2^12*C(12,3) state budget (n=" + std::to_string(n) +
              ", k=" + std::to_string(k) + ")");
  auto dist = distances(g);

  GameStateTable t;
  t.n = n;
  t.k = k;
  t.probes = detail::all_subsets(n, std::min(k, n));
  t.closed_nbhd.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    StateMask m = StateMask{1} << v;
    for (Vertex w : g.neighbors(v)) m |= StateMask{1} << w;
    t.closed_nbhd[v] = m;
  }
  const std::size_t states = std::size_t{1} << n;
  t.depth.assign(states, GameStateTable::robber_win);
  t.witness.assign(states, -1);

  // sig[p][v]: compressed id of v's distance vector under probe p.
  const std::size_t P = t.probes.size();
  std::vector<std::vector<std::uint8_t>> sig(P, std::vector<std::uint8_t>(n));
  std::vector<int> classes_of(P);
  for (std::size_t p = 0; p < P; ++p) {
    std::map<DistanceVector, int> ids;
    for (Vertex v = 0; v < n; ++v) {
      auto dv = distance_vector(dist, t.probes[p], v);
      auto [it, _] = ids.emplace(dv, static_cast<int>(ids.size()));
      sig[p][v] = static_cast<std::uint8_t>(it->second);
    }
    classes_of[p] = static_cast<int>(ids.size());
  }

  std::vector<StateMask> cls(n);
  auto probe_works = [&](std::size_t p, StateMask s, int limit) {
    std::fill(cls.begin(), cls.begin() + classes_of[p], 0);
    for (StateMask b = s; b; b &= b - 1) {
      int v = std::countr_zero(b);
      cls[sig[p][v]] |= StateMask{1} << v;
    }
    for (int c = 0; c < classes_of[p]; ++c) {
      StateMask m = cls[c];
      if (std::popcount(m) <= 1) continue;
      if (t.depth[t.expand(m)] > limit) return false;
    }
    return true;
  };

  std::vector<std::pair<StateMask, int>> settled;
  for (int d = 1;; ++d) {
    settled.clear();
    for (StateMask s = 1; s < states; ++s) {
      if (t.depth[s] != GameStateTable::robber_win) continue;
      for (std::size_t p = 0; p < P; ++p) {
        if (probe_works(p, s, d - 1)) {
          settled.emplace_back(s, static_cast<int>(p));
          break;
        }
      }
    }
    if (settled.empty()) break;
    for (auto [s, p] : settled) {
      t.depth[s] = d;
      t.witness[s] = p;
    }
  }
  return {t.cops_win(), std::move(t)};
}

/// Least k <= kmax with cops_win(g, k), or nullopt if it exceeds kmax.
inline std::optional<int> localization_number(const Graph& g, int kmax) {
  for (int k = 1; k <= kmax; ++k)
    if (cops_win(g, k).first) return k;
  return std::nullopt;
}

/// Smallest resolving set size, by subset enumeration in increasing size.
inline int metric_dimension(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  require(n <= kDimensionMaxVertices, ErrorCode::size_limit, "metric dimension limited to n <= 16");
  if (n == 1) return 0;
  auto dist = distances(g);
  std::vector<std::vector<int>> d(n);
  for (Vertex v = 0; v < n; ++v) d[v] = *dist.row(v);
  for (int size = 1; size <= n; ++size) {
    for (const Probe& s : detail::all_subsets(n, size)) {
      std::vector<DistanceVector> vecs(n);
      for (Vertex v = 0; v < n; ++v)
        for (Vertex u : s) vecs[v].push_back(d[u][v]);
      std::sort(vecs.begin(), vecs.end());
      if (std::adjacent_find(vecs.begin(), vecs.end()) == vecs.end()) return size;
    }
  }
  return n;
}

/// Smallest m with base^m >= x (x >= 1).
inline int ceil_log(int base, long long x) {
  int m = 0;
  long long p = 1;
  while (p < x) {
    p *= base;
    ++m;
  }
  return m;
}

inline long long int_pow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

struct BoundsReport {
  int degeneracy = 0;
  std::optional<int> lower_deg;   // ceil(log3(k + 1))
  std::optional<int> lower_bip;   // ceil(log2 k), bipartite graphs only
  std::optional<int> dim;
  std::optional<int> zeta;
  int greedy_chromatic = 0;
  bool bipartite = false;
};

struct BoundsOptions {
  bool exact_zeta = false;
  int kmax = kSolverMaxCops;
  bool dim = false;
};

inline BoundsReport lower_bounds(const Graph& g, const BoundsOptions& opts = {}) {
  require_connected(g);
  BoundsReport r;
  auto deg = degeneracy(g);
  r.degeneracy = deg.k;
  r.bipartite = bipartition(g).has_value();
  if (deg.k >= 1) {
    r.lower_deg = ceil_log(3, deg.k + 1LL);
    if (r.bipartite) r.lower_bip = ceil_log(2, deg.k);
  }
  r.greedy_chromatic = color_count(degeneracy_coloring(g));
  if (opts.dim && g.order() <= kDimensionMaxVertices) r.dim = metric_dimension(g);
  if (opts.exact_zeta && g.order() <= kSolverMaxVertices) {
    for (int k = 1; k <= opts.kmax && solver_within_limits(g.order(), k); ++k) {
      if (cops_win(g, k).first) {
        r.zeta = k;
        break;
      }
    }
  }
  return r;
}

/// Greedy chromatic number <= 3^k_verified. A false result contradicts the
/// degeneracy lower bound and indicates a bug upstream.
inline bool verify_chromatic_bound(const Graph& g, int k_verified) {
  int chi = color_count(degeneracy_coloring(g));
  return chi <= int_pow(3, k_verified);
}

}  // namespace locgame
