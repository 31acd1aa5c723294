#pragma once

#include <array>
#include <bit>
#include <numeric>
#include <vector>

#include "locgame/graph.hpp"
#include "locgame/rng.hpp"

namespace locgame {

/// A graph whose vertices are integer tuples; coordinate i ranges over
/// [0, radix[i]). Ids are assigned in lexicographic tuple order
/// (coordinate 0 most significant).
struct ProductGraph {
  Graph graph;
  std::vector<int> radix;

  int dimension() const noexcept { return static_cast<int>(radix.size()); }

  std::vector<int> coords(Vertex v) const {
    std::vector<int> c(radix.size());
    for (int i = dimension() - 1; i >= 0; --i) {
      c[i] = v % radix[i];
      v /= radix[i];
    }
    return c;
  }

  Vertex vertex(std::span<const int> c) const {
    Vertex v = 0;
    for (int i = 0; i < dimension(); ++i) v = v * radix[i] + c[i];
    return v;
  }
};

namespace detail {

inline int checked_power(int base, int exp, int limit = 1 << 26) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    require(r <= limit, ErrorCode::size_limit, "product graph too large");
  }
  return static_cast<int>(r);
}

inline int total_size(std::span<const int> radix) {
  long long r = 1;
  for (int x : radix) {
    r *= x;
    require(r <= (1 << 26), ErrorCode::size_limit, "product graph too large");
  }
  return static_cast<int>(r);
}

}  // namespace detail

/// Cartesian product of paths with the given vertex counts.
inline ProductGraph path_product(std::span<const int> lengths) {
  require(!lengths.empty(), ErrorCode::invalid_argument, "path_product needs at least one factor");
  for (int len : lengths) require(len >= 2, ErrorCode::invalid_argument, "every path needs at least 2 vertices");
  ProductGraph pg;
  pg.radix.assign(lengths.begin(), lengths.end());
  const int n = detail::total_size(pg.radix);
  std::vector<int> stride(pg.radix.size(), 1);
  for (int i = pg.dimension() - 2; i >= 0; --i) stride[i] = stride[i + 1] * pg.radix[i + 1];
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    auto c = pg.coords(v);
    for (int i = 0; i < pg.dimension(); ++i)
      if (c[i] + 1 < pg.radix[i]) edges.emplace_back(v, v + stride[i]);
  }
  pg.graph = from_edge_list(n, edges);
  return pg;
}

inline ProductGraph path_product(std::initializer_list<int> lengths) {
  return path_product(std::span<const int>(lengths.begin(), lengths.size()));
}

inline ProductGraph hypercube(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "hypercube dimension must be at least 1");
  require(n <= 24, ErrorCode::size_limit, "hypercube dimension too large");
  std::vector<int> twos(n, 2);
  return path_product(twos);
}

/// Closed-form hypercube distance: Hamming distance of the coordinate tuples.
inline DistanceOracle hypercube_distances(const ProductGraph& q) {
  return DistanceOracle(q.graph, [](Vertex u, Vertex v) { return std::popcount(static_cast<unsigned>(u ^ v)); });
}

/// k-fold strong product of C_m: distinct tuples are adjacent iff every
/// coordinate differs by at most 1 modulo m.
inline ProductGraph strong_cycle_power(int m, int k) {
  require(m >= 5, ErrorCode::invalid_argument, "cycle length must be at least 5");
  require(k >= 1, ErrorCode::invalid_argument, "dimension must be at least 1");
  ProductGraph pg;
  pg.radix.assign(k, m);
  const int n = detail::checked_power(m, k);
  const int offsets = detail::checked_power(3, k);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (offsets - 1) / 2);
  std::vector<int> c(k), d(k);
  for (Vertex v = 0; v < n; ++v) {
    c = pg.coords(v);
    for (int code = 0; code < offsets; ++code) {
      int x = code;
      bool zero = true;
      for (int i = 0; i < k; ++i) {
        int delta = x % 3 - 1;
        x /= 3;
        if (delta != 0) zero = false;
        d[i] = ((c[i] + delta) % m + m) % m;
      }
      if (zero) continue;
      Vertex w = pg.vertex(d);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  pg.graph = from_edge_list(n, edges);
  return pg;
}

/// Vertex naming for the satellite/thread construction on the k-fold
/// strong power of C_40. Ids: core tuples (lexicographic), then satellites
/// s_{i,t} (i ascending, t ascending), then thread internals grouped by
/// satellite, then core endpoint, then position. Position p is the number
/// of steps from the core endpoint (1..thread_len-1).
struct GkLayout {
  static constexpr int kCycle = 40;
  static constexpr int kThreadLength = 40;
  static constexpr std::array<int, 2> kOffsets{0, 10};

  int k = 0;
  int core_count = 0;     // 40^k
  int slice_count = 0;    // 40^(k-1): threads per satellite

  enum class Role { core, satellite, thread };

  struct Info {
    Role role = Role::core;
    std::vector<int> coords;  // core: the tuple; thread: the core endpoint's tuple
    int axis = 0;             // satellite/thread: i (1-based)
    int offset = 0;           // satellite/thread: t
    Vertex endpoint = -1;     // thread: core endpoint id
    int position = 0;         // thread: steps from the core endpoint
  };

  int vertex_count() const { return core_count + 2 * k + 2 * k * slice_count * (kThreadLength - 1); }

  std::vector<int> core_coords(Vertex v) const {
    std::vector<int> c(k);
    for (int i = k - 1; i >= 0; --i) {
      c[i] = v % kCycle;
      v /= kCycle;
    }
    return c;
  }

  Vertex core(std::span<const int> c) const {
    Vertex v = 0;
    for (int i = 0; i < k; ++i) v = v * kCycle + c[i];
    return v;
  }

  static int offset_index(int t) {
    require(t == kOffsets[0] || t == kOffsets[1], ErrorCode::invalid_argument, "satellite offset must be 0 or 10");
    return t == kOffsets[0] ? 0 : 1;
  }

  /// Satellite s_{axis,t}; axis is 1-based.
  Vertex satellite(int axis, int t) const {
    require(axis >= 1 && axis <= k, ErrorCode::invalid_argument, "satellite axis out of range");
    return core_count + 2 * (axis - 1) + offset_index(t);
  }

  bool is_satellite(Vertex v) const { return v >= core_count && v < core_count + 2 * k; }
  bool is_core(Vertex v) const { return v >= 0 && v < core_count; }
  bool is_thread(Vertex v) const { return v >= core_count + 2 * k && v < vertex_count(); }

  // Rank of a core endpoint among the endpoints of its satellite's threads:
  // lexicographic rank of the tuple with coordinate `axis` deleted.
  int endpoint_rank(std::span<const int> c, int axis) const {
    int r = 0;
    for (int i = 0; i < k; ++i)
      if (i != axis - 1) r = r * kCycle + c[i];
    return r;
  }

  Vertex thread_vertex(int axis, int t, Vertex endpoint, int position) const {
    require(position >= 1 && position < kThreadLength, ErrorCode::invalid_argument, "thread position out of range");
    auto c = core_coords(endpoint);
    require(c[axis - 1] == t, ErrorCode::invalid_argument, "core vertex is not an endpoint of this satellite");
    int sidx = satellite(axis, t) - core_count;
    return core_count + 2 * k + (sidx * slice_count + endpoint_rank(c, axis)) * (kThreadLength - 1) + (position - 1);
  }

  Info describe(Vertex v) const {
    Info info;
    if (is_core(v)) {
      info.role = Role::core;
      info.coords = core_coords(v);
      return info;
    }
    if (is_satellite(v)) {
      int sidx = v - core_count;
      info.role = Role::satellite;
      info.axis = sidx / 2 + 1;
      info.offset = kOffsets[sidx % 2];
      return info;
    }
    require(is_thread(v), ErrorCode::invalid_argument, "vertex id out of range");
    int rel = v - core_count - 2 * k;
    info.role = Role::thread;
    info.position = rel % (kThreadLength - 1) + 1;
    rel /= kThreadLength - 1;
    int rank = rel % slice_count;
    int sidx = rel / slice_count;
    info.axis = sidx / 2 + 1;
    info.offset = kOffsets[sidx % 2];
    std::vector<int> c(k);
    for (int i = k - 1; i >= 0; --i) {
      if (i == info.axis - 1) continue;
      c[i] = rank % kCycle;
      rank /= kCycle;
    }
    c[info.axis - 1] = info.offset;
    info.coords = c;
    info.endpoint = core(c);
    return info;
  }

  /// d(s_{axis,t}, w) for a core vertex w.
  static int satellite_core_distance(int coordinate, int t) {
    int diff = coordinate > t ? coordinate - t : t - coordinate;
    return kThreadLength + std::min(diff, kCycle - diff);
  }
};

struct GkGraph {
  Graph graph;
  GkLayout layout;
};

inline GkGraph gk(int k) {
  require(k >= 1, ErrorCode::invalid_argument, "G_k needs k >= 1");
  require(k <= 3, ErrorCode::size_limit, "G_k is only built for k <= 3");
  GkGraph out;
  auto core = strong_cycle_power(GkLayout::kCycle, k);
  out.layout.k = k;
  out.layout.core_count = core.graph.order();
  out.layout.slice_count = detail::checked_power(GkLayout::kCycle, k - 1);
  const auto& L = out.layout;
  std::vector<Edge> edges = core.graph.edges();
  for (int axis = 1; axis <= k; ++axis) {
    for (int t : GkLayout::kOffsets) {
      Vertex s = L.satellite(axis, t);
      for (Vertex w = 0; w < L.core_count; ++w) {
        auto c = L.core_coords(w);
        if (c[axis - 1] != t) continue;
        Vertex prev = w;
        for (int p = 1; p < GkLayout::kThreadLength; ++p) {
          Vertex x = L.thread_vertex(axis, t, w, p);
          edges.emplace_back(prev, x);
          prev = x;
        }
        edges.emplace_back(prev, s);
      }
    }
  }
  out.graph = from_edge_list(L.vertex_count(), edges);
  return out;
}

inline Graph path(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edge_list(n, e);
}

inline Graph cycle(int n) {
  require(n >= 3, ErrorCode::invalid_argument, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edge_list(n, e);
}

inline Graph clique(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "clique needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edge_list(n, e);
}

/// Star with center 0 and n - 1 leaves.
inline Graph star(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "star needs n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return from_edge_list(n, e);
}

// Composition of random_outerplanar: each growth step attaches either a
// bridge (probability kBridge) or a polygon of 3..kMaxPolygon vertices at a
// uniformly chosen existing vertex (or, with probability kExtendPath, the
// newest vertex, to grow pendant paths). Polygons are randomly triangulated
// and each diagonal survives with probability kKeepChord.
namespace outerplanar_mix {
inline constexpr double kBridge = 0.3;
inline constexpr double kExtendPath = 0.25;
inline constexpr int kMaxPolygon = 9;
inline constexpr double kKeepChord = 0.5;
}  // namespace outerplanar_mix

inline Graph random_outerplanar(int n, std::uint64_t seed) {
  require(n >= 2, ErrorCode::invalid_argument, "random_outerplanar needs n >= 2");
  using namespace outerplanar_mix;
  Rng rng = Rng::split(seed, "random_outerplanar");
  std::vector<Edge> edges;
  int count = 1;

  auto triangulate = [&](auto&& self, const std::vector<Vertex>& poly, int i, int j) -> void {
    if (j - i < 2) return;
    int m = rng.uniform_int(i + 1, j - 1);
    if (m - i > 1 && rng.chance(kKeepChord)) edges.emplace_back(poly[i], poly[m]);
    if (j - m > 1 && rng.chance(kKeepChord)) edges.emplace_back(poly[m], poly[j]);
    self(self, poly, i, m);
    self(self, poly, m, j);
  };

  while (count < n) {
    Vertex attach = rng.chance(kExtendPath) ? count - 1 : static_cast<Vertex>(rng.below(count));
    int remaining = n - count;
    if (remaining == 1 || rng.chance(kBridge)) {
      edges.emplace_back(attach, count++);
      continue;
    }
    int s = rng.uniform_int(3, std::min(kMaxPolygon, remaining + 1));
    std::vector<Vertex> poly{attach};
    for (int i = 1; i < s; ++i) poly.push_back(count++);
    for (int i = 0; i < s; ++i) edges.emplace_back(poly[i], poly[(i + 1) % s]);
    triangulate(triangulate, poly, 0, s - 1);
  }

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return from_edge_list(n, edges);
}

}  // namespace locgame
