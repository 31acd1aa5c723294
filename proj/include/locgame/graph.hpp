#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locgame/error.hpp"

namespace locgame {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend Graph from_edge_list(int n, std::span<const Edge> edges);

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Validating constructor. Rejects loops, duplicate edges (in either
/// orientation) and out-of-range ids, each with its own error code.
inline Graph from_edge_list(int n, std::span<const Edge> edges) {
  require(n >= 1, ErrorCode::empty_graph, "vertex count must be positive");
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, ErrorCode::vertex_out_of_range,
            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    require(u != v, ErrorCode::loop, "at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    fail(ErrorCode::duplicate_edge, "(" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  for (auto [u, v] : g.edges_) {
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph from_edge_list(int n, const std::vector<Edge>& edges) {
  return from_edge_list(n, std::span<const Edge>(edges));
}

inline constexpr int kUnreachable = -1;

/// Hop distances from `source`; unreachable vertices get kUnreachable.
inline std::vector<int> bfs(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto d = bfs(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

inline void require_connected(const Graph& g) {
  require(g.order() > 0, ErrorCode::empty_graph, "graph has no vertices");
  require(is_connected(g), ErrorCode::disconnected, "operation requires a connected graph");
}

/// All-pairs hop distances. Rows are computed on first use (breadth-first
/// search, or a closed-form rule when one is supplied) and then shared; a
/// row never changes once published, so the oracle is safe to query from
/// several threads.
class DistanceOracle {
 public:
  using Row = std::shared_ptr<const std::vector<int>>;
  using Rule = std::function<int(Vertex, Vertex)>;

  explicit DistanceOracle(const Graph& g, Rule rule = {})
      : graph_(std::make_shared<const Graph>(g)),
        rule_(std::move(rule)),
        state_(std::make_shared<State>(static_cast<std::size_t>(g.order()))) {}

  int order() const noexcept { return graph_->order(); }
  const Graph& graph() const noexcept { return *graph_; }

  Row row(Vertex u) const {
    std::lock_guard lock(state_->mutex);
    auto& slot = state_->rows[static_cast<std::size_t>(u)];
    if (!slot) {
      if (rule_) {
        auto r = std::make_shared<std::vector<int>>(static_cast<std::size_t>(order()));
        for (Vertex v = 0; v < order(); ++v) (*r)[static_cast<std::size_t>(v)] = rule_(u, v);
        slot = std::move(r);
      } else {
        slot = std::make_shared<const std::vector<int>>(bfs(*graph_, u));
      }
    }
    return slot;
  }

  int operator()(Vertex u, Vertex v) const {
    if (rule_) return rule_(u, v);
    return (*row(u))[static_cast<std::size_t>(v)];
  }

  bool has_rule() const noexcept { return static_cast<bool>(rule_); }

 private:
  struct State {
    explicit State(std::size_t n) : rows(n) {}
    std::mutex mutex;
    std::vector<Row> rows;
  };

  std::shared_ptr<const Graph> graph_;
  Rule rule_;
  std::shared_ptr<State> state_;
};

/// Distance oracle for a connected graph; throws on disconnected input.
inline DistanceOracle distances(const Graph& g, DistanceOracle::Rule rule = {}) {
  require_connected(g);
  return DistanceOracle(g, std::move(rule));
}

struct DegeneracyResult {
  int k = 0;
  std::vector<Vertex> elimination_order;
  std::vector<Vertex> core;  // sorted ids of the k-core
};

/// Minimum-degree peeling with bucket queues, O(n + m).
inline DegeneracyResult degeneracy(const Graph& g) {
  require(g.order() > 0, ErrorCode::empty_graph, "degeneracy of an empty graph");
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  int maxdeg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    maxdeg = std::max(maxdeg, g.degree(v));
  }
  // Buckets hold vertices keyed by current degree; std::set gives lowest-id-first ties.
  std::vector<std::set<Vertex>> bucket(static_cast<std::size_t>(maxdeg) + 1);
  for (Vertex v = 0; v < n; ++v) bucket[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].insert(v);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> core_number(static_cast<std::size_t>(n), 0);

  DegeneracyResult res;
  res.elimination_order.reserve(static_cast<std::size_t>(n));
  int current = 0;
  int lo = 0;
  for (int step = 0; step < n; ++step) {
    lo = std::max(0, std::min(lo, maxdeg));
    while (bucket[static_cast<std::size_t>(lo)].empty()) ++lo;
    Vertex v = *bucket[static_cast<std::size_t>(lo)].begin();
    bucket[static_cast<std::size_t>(lo)].erase(bucket[static_cast<std::size_t>(lo)].begin());
    current = std::max(current, lo);
    core_number[static_cast<std::size_t>(v)] = current;
    removed[static_cast<std::size_t>(v)] = 1;
    res.elimination_order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      auto& dw = deg[static_cast<std::size_t>(w)];
      if (removed[static_cast<std::size_t>(w)]) continue;
      bucket[static_cast<std::size_t>(dw)].erase(w);
      --dw;
      bucket[static_cast<std::size_t>(dw)].insert(w);
    }
    lo = lo > 0 ? lo - 1 : 0;
  }
  res.k = current;
  for (Vertex v = 0; v < n; ++v)
    if (core_number[static_cast<std::size_t>(v)] >= res.k) res.core.push_back(v);
  return res;
}

/// First-fit coloring along `order`. Colors are 0-based.
inline std::vector<int> greedy_color(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  require(static_cast<int>(order.size()) == n, ErrorCode::invalid_argument, "order is not a permutation");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    require(g.contains(v) && !seen[static_cast<std::size_t>(v)], ErrorCode::invalid_argument,
            "order is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> mark;
  for (Vertex v : order) {
    mark.assign(static_cast<std::size_t>(g.degree(v)) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      int c = color[static_cast<std::size_t>(w)];
      if (c >= 0 && c <= g.degree(v)) mark[static_cast<std::size_t>(c)] = 1;
    }
    int c = 0;
    while (mark[static_cast<std::size_t>(c)]) ++c;
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

inline int color_count(std::span<const int> coloring) {
  int m = -1;
  for (int c : coloring) m = std::max(m, c);
  return m + 1;
}

inline bool is_proper_coloring(const Graph& g, std::span<const int> coloring) {
  for (auto [u, v] : g.edges())
    if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(v)]) return false;
  return true;
}

/// Greedy coloring along the reverse of the degeneracy elimination order;
/// uses at most degeneracy + 1 colors.
inline std::vector<int> degeneracy_coloring(const Graph& g) {
  auto order = degeneracy(g).elimination_order;
  std::reverse(order.begin(), order.end());
  return greedy_color(g, order);
}

/// Color classes if g is bipartite. The class containing vertex 0 comes first.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

/// Subgraph induced by `keep` (sorted); returns the graph and new->old id map.
inline std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> back(keep.begin(), keep.end());
  for (std::size_t i = 0; i < back.size(); ++i) index[static_cast<std::size_t>(back[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (index[static_cast<std::size_t>(u)] >= 0 && index[static_cast<std::size_t>(v)] >= 0)
      es.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
  return {from_edge_list(static_cast<int>(back.size()), es), std::move(back)};
}

}  // namespace locgame
