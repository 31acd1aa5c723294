#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.
struct BlockTree {
  std::vector<std::vector<Vertex>> blocks;      // sorted vertex sets, blocks ordered by their vertex lists
  std::vector<std::vector<Edge>> block_edges;   // edges of each block, (u < v), sorted
  std::vector<Vertex> cut_vertices;             // sorted
  std::vector<std::vector<int>> blocks_of;      // per vertex: indices of blocks containing it

  bool is_cut(Vertex v) const { return blocks_of[v].size() > 1; }
  std::size_t count() const noexcept { return blocks.size(); }
};

/// Hopcroft-Tarjan biconnected components, iterative.
inline BlockTree block_decomposition(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  BlockTree tree;
  tree.blocks_of.assign(n, {});
  if (n == 1) {
    tree.blocks.push_back({0});
    tree.block_edges.push_back({});
    tree.blocks_of[0] = {0};
    return tree;
  }

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> raw;
  int timer = 0;

  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex u = stack.back();
    auto nbrs = g.neighbors(u);
    if (next_child[u] < nbrs.size()) {
      Vertex w = nbrs[next_child[u]++];
      if (disc[w] < 0) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        edge_stack.emplace_back(u, w);
        stack.push_back(w);
      } else if (w != parent[u] && disc[w] < disc[u]) {
        edge_stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[u];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[u]);
    if (low[u] >= disc[p]) {
      std::vector<Edge> comp;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        comp.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
        if (e == Edge{p, u}) break;
      }
      std::sort(comp.begin(), comp.end());
      raw.push_back(std::move(comp));
    }
  }

  std::vector<std::pair<std::vector<Vertex>, std::vector<Edge>>> items;
  for (auto& es : raw) {
    std::vector<Vertex> vs;
    for (auto [a, b] : es) {
      vs.push_back(a);
      vs.push_back(b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    items.emplace_back(std::move(vs), std::move(es));
  }
  std::sort(items.begin(), items.end());
  for (auto& [vs, es] : items) {
    int id = static_cast<int>(tree.blocks.size());
    for (Vertex v : vs) tree.blocks_of[v].push_back(id);
    tree.blocks.push_back(std::move(vs));
    tree.block_edges.push_back(std::move(es));
  }
  for (Vertex v = 0; v < n; ++v)
    if (tree.blocks_of[v].size() > 1) tree.cut_vertices.push_back(v);
  return tree;
}

struct BlockEmbedding {
  std::vector<Vertex> cycle;  // outer Hamiltonian cycle; empty for K2 (and K1) blocks
  std::vector<Edge> chords;   // (u < v), sorted
};

struct OuterEmbedding {
  BlockTree tree;
  std::vector<BlockEmbedding> blocks;  // aligned with tree.blocks
};

inline bool chords_cross(const std::vector<int>& pos, Edge a, Edge b) {
  int a1 = pos[a.first], a2 = pos[a.second];
  int b1 = pos[b.first], b2 = pos[b.second];
  if (a1 > a2) std::swap(a1, a2);
  if (b1 > b2) std::swap(b1, b2);
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

/// Outer cycle of a 2-connected block with at least 3 vertices, by
/// repeatedly removing a degree-2 vertex v (neighbours a, b) and adding a
/// virtual edge ab. Expansion in reverse order rebuilds the cycle, which is
/// then checked edge by edge. Returns nullopt if the block is not outerplanar.
inline std::optional<BlockEmbedding> outer_cycle(std::span<const Vertex> vertices, std::span<const Edge> edges) {
  const int nb = static_cast<int>(vertices.size());
  if (nb < 3) return std::nullopt;
  if (static_cast<int>(edges.size()) > 2 * nb - 3) return std::nullopt;
  std::map<Vertex, int> local;
  for (int i = 0; i < nb; ++i) local[vertices[i]] = i;

  std::vector<std::set<int>> adj(nb);
  std::set<std::pair<int, int>> real;
  for (auto [u, v] : edges) {
    int a = local.at(u), b = local.at(v);
    adj[a].insert(b);
    adj[b].insert(a);
    real.emplace(std::min(a, b), std::max(a, b));
  }
  std::set<int> deg2;
  for (int i = 0; i < nb; ++i)
    if (adj[i].size() == 2) deg2.insert(i);
  std::vector<char> gone(nb, 0);
  struct Removal {
    int v, a, b;
  };
  std::vector<Removal> removals;
  int remaining = nb;
  while (remaining > 3) {
    if (deg2.empty()) return std::nullopt;
    int v = *deg2.begin();
    deg2.erase(deg2.begin());
    int a = *adj[v].begin();
    int b = *std::next(adj[v].begin());
    removals.push_back({v, a, b});
    gone[v] = 1;
    --remaining;
    adj[a].erase(v);
    adj[b].erase(v);
    adj[a].insert(b);
    adj[b].insert(a);
    for (int x : {a, b}) {
      if (adj[x].size() == 2) deg2.insert(x);
      else deg2.erase(x);
    }
  }
  std::vector<int> last;
  for (int i = 0; i < nb; ++i)
    if (!gone[i]) last.push_back(i);
  if (last.size() != 3) return std::nullopt;
  std::vector<int> next(nb, -1), prev(nb, -1);
  auto link = [&](int x, int y) {
    next[x] = y;
    prev[y] = x;
  };
  link(last[0], last[1]);
  link(last[1], last[2]);
  link(last[2], last[0]);
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    auto [v, a, b] = *it;
    if (next[a] == b) {
      link(a, v);
      link(v, b);
    } else if (next[b] == a) {
      link(b, v);
      link(v, a);
    } else {
      return std::nullopt;
    }
  }

  // Normalise: start at the least id, walk toward its smaller cycle neighbour.
  int start = 0;  // vertices are sorted, so local 0 is the least id
  int dir_next = vertices[next[start]] < vertices[prev[start]];
  std::vector<int> order;
  for (int x = start, i = 0; i < nb; ++i) {
    order.push_back(x);
    x = dir_next ? next[x] : prev[x];
  }
  std::vector<int> pos(nb, -1);
  for (int i = 0; i < nb; ++i) {
    if (pos[order[i]] >= 0) return std::nullopt;
    pos[order[i]] = i;
  }
  std::set<std::pair<int, int>> cycle_edges;
  for (int i = 0; i < nb; ++i) {
    int x = order[i], y = order[(i + 1) % nb];
    std::pair<int, int> e{std::min(x, y), std::max(x, y)};
    if (!real.count(e)) return std::nullopt;
    cycle_edges.insert(e);
  }
  std::vector<Edge> chords_local;
  for (auto e : real)
    if (!cycle_edges.count(e)) chords_local.emplace_back(e.first, e.second);
  for (std::size_t i = 0; i < chords_local.size(); ++i)
    for (std::size_t j = i + 1; j < chords_local.size(); ++j)
      if (chords_cross(pos, chords_local[i], chords_local[j])) return std::nullopt;

  BlockEmbedding emb;
  for (int x : order) emb.cycle.push_back(vertices[x]);
  for (auto [a, b] : chords_local) emb.chords.emplace_back(std::min(vertices[a], vertices[b]), std::max(vertices[a], vertices[b]));
  std::sort(emb.chords.begin(), emb.chords.end());
  return emb;
}

/// Outer embedding of every block; throws not_outerplanar if some block has
/// no outer Hamiltonian cycle with non-crossing chords.
inline OuterEmbedding outer_embedding(const Graph& g) {
  OuterEmbedding out;
  out.tree = block_decomposition(g);
  for (std::size_t b = 0; b < out.tree.count(); ++b) {
    const auto& vs = out.tree.blocks[b];
    if (vs.size() <= 2) {
      out.blocks.push_back({});
      continue;
    }
    auto emb = outer_cycle(vs, out.tree.block_edges[b]);
    if (!emb) fail(ErrorCode::not_outerplanar, "block " + std::to_string(b) + " has no outer cycle");
    out.blocks.push_back(std::move(*emb));
  }
  return out;
}

inline bool is_outerplanar(const Graph& g) {
  try {
    outer_embedding(g);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_outerplanar) return false;
    throw;
  }
}

}  // namespace locgame
