#include <gtest/gtest.h>

#include <set>

#include "locgame/blocks.hpp"
#include "locgame/generators.hpp"

using namespace locgame;

namespace {

// Test oracle: all Hamiltonian cycles of a small graph as normalised vertex
// sequences (start at least id, direction toward the smaller neighbour).
std::set<std::vector<Vertex>> hamiltonian_cycles(const Graph& g) {
  const int n = g.order();
  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> cur{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if (g.adjacent(cur.back(), 0) && cur[1] < cur.back()) out.insert(cur);
      return;
    }
    for (Vertex w : g.neighbors(cur.back())) {
      if (used[w]) continue;
      used[w] = 1;
      cur.push_back(w);
      self(self);
      cur.pop_back();
      used[w] = 0;
    }
  };
  rec(rec);
  return out;
}

// Oracle for outerplanarity of a 2-connected graph: some Hamiltonian cycle
// leaves only pairwise non-crossing chords.
bool brute_outerplanar_block(const Graph& g) {
  for (const auto& cyc : hamiltonian_cycles(g)) {
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[cyc[i]] = i;
    std::vector<Edge> chords;
    for (auto [u, v] : g.edges()) {
      int d = std::abs(pos[u] - pos[v]);
      if (d != 1 && d != g.order() - 1) chords.emplace_back(u, v);
    }
    bool ok = true;
    for (std::size_t i = 0; i < chords.size() && ok; ++i)
      for (std::size_t j = i + 1; j < chords.size() && ok; ++j) ok = !chords_cross(pos, chords[i], chords[j]);
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(BlockDecomposition, Examples) {
  auto p4 = block_decomposition(path(4));
  EXPECT_EQ(p4.count(), 3u);
  for (const auto& b : p4.blocks) EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(p4.cut_vertices, (std::vector<Vertex>{1, 2}));

  auto bowtie = block_decomposition(from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}));
  EXPECT_EQ(bowtie.count(), 2u);
  EXPECT_EQ(bowtie.cut_vertices, std::vector<Vertex>{2});

  auto c6 = block_decomposition(cycle(6));
  EXPECT_EQ(c6.count(), 1u);
  EXPECT_TRUE(c6.cut_vertices.empty());
}

TEST(BlockDecomposition, RejectsDisconnected) {
  EXPECT_THROW(block_decomposition(from_edge_list(4, {{0, 1}, {2, 3}})), Error);
}

TEST(BlockDecomposition, EdgePartitionInvariant) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_outerplanar(25, seed);
    auto t = block_decomposition(g);
    std::multiset<Edge> seen;
    for (const auto& es : t.block_edges) seen.insert(es.begin(), es.end());
    EXPECT_EQ(seen.size(), g.size());
    EXPECT_EQ(std::set<Edge>(seen.begin(), seen.end()).size(), g.size());
    for (std::size_t a = 0; a < t.count(); ++a)
      for (std::size_t b = a + 1; b < t.count(); ++b) {
        std::vector<Vertex> common;
        std::set_intersection(t.blocks[a].begin(), t.blocks[a].end(), t.blocks[b].begin(), t.blocks[b].end(),
                              std::back_inserter(common));
        ASSERT_LE(common.size(), 1u);
        if (!common.empty()) {
          EXPECT_TRUE(t.is_cut(common[0]));
        }
      }
  }
}

TEST(OuterEmbedding, Cycle) {
  auto e = outer_embedding(cycle(5));
  ASSERT_EQ(e.blocks.size(), 1u);
  EXPECT_EQ(e.blocks[0].cycle, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(e.blocks[0].chords.empty());
}

TEST(OuterEmbedding, FanIsUnique) {
  auto fan = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}});
  auto cycles = hamiltonian_cycles(fan);
  ASSERT_EQ(cycles.size(), 1u);
  auto e = outer_embedding(fan);
  EXPECT_EQ(e.blocks[0].cycle, *cycles.begin());
  EXPECT_EQ(e.blocks[0].cycle, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(e.blocks[0].chords, (std::vector<Edge>{{0, 2}, {0, 3}}));
}

TEST(OuterEmbedding, RejectsNonOuterplanar) {
  try {
    outer_embedding(clique(4));
    FAIL() << "K4 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_outerplanar);
  }
  auto k23 = from_edge_list(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_FALSE(is_outerplanar(k23));
}

TEST(OuterEmbedding, RandomOuterplanarBlocksAgreeWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_outerplanar(16, seed);
    auto e = outer_embedding(g);
    for (std::size_t b = 0; b < e.tree.count(); ++b) {
      const auto& vs = e.tree.blocks[b];
      if (vs.size() < 3) continue;
      const auto& cyc = e.blocks[b].cycle;
      ASSERT_EQ(std::set<Vertex>(cyc.begin(), cyc.end()), std::set<Vertex>(vs.begin(), vs.end()));
      for (std::size_t i = 0; i < cyc.size(); ++i) EXPECT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
      if (vs.size() <= 12) {
        auto [h, back] = induced_subgraph(g, vs);
        auto cycles = hamiltonian_cycles(h);
        ASSERT_EQ(cycles.size(), 1u) << "outer cycle should be unique";
        std::vector<Vertex> mapped;
        for (Vertex x : *cycles.begin()) mapped.push_back(back[x]);
        EXPECT_EQ(mapped, cyc);
      }
    }
  }
}

TEST(OuterEmbedding, AgreesWithBruteForceOnSmallBlocks) {
  // Every 2-connected graph on up to 6 vertices: reduction verdict vs Hamiltonian-cycle oracle.
  for (int n = 3; n <= 6; ++n) {
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    for (unsigned s = 0; s < (1u << all.size()); ++s) {
      std::vector<Edge> es;
      for (std::size_t b = 0; b < all.size(); ++b)
        if (s >> b & 1) es.push_back(all[b]);
      Graph g = from_edge_list(n, es);
      if (!is_connected(g)) continue;
      auto t = block_decomposition(g);
      if (t.count() != 1) continue;
      ASSERT_EQ(is_outerplanar(g), brute_outerplanar_block(g)) << "n=" << n << " mask=" << s;
    }
  }
}
