#include <gtest/gtest.h>

#include <map>

#include "locgame/blocks.hpp"
#include "locgame/generators.hpp"

using namespace locgame;

TEST(Hypercube, Sizes) {
  EXPECT_EQ(hypercube(1).graph, path(2));
  auto q3 = hypercube(3);
  EXPECT_EQ(q3.graph.order(), 8);
  EXPECT_EQ(q3.graph.size(), 12u);
  auto q6 = hypercube(6);
  EXPECT_EQ(q6.graph.order(), 64);
  EXPECT_EQ(q6.graph.size(), 6u * 32u);
  EXPECT_THROW(hypercube(0), Error);
}

TEST(Hypercube, ClosedFormDistanceMatchesBfsExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    auto q = hypercube(n);
    auto rule = hypercube_distances(q);
    for (Vertex u = 0; u < q.graph.order(); ++u) {
      auto row = bfs(q.graph, u);
      for (Vertex v = 0; v < q.graph.order(); ++v) ASSERT_EQ(rule(u, v), row[v]);
    }
  }
}

TEST(PathProduct, Examples) {
  auto sq = path_product({2, 2}).graph;
  EXPECT_EQ(sq.order(), 4);
  EXPECT_EQ(sq.size(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(sq.degree(v), 2);

  auto g = path_product({3, 4});
  EXPECT_EQ(g.graph.order(), 12);
  EXPECT_EQ(g.graph.size(), static_cast<std::size_t>(4 * (3 - 1) + 3 * (4 - 1)));
  EXPECT_THROW(path_product({3, 1}), Error);
}

TEST(PathProduct, AllTwosIsTheHypercube) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> twos(n, 2);
    // Same lexicographic labelling, so isomorphism is identity on ids.
    EXPECT_EQ(path_product(twos).graph, hypercube(n).graph);
    auto q = hypercube(n);
    for (auto [u, v] : q.graph.edges()) EXPECT_EQ(std::popcount(static_cast<unsigned>(u ^ v)), 1);
  }
}

TEST(PathProduct, CoordinateRoundTrip) {
  auto g = path_product({4, 3, 2});
  for (Vertex v = 0; v < g.graph.order(); ++v) EXPECT_EQ(g.vertex(g.coords(v)), v);
  for (auto [u, v] : g.graph.edges()) {
    auto a = g.coords(u), b = g.coords(v);
    int diff = 0;
    for (int i = 0; i < 3; ++i) diff += std::abs(a[i] - b[i]);
    EXPECT_EQ(diff, 1);
  }
}

TEST(StrongCyclePower, Examples) {
  EXPECT_EQ(strong_cycle_power(40, 1).graph, cycle(40));
  auto g2 = strong_cycle_power(40, 2);
  EXPECT_EQ(g2.graph.order(), 1600);
  for (Vertex v = 0; v < g2.graph.order(); ++v) ASSERT_EQ(g2.graph.degree(v), 8);
  auto s = strong_cycle_power(5, 2);
  EXPECT_EQ(s.graph.order(), 25);
  EXPECT_EQ(s.graph.size(), 100u);
  EXPECT_THROW(strong_cycle_power(4, 2), Error);
}

TEST(StrongCyclePower, RegularOfDegreeThreeToTheKMinusOne) {
  for (auto [m, k] : std::vector<std::pair<int, int>>{{5, 1}, {5, 3}, {7, 2}, {40, 3}, {6, 4}}) {
    auto g = strong_cycle_power(m, k);
    int expected = 1;
    for (int i = 0; i < k; ++i) expected *= 3;
    for (Vertex v = 0; v < g.graph.order(); ++v) ASSERT_EQ(g.graph.degree(v), expected - 1);
  }
}

TEST(Gk, VertexCounts) {
  EXPECT_EQ(gk(1).graph.order(), 120);
  EXPECT_EQ(gk(2).graph.order(), 7844);
  EXPECT_THROW(gk(0), Error);
}

TEST(Gk, LayoutRoundTripAndDegrees) {
  for (int k = 1; k <= 2; ++k) {
    auto G = gk(k);
    const auto& L = G.layout;
    int expected_sat_degree = L.slice_count;
    for (Vertex v = 0; v < G.graph.order(); ++v) {
      auto info = L.describe(v);
      switch (info.role) {
        case GkLayout::Role::core:
          ASSERT_EQ(L.core(info.coords), v);
          break;
        case GkLayout::Role::satellite:
          ASSERT_EQ(L.satellite(info.axis, info.offset), v);
          ASSERT_EQ(G.graph.degree(v), expected_sat_degree);
          break;
        case GkLayout::Role::thread:
          ASSERT_EQ(L.thread_vertex(info.axis, info.offset, info.endpoint, info.position), v);
          ASSERT_EQ(G.graph.degree(v), 2);
          break;
      }
    }
    // Thread position 1 touches its core endpoint; position 39 touches the satellite.
    Vertex w = L.core(std::vector<int>(k, 0));
    EXPECT_TRUE(G.graph.adjacent(L.thread_vertex(1, 0, w, 1), w));
    EXPECT_TRUE(G.graph.adjacent(L.thread_vertex(1, 0, w, 39), L.satellite(1, 0)));
  }
}

TEST(Gk, SatelliteDistanceFormula) {
  auto G = gk(1);
  auto row = bfs(G.graph, G.layout.satellite(1, 0));
  EXPECT_EQ(row[25], 55);
  EXPECT_EQ(GkLayout::satellite_core_distance(25, 0), 55);
  for (int k = 1; k <= 2; ++k) {
    auto H = gk(k);
    Rng rng(1000 + k);
    for (int trial = 0; trial < 100; ++trial) {
      int axis = 1 + static_cast<int>(rng.below(k));
      int t = GkLayout::kOffsets[rng.below(2)];
      Vertex w = static_cast<Vertex>(rng.below(H.layout.core_count));
      auto d = bfs(H.graph, H.layout.satellite(axis, t));
      auto c = H.layout.core_coords(w);
      ASSERT_EQ(d[w], GkLayout::satellite_core_distance(c[axis - 1], t));
    }
  }
}

TEST(RandomOuterplanar, Basics) {
  EXPECT_EQ(random_outerplanar(2, 3), path(2));
  EXPECT_EQ(random_outerplanar(20, 7), random_outerplanar(20, 7));
  EXPECT_THROW(random_outerplanar(1, 0), Error);
}

TEST(RandomOuterplanar, AlwaysOuterplanarAndConnected) {
  bool saw_bridge = false, saw_chord = false, saw_cut_in_cycle_block = false;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 2 + static_cast<int>(seed % 39);
    Graph g = random_outerplanar(n, seed);
    ASSERT_EQ(g.order(), n);
    ASSERT_TRUE(is_connected(g));
    auto e = outer_embedding(g);
    for (std::size_t b = 0; b < e.tree.count(); ++b) {
      if (e.tree.blocks[b].size() == 2) saw_bridge = true;
      if (!e.blocks[b].chords.empty()) saw_chord = true;
      if (e.tree.blocks[b].size() >= 3)
        for (Vertex v : e.tree.blocks[b]) saw_cut_in_cycle_block |= e.tree.is_cut(v);
    }
  }
  EXPECT_TRUE(saw_bridge);
  EXPECT_TRUE(saw_chord);
  EXPECT_TRUE(saw_cut_in_cycle_block);
}

TEST(Elementary, Families) {
  EXPECT_EQ(clique(3), cycle(3));
  EXPECT_EQ(path(1).order(), 1);
  for (Vertex v = 0; v < 40; ++v) EXPECT_EQ(cycle(40).degree(v), 2);
  EXPECT_THROW(cycle(2), Error);
  EXPECT_THROW(path(0), Error);
  EXPECT_THROW(clique(0), Error);
}
