#include <gtest/gtest.h>

#include <set>

#include "locgame/cop_strategies.hpp"
#include "locgame/generators.hpp"
#include "locgame/gk_cops.hpp"
#include "locgame/outerplanar_cops.hpp"
#include "locgame/robber_strategies.hpp"

using namespace locgame;

namespace {

int captured_round(const Transcript& t) { return std::get<Captured>(t.outcome).round; }

// Capture against the largest-class adversary and `seeds` random ones.
void expect_adversaries_lose(const DistanceOracle& d, const CopStrategy& proto, int cap, int seeds) {
  LargestClassAdversary lc;
  auto cops = proto.clone();
  auto t = play_phantom(d, *cops, lc, {.cap = cap});
  ASSERT_TRUE(is_captured(t.outcome)) << describe(t.outcome);
  for (int s = 0; s < seeds; ++s) {
    RandomAdversary ra(s);
    auto c = proto.clone();
    auto tr = play_phantom(d, *c, ra, {.cap = cap});
    ASSERT_TRUE(is_captured(tr.outcome)) << "seed " << s << ": " << describe(tr.outcome);
  }
}

}  // namespace

TEST(StationaryCops, ResolvingEndOfPath) {
  auto d = distances(path(7));
  StationaryCops c({0});
  LargestClassAdversary a;
  auto t = play_phantom(d, c, a);
  ASSERT_TRUE(is_captured(t.outcome));
  EXPECT_EQ(captured_round(t), 1);
}

TEST(StationaryCops, CentreOfPathNeverCaptures) {
  auto d = distances(path(5));
  StationaryCops c({2});
  LargestClassAdversary a;
  auto t = play_phantom(d, c, a, {.cap = 30});
  EXPECT_TRUE(is_evaded(t.outcome));
}

TEST(RandomCops, SameSeedSameProbes) {
  RandomCops a(3, 20, 7), b(3, 20, 7), c(3, 20, 8);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    auto pa = a.next_probe();
    EXPECT_EQ(pa, b.next_probe());
    differs |= pa != c.next_probe();
    for (Vertex v : pa) EXPECT_TRUE(v >= 0 && v < 20);
  }
  EXPECT_TRUE(differs);
  EXPECT_THROW(RandomCops(0, 5, 1), Error);
}

TEST(HypercubeCops, CopCount) {
  for (int n = 1; n <= 10; ++n) {
    auto q = hypercube(n);
    int expect = n == 1 ? 2 : (n <= 2 ? 3 : (n <= 4 ? 4 : (n <= 8 ? 5 : 6)));
    EXPECT_EQ(hypercube_cops(q)->cop_count(), expect) << n;
  }
}

TEST(HypercubeCops, RejectsNonBinaryLabels) { EXPECT_THROW(hypercube_cops(path_product({3, 2})), Error); }

TEST(HypercubeCops, TrackedCoordinatesMatchRobber) {
  for (int n : {3, 5, 8}) {
    auto q = hypercube(n);
    auto d = hypercube_distances(q);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto cops = hypercube_cops(q);
      RandomWalkRobber r(seed);
      int checked = 0;
      auto hook = [&](const RoundRecord& rec, const CandidateSet&, const CopStrategy& cs) {
        auto coords = q.coords(*rec.robber);
        const auto& tr = static_cast<const ProductCops&>(cs).tracked();
        for (int j = 0; j < n; ++j) {
          if (!tr[j]) continue;
          ASSERT_EQ(*tr[j], coords[j]) << "n=" << n << " round " << rec.round << " coord " << j;
          ++checked;
        }
        // After n rounds every coordinate has been read once.
        if (rec.round >= n) {
          for (int j = 0; j < n; ++j) ASSERT_TRUE(tr[j].has_value());
        }
      };
      auto t = play_concrete(d, *cops, r, {.cap = 3 * n, .on_probe = hook});
      EXPECT_TRUE(is_captured(t.outcome)) << describe(t.outcome);
      EXPECT_GT(checked, 0);
    }
  }
}

TEST(HypercubeCops, Q3ExhaustiveWithinThreeRounds) {
  auto q = hypercube(3);
  auto d = hypercube_distances(q);
  auto res = explore_phantom_tree(d, *hypercube_cops(q), 3);
  EXPECT_TRUE(res.all_captured) << res.fault;
  EXPECT_LE(res.worst_round, 3);
}

TEST(HypercubeCops, CapturesWithinDimensionRounds) {
  for (int n = 4; n <= 8; ++n) {
    auto q = hypercube(n);
    auto d = hypercube_distances(q);
    SCOPED_TRACE(n);
    expect_adversaries_lose(d, *hypercube_cops(q), n, 50);
  }
}

TEST(ProductCops, TwoByTwoProbesMatchHypercube) {
  auto pg = path_product({2, 2});
  auto q = hypercube(2);
  ProductCops a(pg);
  auto b = hypercube_cops(q);
  auto d = distances(pg.graph);
  for (int i = 0; i < 6; ++i) {
    auto p = a.next_probe();
    ASSERT_EQ(p, b->next_probe());
    auto dv = distance_vector(d, p, 3);
    a.observe(p, dv);
    b->observe(p, dv);
  }
}

TEST(ProductCops, ThreeByThreeExhaustive) {
  auto pg = path_product({3, 3});
  auto d = distances(pg.graph);
  auto res = explore_phantom_tree(d, ProductCops(pg), 4);
  EXPECT_TRUE(res.all_captured) << res.fault;
  EXPECT_LE(res.worst_round, 4);
}

TEST(ProductCops, MixedLengths) {
  for (std::vector<int> lens : {std::vector<int>{4, 3, 2}, std::vector<int>{5, 5}}) {
    auto pg = path_product(lens);
    auto d = distances(pg.graph);
    SCOPED_TRACE(lens.size());
    expect_adversaries_lose(d, ProductCops(pg), static_cast<int>(lens.size()) + 2, 20);
  }
}

TEST(ProductCops, SinglePathIsOneCoordinate) {
  auto pg = path_product({6});
  auto d = distances(pg.graph);
  ProductCops c(pg);
  EXPECT_EQ(c.cop_count(), 2);
  auto res = explore_phantom_tree(d, c, 2);
  EXPECT_TRUE(res.all_captured);
}

TEST(OuterplanarCops, Triangle) {
  auto d = distances(cycle(3));
  auto res = explore_phantom_tree(d, OuterplanarCops(d), 2);
  EXPECT_TRUE(res.all_captured) << res.fault;
}

TEST(OuterplanarCops, TreesAndCycles) {
  std::vector<Graph> gs{path(2), path(9), star(7), cycle(4), cycle(9),
                        from_edge_list(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}})};
  for (const auto& g : gs) {
    auto d = distances(g);
    auto res = explore_phantom_tree(d, OuterplanarCops(d), 50 * g.order());
    EXPECT_TRUE(res.all_captured) << g.order() << " " << res.fault;
  }
}

TEST(OuterplanarCops, RejectsNonOuterplanar) {
  EXPECT_THROW(OuterplanarCops(distances(clique(4))), Error);
  EXPECT_THROW(OuterplanarCops(distances(from_edge_list(4, {{0, 1}, {2, 3}}))), Error);
}

TEST(OuterplanarCops, ExhaustiveOnSmallRandomGraphs) {
  for (std::uint64_t s = 0; s < 120; ++s) {
    int n = 3 + static_cast<int>(s % 9);
    auto g = random_outerplanar(n, s);
    auto d = distances(g);
    auto res = explore_phantom_tree(d, OuterplanarCops(d), 50 * n);
    EXPECT_TRUE(res.all_captured) << "seed " << s << " " << res.fault;
  }
}

TEST(OuterplanarCops, TerritoryInvariantsAgainstLargestClass) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    int n = 10 + static_cast<int>(s % 31);
    auto g = random_outerplanar(n, 0x0e57 + s);
    auto d = distances(g);
    OuterplanarCops cops(d);
    LargestClassAdversary a;
    std::size_t last_size = 0;
    auto hook = [&](const RoundRecord& rec, const CandidateSet& cand, const CopStrategy& cs) {
      const auto& oc = static_cast<const OuterplanarCops&>(cs);
      bool probed_singleton = cand.size() == 1 && (cand.vertices[0] == rec.probe[0] || cand.vertices[0] == rec.probe[1]);
      if (!probed_singleton) {
        for (Vertex v : cand.vertices) ASSERT_FALSE(oc.territory()[v]) << "seed " << s << " round " << rec.round;
      }
      ASSERT_GE(oc.territory_size(), last_size);
      last_size = oc.territory_size();
      auto [l, r] = oc.endpoints();
      const auto& blk = oc.blocks().blocks[oc.current_block()];
      ASSERT_TRUE(std::binary_search(blk.begin(), blk.end(), l));
      ASSERT_TRUE(std::binary_search(blk.begin(), blk.end(), r));
    };
    auto t = play_phantom(d, cops, a, {.cap = 50 * n, .on_probe = hook});
    ASSERT_TRUE(is_captured(t.outcome)) << "seed " << s << " " << describe(t.outcome);
  }
}

TEST(OuterplanarCops, ConcreteRobbersAreCaught) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto g = random_outerplanar(25, 500 + s);
    auto d = distances(g);
    OuterplanarCops cops(d);
    RandomWalkRobber r(s);
    auto t = play_concrete(d, cops, r);
    ASSERT_TRUE(is_captured(t.outcome)) << describe(t.outcome);
    EXPECT_EQ(std::get<Captured>(t.outcome).vertex, *t.rounds.back().robber);
  }
}

TEST(GkCops, ResolutionOffsets) {
  std::set<int> zero{39, 10};
  for (int y = 1; y <= 9; ++y) zero.insert(y);
  for (int y = 30; y <= 38; ++y) zero.insert(y);
  for (int y = 0; y < 40; ++y) EXPECT_EQ(GkCops::resolution_offset(y), zero.count(y) ? 0 : 10) << y;
}

TEST(GkCops, MainCaseClassification) {
  using C = GkCops::MainCase;
  EXPECT_EQ(GkCops::classify(0), C::d);
  EXPECT_EQ(GkCops::classify(1), C::c);
  for (int x = 2; x <= 8; ++x) EXPECT_EQ(GkCops::classify(x), C::a);
  for (int x = 9; x <= 11; ++x) EXPECT_EQ(GkCops::classify(x), C::e);
  for (int x = 12; x <= 20; ++x) EXPECT_EQ(GkCops::classify(x), C::b);
  EXPECT_THROW(GkCops::classify(21), Error);
}

TEST(GkCops, RejectsMismatchedLayout) {
  auto g1 = gk(1);
  auto d = distances(cycle(5));
  EXPECT_THROW(GkCops(d, g1.layout), Error);
}

TEST(GkCops, G1ExhaustiveWithinTwelveRounds) {
  auto g = gk(1);
  auto d = distances(g.graph);
  auto res = explore_phantom_tree(d, GkCops(d, g.layout), 12);
  EXPECT_TRUE(res.all_captured) << res.fault;
  EXPECT_LE(res.worst_round, 12);
}

TEST(GkCops, G2AdversariesWithinTwelveRounds) {
  auto g = gk(2);
  auto d = distances(g.graph);
  expect_adversaries_lose(d, GkCops(d, g.layout), 12, 50);
}

// The robber hides two steps from a satellite; readings from the other
// satellites pass through it.
TEST(GkCops, RobberNextToSatellite) {
  auto g = gk(2);
  auto d = distances(g.graph);
  const auto& L = g.layout;
  for (int t : {0, 10}) {
    std::vector<int> c{t, 25};
    Vertex end = L.core(c);
    Vertex hide = L.thread_vertex(1, t, end, GkLayout::kThreadLength - 2);
    GkCops cops(d, L);
    StillRobber r(hide);
    auto tr = play_concrete(d, cops, r, {.cap = 12});
    ASSERT_TRUE(is_captured(tr.outcome)) << describe(tr.outcome);
    EXPECT_EQ(std::get<Captured>(tr.outcome).vertex, hide);
  }
}

TEST(GkCops, CorePredictionsMatchCoreRobber) {
  // For a robber standing still in the core, a unique core prediction is
  // always his coordinate.
  auto g = gk(2);
  auto d = distances(g.graph);
  const auto& L = g.layout;
  for (int x = 0; x < 40; x += 3) {
    std::vector<int> c{x, (x * 7 + 5) % 40};
    Vertex v = L.core(c);
    GkCops cops(d, L);
    StillRobber r(v);
    auto hook = [&](const RoundRecord& rec, const CandidateSet&, const CopStrategy& cs) {
      const auto& gc = static_cast<const GkCops&>(cs);
      for (int i = 0; i < 2; ++i) {
        if (gc.predicted(i) >= 0) {
          EXPECT_EQ(gc.predicted(i), c[i]) << "round " << rec.round;
        }
      }
    };
    auto tr = play_concrete(d, cops, r, {.cap = 12, .on_probe = hook});
    ASSERT_TRUE(is_captured(tr.outcome)) << describe(tr.outcome);
    EXPECT_EQ(std::get<Captured>(tr.outcome).vertex, v);
  }
}

TEST(GkCops, CloneContinuesIdentically) {
  auto g = gk(1);
  auto d = distances(g.graph);
  GkCops a(d, g.layout);
  Vertex pos = 57;
  for (int i = 0; i < 5; ++i) {
    auto b = a.clone();
    auto p = a.next_probe();
    ASSERT_EQ(p, b->next_probe());
    a.observe(p, distance_vector(d, p, pos));
  }
}
