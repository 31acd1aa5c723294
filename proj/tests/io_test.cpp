#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "locgame/io.hpp"
#include "locgame/registry.hpp"

using namespace locgame;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::internal;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("locgame_io_" + name)).string();
}

}  // namespace

TEST(EdgeList, RoundTripsGenerators) {
  for (const Graph& g : {path(1), path(7), cycle(9), star(6), hypercube(5).graph, gk(1).graph,
                         random_outerplanar(30, 4)}) {
    std::string text = edge_list_string(g);
    Graph back = parse_edge_list(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(edge_list_string(back), text);
  }
}

TEST(EdgeList, Format) {
  EXPECT_EQ(edge_list_string(path(3)), "3 2\n0 1\n1 2\n");
  EXPECT_EQ(parse_edge_list("4 2\n3 0\n\n1 2 \n"), from_edge_list(4, {{0, 3}, {1, 2}}));
}

TEST(EdgeList, Rejections) {
  EXPECT_EQ(code_of([] { parse_edge_list(""); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_edge_list("3\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_edge_list("3 2\n0 1\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_edge_list("3 1\n0 1\n1 2\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_edge_list("3 1\n0 x\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_edge_list("3 1\n0 1 2\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_edge_list("3 1\n0 3\n"); }), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(code_of([] { parse_edge_list("3 1\n1 1\n"); }), ErrorCode::loop);
  EXPECT_EQ(code_of([] { parse_edge_list("3 2\n0 1\n1 0\n"); }), ErrorCode::duplicate_edge);
}

TEST(Labels, ProductRoundTrip) {
  auto pg = path_product({4, 3, 2});
  Json j = product_labels(pg);
  EXPECT_EQ(j.size(), 24u);
  EXPECT_EQ(j["5"]["coords"], Json({0, 2, 1}));
  auto back = product_from_labels(pg.graph, j);
  EXPECT_EQ(back.radix, pg.radix);
  EXPECT_EQ(back.graph, pg.graph);

  Json broken = j;
  broken["3"]["coords"] = {0, 2, 1};
  EXPECT_EQ(code_of([&] { product_from_labels(pg.graph, broken); }), ErrorCode::missing_labels);
  EXPECT_EQ(code_of([&] { product_from_labels(cycle(24), j); }), ErrorCode::missing_labels);
}

TEST(Labels, GkRoundTrip) {
  auto g = gk(1);
  Json j = gk_labels(g.layout);
  EXPECT_EQ(j.size(), 120u);
  EXPECT_EQ(j["0"]["role"], "core");
  EXPECT_EQ(j["40"]["role"], "satellite");
  EXPECT_EQ(j["41"]["offset"], 10);
  EXPECT_EQ(j["42"]["role"], "thread");
  EXPECT_EQ(j["42"]["position"], 1);
  auto L = gk_from_labels(g.graph, j);
  EXPECT_EQ(L.k, 1);
  EXPECT_EQ(L.vertex_count(), 120);
  j["50"]["position"] = 3;
  EXPECT_EQ(code_of([&] { gk_from_labels(g.graph, j); }), ErrorCode::missing_labels);
}

TEST(Transcript, JsonRoundTripAndSchema) {
  auto ctx = make_graph("cycle", {{"n", 7}});
  StationaryCops cops({0, 1});
  RandomWalkRobber r(3);
  auto t = play_concrete(ctx.dist, cops, r);
  Json j = transcript_to_json(t, ctx.ref, 3);
  EXPECT_FALSE(transcript_schema_error(j).has_value());
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["mode"], "concrete");
  EXPECT_EQ(transcript_from_json(j), t);

  LargestClassAdversary a;
  StationaryCops c2({0});
  auto tp = play_phantom(ctx.dist, c2, a, {.cap = 5});
  Json jp = transcript_to_json(tp, ctx.ref, std::nullopt);
  EXPECT_TRUE(jp["seed"].is_null());
  EXPECT_FALSE(jp["rounds"][0].contains("robber"));
  EXPECT_EQ(jp["outcome"]["result"], "evaded");
  EXPECT_EQ(transcript_from_json(jp), tp);
}

TEST(Transcript, SchemaRejections) {
  auto ctx = make_graph("path", {{"n", 4}});
  StationaryCops c({0});
  LargestClassAdversary a;
  Json good = transcript_to_json(play_phantom(ctx.dist, c, a), ctx.ref, std::nullopt);
  ASSERT_FALSE(transcript_schema_error(good));
  auto broken = [&](auto mutate) {
    Json j = good;
    mutate(j);
    return transcript_schema_error(j).has_value();
  };
  EXPECT_TRUE(broken([](Json& j) { j.erase("seed"); }));
  EXPECT_TRUE(broken([](Json& j) { j["mode"] = "other"; }));
  EXPECT_TRUE(broken([](Json& j) { j["rounds"][0]["r"] = 2; }));
  EXPECT_TRUE(broken([](Json& j) { j["rounds"][0]["probe"] = Json::array({0, 1}); }));
  EXPECT_TRUE(broken([](Json& j) { j["rounds"][0]["robber"] = 3; }));
  EXPECT_TRUE(broken([](Json& j) { j["outcome"] = {{"result", "won"}}; }));
  EXPECT_THROW(transcript_from_json(Json::array()), Error);
}

TEST(Bounds, JsonRoundTrip) {
  auto r = lower_bounds(cycle(5), {.exact_zeta = true, .kmax = 3, .dim = true});
  Json j = bounds_to_json(r);
  EXPECT_EQ(j["degeneracy"], 2);
  EXPECT_EQ(j["zeta"], 2);
  EXPECT_TRUE(j["lower_bip"].is_null());
  auto back = bounds_from_json(j);
  EXPECT_EQ(back.degeneracy, r.degeneracy);
  EXPECT_EQ(back.lower_deg, r.lower_deg);
  EXPECT_EQ(back.lower_bip, r.lower_bip);
  EXPECT_EQ(back.dim, r.dim);
  EXPECT_EQ(back.zeta, r.zeta);
  EXPECT_EQ(back.greedy_chromatic, r.greedy_chromatic);
}

TEST(Registry, Families) {
  EXPECT_EQ(make_graph("hypercube", {{"n", 3}}).graph.order(), 8);
  EXPECT_EQ(make_graph("gk", {{"k", 1}}).graph.order(), 120);
  EXPECT_TRUE(make_graph("gk", {{"k", 1}}).gk.has_value());
  EXPECT_EQ(make_graph("product", {{"lengths", {4, 3}}}).product->radix, (std::vector<int>{4, 3}));
  EXPECT_EQ(make_graph("strong-cycle-power", {{"m", 5}, {"k", 2}}).graph.order(), 25);
  EXPECT_EQ(make_graph("outerplanar", {{"n", 12}}, 5).graph, random_outerplanar(12, 5));
  EXPECT_EQ(code_of([] { make_graph("outerplanar", {{"n", 12}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { make_graph("gk", {{"k", 0}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { make_graph("path", {{"n", 4}, {"m", 1}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { make_graph("path", {{"n", "four"}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { make_graph("petersen", Json::object()); }), ErrorCode::invalid_argument);
}

TEST(Registry, Strategies) {
  auto q = make_graph("hypercube", {{"n", 4}});
  for (const auto& name : cop_names()) {
    Json params = Json::object();
    if (name == "stationary") params = {{"probe", {0, 3}}};
    if (name == "random") params = {{"k", 2}};
    if (name == "outerplanar" || name == "gk") {
      EXPECT_THROW(make_cops(name, params, q, 1), Error) << name;
      continue;
    }
    auto c = make_cops(name, params, q, 1);
    EXPECT_EQ(c->name(), name);
  }
  EXPECT_THROW(make_cops("random", {{"k", 2}}, q), Error);
  EXPECT_THROW(make_cops("hypercube", {{"x", 1}}, q), Error);
  EXPECT_THROW(make_cops("stationary", {{"probe", {99}}}, q), Error);
  EXPECT_THROW(make_cops("hypercube", Json::object(), make_graph("path", {{"n", 4}})), Error);

  auto o = make_robber("largest-class", Json::object(), q, 4);
  EXPECT_TRUE(o.phantom());
  EXPECT_FALSE(make_robber("bipartite-evader", Json::object(), q, 1).phantom());
  EXPECT_THROW(make_robber("bipartite-evader", Json::object(), q, 2), Error);
  EXPECT_NO_THROW(make_robber("bipartite-evader", {{"unchecked", true}}, q, 2));
  EXPECT_THROW(make_robber("random-walk", Json::object(), q, 1), Error);
  EXPECT_EQ(make_robber("optimal", Json::object(), make_graph("cycle", {{"n", 5}}), 1).name(), "optimal");
  EXPECT_THROW(make_robber("teleporter", Json::object(), q, 1), Error);
}

TEST(Registry, LoadGraphWithLabels) {
  auto ctx = make_graph("product", {{"lengths", {3, 2}}});
  std::string gp = temp_path("g.txt"), lp = temp_path("g.labels.json");
  {
    std::ofstream(gp) << edge_list_string(ctx.graph);
    std::ofstream(lp) << labels_for(ctx).dump();
  }
  auto back = load_graph(gp, lp);
  ASSERT_TRUE(back.product.has_value());
  EXPECT_EQ(back.product->radix, (std::vector<int>{3, 2}));
  EXPECT_EQ(make_cops("product", Json::object(), back)->cop_count(), 3);
  auto plain = load_graph(gp);
  EXPECT_FALSE(plain.product.has_value());
  EXPECT_THROW(load_graph(temp_path("missing.txt")), Error);
  std::remove(gp.c_str());
  std::remove(lp.c_str());
}
