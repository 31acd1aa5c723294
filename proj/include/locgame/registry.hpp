#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "locgame/cop_strategies.hpp"
#include "locgame/gk_cops.hpp"
#include "locgame/io.hpp"
#include "locgame/outerplanar_cops.hpp"
#include "locgame/robber_strategies.hpp"

namespace locgame {

/// A graph together with whatever labelling it came with.
struct GraphContext {
  std::string ref;  // family spec or file path, echoed into transcripts
  Graph graph;
  DistanceOracle dist{Graph{}};
  std::optional<ProductGraph> product;
  std::optional<GkLayout> gk;
  bool randomized = false;  // built from a seed
};

namespace detail {

inline void reject_unknown_keys(const Json& params, std::initializer_list<const char*> allowed, const std::string& who) {
  require(params.is_object(), ErrorCode::invalid_argument, who + ": parameters must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = params.begin(); it != params.end(); ++it)
    require(ok.count(it.key()) > 0, ErrorCode::invalid_argument, who + ": unknown parameter \"" + it.key() + "\"");
}

inline int int_param(const Json& params, const char* key, const std::string& who) {
  require(params.contains(key), ErrorCode::invalid_argument, who + ": missing parameter \"" + key + "\"");
  const Json& v = params[key];
  require(v.is_number_integer(), ErrorCode::invalid_argument, who + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

inline std::vector<int> int_list_param(const Json& params, const char* key, const std::string& who) {
  require(params.contains(key), ErrorCode::invalid_argument, who + ": missing parameter \"" + key + "\"");
  const Json& v = params[key];
  require(v.is_array() && !v.empty(), ErrorCode::invalid_argument, who + ": \"" + key + "\" must be a non-empty list");
  std::vector<int> out;
  for (const auto& x : v) {
    require(x.is_number_integer(), ErrorCode::invalid_argument, who + ": \"" + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline std::uint64_t need_seed(const Json& params, std::optional<std::uint64_t> seed, const std::string& who) {
  if (params.contains("seed")) {
    require(params["seed"].is_number_unsigned(), ErrorCode::invalid_argument, who + ": seed must be unsigned");
    return params["seed"].get<std::uint64_t>();
  }
  require(seed.has_value(), ErrorCode::invalid_argument, who + " is randomized and needs a seed");
  return *seed;
}

inline bool flag_param(const Json& params, const char* key) {
  if (!params.contains(key)) return false;
  require(params[key].is_boolean(), ErrorCode::invalid_argument, std::string("\"") + key + "\" must be a boolean");
  return params[key].get<bool>();
}

}  // namespace detail

inline const std::vector<std::string>& graph_families() {
  static const std::vector<std::string> names{"path",  "cycle", "clique", "star",       "hypercube",
                                              "product", "strong-cycle-power", "gk", "outerplanar"};
  return names;
}

/// Builds a named family. Randomized families take "seed" from the
/// parameters or fall back to the run seed.
inline GraphContext make_graph(const std::string& family, const Json& params, std::optional<std::uint64_t> seed = {}) {
  using namespace detail;
  GraphContext ctx;
  auto simple = [&](Graph g) {
    ctx.graph = std::move(g);
    ctx.dist = distances(ctx.graph);
  };
  if (family == "path" || family == "cycle" || family == "clique" || family == "star") {
    reject_unknown_keys(params, {"n"}, family);
    int n = int_param(params, "n", family);
    require(n >= 1 && n <= 4096, ErrorCode::invalid_argument, family + ": n out of range");
    if (family == "path") simple(path(n));
    if (family == "cycle") simple(cycle(n));
    if (family == "clique") simple(clique(n));
    if (family == "star") simple(star(n));
  } else if (family == "hypercube") {
    reject_unknown_keys(params, {"n"}, family);
    int n = int_param(params, "n", family);
    require(n >= 1 && n <= 16, ErrorCode::invalid_argument, "hypercube: n must be in 1..16");
    auto q = hypercube(n);
    ctx.dist = hypercube_distances(q);
    ctx.graph = q.graph;
    ctx.product = std::move(q);
  } else if (family == "product") {
    reject_unknown_keys(params, {"lengths"}, family);
    auto pg = path_product(int_list_param(params, "lengths", family));
    ctx.graph = pg.graph;
    ctx.dist = distances(ctx.graph);
    ctx.product = std::move(pg);
  } else if (family == "strong-cycle-power") {
    reject_unknown_keys(params, {"m", "k"}, family);
    simple(strong_cycle_power(int_param(params, "m", family), int_param(params, "k", family)).graph);
  } else if (family == "gk") {
    reject_unknown_keys(params, {"k"}, family);
    auto g = gk(int_param(params, "k", family));
    simple(std::move(g.graph));
    ctx.gk = g.layout;
  } else if (family == "outerplanar") {
    reject_unknown_keys(params, {"n", "seed"}, family);
    int n = int_param(params, "n", family);
    simple(random_outerplanar(n, need_seed(params, seed, family)));
    ctx.randomized = true;
  } else {
    fail(ErrorCode::invalid_argument, "unknown graph family \"" + family + "\"");
  }
  ctx.ref = family + (params.empty() ? "" : ":" + params.dump());
  return ctx;
}

/// Labels sidecar for a context, or null when the family has none.
inline Json labels_for(const GraphContext& ctx) {
  if (ctx.product) return product_labels(*ctx.product);
  if (ctx.gk) return gk_labels(*ctx.gk);
  return nullptr;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::invalid_argument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::parse, path + ": " + e.what());
  }
}

/// Loads an edge-list file and, if given, its labels sidecar.
inline GraphContext load_graph(const std::string& path, const std::optional<std::string>& labels_path = {}) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::invalid_argument, "cannot open " + path);
  GraphContext ctx;
  ctx.ref = path;
  ctx.graph = read_edge_list(in);
  ctx.dist = distances(ctx.graph);
  if (labels_path) {
    Json labels = read_json_file(*labels_path);
    std::string role = labels.contains("0") ? labels["0"].value("role", "") : "";
    if (role == "grid")
      ctx.product = product_from_labels(ctx.graph, labels);
    else if (role == "core")
      ctx.gk = gk_from_labels(ctx.graph, labels);
    else
      fail(ErrorCode::missing_labels, *labels_path + ": unrecognised label roles");
  }
  return ctx;
}

// --------------------------------------------------------------------- cops

inline const std::vector<std::string>& cop_names() {
  static const std::vector<std::string> names{"hypercube", "product", "outerplanar", "gk", "random", "stationary"};
  return names;
}

inline bool cops_randomized(const std::string& name) { return name == "random"; }

inline std::unique_ptr<CopStrategy> make_cops(const std::string& name, const Json& params, const GraphContext& ctx,
                                              std::optional<std::uint64_t> seed = {}) {
  using namespace detail;
  if (name == "stationary") {
    reject_unknown_keys(params, {"probe"}, name);
    Probe p = int_list_param(params, "probe", name);
    for (Vertex v : p) require(ctx.graph.contains(v), ErrorCode::invalid_argument, "stationary: probe vertex out of range");
    return std::make_unique<StationaryCops>(std::move(p));
  }
  if (name == "random") {
    reject_unknown_keys(params, {"k", "seed"}, name);
    return std::make_unique<RandomCops>(int_param(params, "k", name), ctx.graph.order(), need_seed(params, seed, name));
  }
  if (name == "hypercube" || name == "product") {
    reject_unknown_keys(params, {}, name);
    require(ctx.product.has_value(), ErrorCode::missing_labels, name + " cops need product coordinate labels");
    return name == "hypercube" ? std::unique_ptr<CopStrategy>(hypercube_cops(*ctx.product))
                               : std::unique_ptr<CopStrategy>(product_cops(*ctx.product));
  }
  if (name == "outerplanar") {
    reject_unknown_keys(params, {}, name);
    return outerplanar_cops(ctx.dist);
  }
  if (name == "gk") {
    reject_unknown_keys(params, {}, name);
    require(ctx.gk.has_value(), ErrorCode::missing_labels, "gk cops need a G_k layout");
    return gk_cops(ctx.dist, *ctx.gk);
  }
  fail(ErrorCode::invalid_argument, "unknown cop strategy \"" + name + "\"");
}

// ------------------------------------------------------------------ robbers

/// Exactly one of the two is set: a concrete robber or a phantom policy.
struct Opponent {
  std::unique_ptr<RobberStrategy> robber;
  std::unique_ptr<PhantomAdversary> adversary;
  bool phantom() const { return adversary != nullptr; }
  std::string name() const { return phantom() ? adversary->name() : robber->name(); }
};

inline const std::vector<std::string>& robber_names() {
  static const std::vector<std::string> names{"degeneracy-evader", "bipartite-evader", "largest-class", "optimal",
                                              "random-class",      "still",            "random-walk",   "scripted"};
  return names;
}

inline bool robber_randomized(const std::string& name) { return name == "random-class" || name == "random-walk"; }

/// `cops` is the opposing cop count (the evaders' m, the solver's k).
inline Opponent make_robber(const std::string& name, const Json& params, const GraphContext& ctx, int cops,
                            std::optional<std::uint64_t> seed = {}) {
  using namespace detail;
  Opponent o;
  if (name == "degeneracy-evader" || name == "bipartite-evader") {
    reject_unknown_keys(params, {"unchecked"}, name);
    auto variant = name == "bipartite-evader" ? DegeneracyEvader::Variant::bipartite
                                              : DegeneracyEvader::Variant::closed_neighbourhood;
    o.robber = std::make_unique<DegeneracyEvader>(ctx.dist, cops, variant, !flag_param(params, "unchecked"));
  } else if (name == "largest-class") {
    reject_unknown_keys(params, {}, name);
    o.adversary = std::make_unique<LargestClassAdversary>();
  } else if (name == "optimal") {
    reject_unknown_keys(params, {}, name);
    o.adversary = optimal_robber(ctx.graph, cops);
  } else if (name == "random-class") {
    reject_unknown_keys(params, {"seed"}, name);
    o.adversary = std::make_unique<RandomAdversary>(need_seed(params, seed, name));
  } else if (name == "still") {
    reject_unknown_keys(params, {"at"}, name);
    int at = int_param(params, "at", name);
    require(ctx.graph.contains(at), ErrorCode::invalid_argument, "still: vertex out of range");
    o.robber = std::make_unique<StillRobber>(at);
  } else if (name == "random-walk") {
    reject_unknown_keys(params, {"seed"}, name);
    o.robber = std::make_unique<RandomWalkRobber>(need_seed(params, seed, name));
  } else if (name == "scripted") {
    reject_unknown_keys(params, {"walk"}, name);
    o.robber = std::make_unique<ScriptedRobber>(int_list_param(params, "walk", name));
  } else {
    fail(ErrorCode::invalid_argument, "unknown robber strategy \"" + name + "\"");
  }
  return o;
}

/// Plays one game, concrete or phantom depending on the opponent.
inline Transcript play(const GraphContext& ctx, CopStrategy& cops, Opponent& opp, const PlayOptions& opts = {}) {
  return opp.phantom() ? play_phantom(ctx.dist, cops, *opp.adversary, opts)
                       : play_concrete(ctx.dist, cops, *opp.robber, opts);
}

}  // namespace locgame
