#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "locgame/engine.hpp"
#include "locgame/generators.hpp"
#include "locgame/solver.hpp"

namespace locgame {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- edge list

/// "n m" then m lines "u v", 0-based ids, edges in sorted order.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string edge_list_string(const Graph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

/// Parses the edge-list format. Structural problems (loops, duplicates, bad
/// ids) keep their graph error codes; malformed text is a parse error.
inline Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos) return true;
    }
    return false;
  };
  require(next_line(), ErrorCode::parse, "missing header line");
  {
    std::istringstream hs(line);
    std::string extra;
    require(static_cast<bool>(hs >> n >> m) && !(hs >> extra), ErrorCode::parse, "header must be \"n m\"");
  }
  require(n >= 0 && m >= 0 && n <= (1LL << 26), ErrorCode::parse, "header values out of range");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    require(next_line(), ErrorCode::parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream ls(line);
    long long u = 0, v = 0;
    std::string extra;
    require(static_cast<bool>(ls >> u >> v) && !(ls >> extra), ErrorCode::parse,
            "line " + std::to_string(lineno) + ": expected \"u v\"");
    require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::vertex_out_of_range,
            "line " + std::to_string(lineno) + ": endpoint outside 0.." + std::to_string(n - 1));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  require(!next_line(), ErrorCode::parse, "trailing content after " + std::to_string(m) + " edges");
  return from_edge_list(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream s(text);
  return read_edge_list(s);
}

// ----------------------------------------------------------- label sidecar

/// {vertex_id: {role, coords?}}. Products use role "grid"; G_k uses
/// "core", "satellite" (with axis, offset) and "thread" (with axis, offset,
/// position; coords are the core endpoint's).
inline Json product_labels(const ProductGraph& pg) {
  Json j = Json::object();
  for (Vertex v = 0; v < pg.graph.order(); ++v) j[std::to_string(v)] = {{"role", "grid"}, {"coords", pg.coords(v)}};
  return j;
}

inline Json gk_labels(const GkLayout& L) {
  Json j = Json::object();
  for (Vertex v = 0; v < L.vertex_count(); ++v) {
    auto info = L.describe(v);
    Json e;
    switch (info.role) {
      case GkLayout::Role::core:
        e = {{"role", "core"}, {"coords", info.coords}};
        break;
      case GkLayout::Role::satellite:
        e = {{"role", "satellite"}, {"axis", info.axis}, {"offset", info.offset}};
        break;
      case GkLayout::Role::thread:
        e = {{"role", "thread"}, {"coords", info.coords}, {"axis", info.axis}, {"offset", info.offset},
             {"position", info.position}};
        break;
    }
    j[std::to_string(v)] = std::move(e);
  }
  return j;
}

namespace detail {

inline const Json& label_of(const Json& labels, Vertex v) {
  auto it = labels.find(std::to_string(v));
  require(it != labels.end() && it->is_object(), ErrorCode::missing_labels, "no label for vertex " + std::to_string(v));
  return *it;
}

}  // namespace detail

/// Rebuilds the product labelling of `g` from a sidecar; checks that the ids
/// follow the lexicographic tuple order and that `g` is that product.
inline ProductGraph product_from_labels(const Graph& g, const Json& labels) {
  require(labels.is_object() && g.order() > 0, ErrorCode::missing_labels, "labels must be a non-empty object");
  std::vector<std::vector<int>> coords(g.order());
  std::vector<int> radix;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Json& e = detail::label_of(labels, v);
    require(e.value("role", "") == "grid" && e.contains("coords"), ErrorCode::missing_labels,
            "vertex " + std::to_string(v) + " has no grid coordinates");
    coords[v] = e["coords"].get<std::vector<int>>();
    if (v == 0) radix.assign(coords[v].size(), 0);
    require(coords[v].size() == radix.size(), ErrorCode::missing_labels, "coordinate arity differs between vertices");
    for (std::size_t i = 0; i < radix.size(); ++i) radix[i] = std::max(radix[i], coords[v][i] + 1);
  }
  auto pg = path_product(radix);
  require(pg.graph.order() == g.order(), ErrorCode::missing_labels, "labels do not describe a full product");
  for (Vertex v = 0; v < g.order(); ++v)
    require(pg.coords(v) == coords[v], ErrorCode::missing_labels, "vertex ids are not in lexicographic tuple order");
  require(pg.graph == g, ErrorCode::missing_labels, "graph is not the labelled product of paths");
  pg.graph = g;
  return pg;
}

/// Rebuilds the G_k layout from a sidecar and checks it against `g`.
inline GkLayout gk_from_labels(const Graph& g, const Json& labels) {
  require(labels.is_object(), ErrorCode::missing_labels, "labels must be an object");
  const Json& e0 = detail::label_of(labels, 0);
  require(e0.value("role", "") == "core" && e0.contains("coords"), ErrorCode::missing_labels,
          "vertex 0 is not a G_k core vertex");
  int k = static_cast<int>(e0["coords"].size());
  require(k >= 1 && k <= 3, ErrorCode::missing_labels, "G_k dimension out of range");
  auto ref = gk(k);
  require(ref.graph == g, ErrorCode::missing_labels, "graph is not G_" + std::to_string(k));
  require(labels == gk_labels(ref.layout), ErrorCode::missing_labels, "labels disagree with the G_k layout");
  return ref.layout;
}

// -------------------------------------------------------------- transcripts

inline Json outcome_to_json(const Outcome& o) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Captured>)
          return {{"result", "captured"}, {"round", x.round}, {"vertex", x.vertex}};
        else if constexpr (std::is_same_v<T, Evaded>)
          return {{"result", "evaded"}, {"rounds", x.rounds_played}};
        else
          return {{"result", "fault"}, {"round", x.round}, {"description", x.description}};
      },
      o);
}

inline Outcome outcome_from_json(const Json& j) {
  std::string r = j.at("result").get<std::string>();
  if (r == "captured") return Captured{j.at("round").get<int>(), j.at("vertex").get<Vertex>()};
  if (r == "evaded") return Evaded{j.at("rounds").get<int>()};
  if (r == "fault") return StrategyFault{j.at("round").get<int>(), j.at("description").get<std::string>()};
  fail(ErrorCode::parse, "unknown outcome \"" + r + "\"");
}

/// Transcript JSON; `seed` is null when nothing random was involved.
inline Json transcript_to_json(const Transcript& t, const std::string& graph_ref, std::optional<std::uint64_t> seed) {
  Json rounds = Json::array();
  for (const auto& r : t.rounds) {
    Json e = {{"r", r.round}, {"probe", r.probe}, {"dist", r.dist}, {"candidates", r.candidates}};
    if (r.robber) e["robber"] = *r.robber;
    rounds.push_back(std::move(e));
  }
  Json j = {{"graph_ref", graph_ref}, {"k", t.cops},  {"mode", t.mode}, {"rounds", std::move(rounds)},
            {"outcome", outcome_to_json(t.outcome)}, {"seed", nullptr}};
  if (seed) j["seed"] = *seed;
  return j;
}

/// Structural check of a transcript document; returns the first problem.
inline std::optional<std::string> transcript_schema_error(const Json& j) {
  if (!j.is_object()) return "transcript is not an object";
  for (const char* key : {"graph_ref", "k", "mode", "rounds", "outcome", "seed"})
    if (!j.contains(key)) return std::string("missing key ") + key;
  if (!j["graph_ref"].is_string()) return "graph_ref must be a string";
  if (!j["k"].is_number_integer() || j["k"].get<int>() < 1) return "k must be a positive integer";
  if (j["mode"] != "concrete" && j["mode"] != "phantom") return "mode must be concrete or phantom";
  if (!j["seed"].is_null() && !j["seed"].is_number_unsigned()) return "seed must be null or unsigned";
  if (!j["rounds"].is_array()) return "rounds must be an array";
  const int k = j["k"].get<int>();
  int expect = 1;
  for (const auto& r : j["rounds"]) {
    if (!r.is_object()) return "round entry is not an object";
    if (!r.contains("r") || r["r"] != expect) return "round numbers must count 1, 2, ...";
    for (const char* key : {"probe", "dist"}) {
      if (!r.contains(key) || !r[key].is_array() || static_cast<int>(r[key].size()) != k)
        return std::string(key) + " must be an array of k integers";
      for (const auto& x : r[key])
        if (!x.is_number_integer()) return std::string(key) + " must hold integers";
    }
    if (!r.contains("candidates") || !r["candidates"].is_number_unsigned() || r["candidates"].get<int>() < 1)
      return "candidates must be a positive integer";
    bool concrete = j["mode"] == "concrete";
    if (concrete != r.contains("robber")) return "robber position present iff mode is concrete";
    ++expect;
  }
  const Json& o = j["outcome"];
  if (!o.is_object() || !o.contains("result")) return "outcome must be an object with a result";
  try {
    outcome_from_json(o);
  } catch (const std::exception& e) {
    return std::string("bad outcome: ") + e.what();
  }
  return std::nullopt;
}

inline Transcript transcript_from_json(const Json& j) {
  if (auto err = transcript_schema_error(j)) fail(ErrorCode::parse, *err);
  Transcript t;
  t.mode = j["mode"].get<std::string>();
  t.cops = j["k"].get<int>();
  for (const auto& r : j["rounds"]) {
    RoundRecord rec{r["r"].get<int>(), r["probe"].get<Probe>(), r["dist"].get<DistanceVector>(),
                    r["candidates"].get<std::size_t>(), std::nullopt};
    if (r.contains("robber")) rec.robber = r["robber"].get<Vertex>();
    t.rounds.push_back(std::move(rec));
  }
  t.outcome = outcome_from_json(j["outcome"]);
  return t;
}

// ------------------------------------------------------------ bounds report

inline Json bounds_to_json(const BoundsReport& r) {
  auto opt = [](const std::optional<int>& x) -> Json { return x ? Json(*x) : Json(nullptr); };
  return {{"degeneracy", r.degeneracy},   {"lower_deg", opt(r.lower_deg)}, {"lower_bip", opt(r.lower_bip)},
          {"dim", opt(r.dim)},            {"zeta", opt(r.zeta)},           {"greedy_chromatic", r.greedy_chromatic},
          {"bipartite", r.bipartite}};
}

inline BoundsReport bounds_from_json(const Json& j) {
  auto opt = [&](const char* key) -> std::optional<int> {
    const Json& x = j.at(key);
    return x.is_null() ? std::nullopt : std::optional<int>(x.get<int>());
  };
  BoundsReport r;
  r.degeneracy = j.at("degeneracy").get<int>();
  r.lower_deg = opt("lower_deg");
  r.lower_bip = opt("lower_bip");
  r.dim = opt("dim");
  r.zeta = opt("zeta");
  r.greedy_chromatic = j.at("greedy_chromatic").get<int>();
  r.bipartite = j.at("bipartite").get<bool>();
  return r;
}

}  // namespace locgame
