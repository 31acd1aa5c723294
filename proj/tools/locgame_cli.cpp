// locgame: generate graphs, play localization games, solve small instances
// and run the verification suites.
//
// Exit codes: 0 captured / success, 2 configuration error, 3 evaded,
// 4 strategy fault. `verify` exits 0 iff every case passes, 1 otherwise.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locgame/registry.hpp"
#include "locgame/verify.hpp"

using namespace locgame;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitEvaded = 3;
constexpr int kExitFault = 4;

// Splits "a=1,b=[1,2],c=x" at top-level commas.
std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// key=value tokens; values are JSON when they parse as JSON, else strings.
Json params_from_tokens(const std::vector<std::string>& tokens) {
  Json j = Json::object();
  for (const auto& t : tokens) {
    auto eq = t.find('=');
    require(eq != std::string::npos && eq > 0, ErrorCode::invalid_argument, "expected key=value, got \"" + t + "\"");
    std::string key = t.substr(0, eq), val = t.substr(eq + 1);
    Json v = Json::parse(val, nullptr, false);
    j[key] = v.is_discarded() ? Json(val) : v;
  }
  return j;
}

Json params_from_text(const std::string& text) {
  if (text.empty()) return Json::object();
  if (text.front() == '{') {
    Json j = Json::parse(text, nullptr, false);
    require(!j.is_discarded() && j.is_object(), ErrorCode::invalid_argument, "parameters are not a JSON object");
    return j;
  }
  return params_from_tokens(split_params(text));
}

bool is_family(const std::string& name) {
  for (const auto& f : graph_families())
    if (f == name) return true;
  return false;
}

// "family" or "family:params"; anything else is an edge-list path.
GraphContext resolve_graph(const std::string& spec, const std::optional<std::string>& labels,
                           std::optional<std::uint64_t> seed) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  if (is_family(head)) {
    require(!labels, ErrorCode::invalid_argument, "--labels only applies to edge-list files");
    return make_graph(head, params_from_text(colon == std::string::npos ? "" : spec.substr(colon + 1)), seed);
  }
  return load_graph(spec, labels);
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  require(out.good(), ErrorCode::invalid_argument, "cannot write " + *path);
  out << text;
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

struct GameOptions {
  std::string graph;
  std::optional<std::string> labels;
  std::string cops;
  std::string cops_params;
  std::string robber;
  std::string robber_params;
  int cap = 0;
  std::optional<std::uint64_t> seed;
};

void add_game_options(CLI::App* cmd, GameOptions& o) {
  cmd->add_option("-g,--graph", o.graph, "family[:k=v,...] or edge-list file")->required();
  cmd->add_option("--labels", o.labels, "labels sidecar for an edge-list file");
  cmd->add_option("--cops", o.cops, "cop strategy")->required();
  cmd->add_option("--cops-params", o.cops_params, "JSON object or k=v list");
  cmd->add_option("--robber", o.robber, "robber strategy or phantom policy")->required();
  cmd->add_option("--robber-params", o.robber_params, "JSON object or k=v list");
  cmd->add_option("--cap", o.cap, "round cap (default 50 n)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "seed for every randomized component");
}

struct Game {
  GraphContext ctx;
  std::unique_ptr<CopStrategy> cops;
  Opponent opp;
};

// Everything that can be rejected is rejected here, before any play.
Game setup(const GameOptions& o, std::optional<std::uint64_t> seed) {
  Game g;
  g.ctx = resolve_graph(o.graph, o.labels, seed);
  g.cops = make_cops(o.cops, params_from_text(o.cops_params), g.ctx, seed);
  g.opp = make_robber(o.robber, params_from_text(o.robber_params), g.ctx, g.cops->cop_count(), seed);
  return g;
}

int exit_for(const Outcome& o) {
  if (is_captured(o)) return kExitOk;
  if (is_evaded(o)) return kExitEvaded;
  return kExitFault;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localization game toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a graph family as an edge list");
  std::string gen_family;
  std::vector<std::string> gen_params;
  std::optional<std::string> gen_out, gen_labels;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("family", gen_family, "graph family")->required();
  gen->add_option("params", gen_params, "key=value parameters");
  gen->add_option("-o,--out", gen_out, "edge-list path (default stdout)");
  gen->add_option("--labels", gen_labels, "labels sidecar path (default <out>.labels.json)");
  gen->add_option("--seed", gen_seed, "seed for randomized families");

  // play
  auto* play_cmd = app.add_subcommand("play", "play one game and write its transcript");
  GameOptions play_opts;
  std::optional<std::string> play_out;
  add_game_options(play_cmd, play_opts);
  play_cmd->add_option("-o,--out", play_out, "transcript path (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "exact localization number and bounds of a small graph");
  std::string solve_graph;
  std::optional<std::string> solve_labels, solve_out;
  int solve_kmax = kSolverMaxCops;
  bool solve_dim = false, solve_bounds_only = false;
  std::optional<std::uint64_t> solve_seed;
  solve->add_option("-g,--graph", solve_graph, "family[:k=v,...] or edge-list file")->required();
  solve->add_option("--labels", solve_labels, "labels sidecar");
  solve->add_option("--kmax", solve_kmax, "largest cop count tried")->check(CLI::PositiveNumber);
  solve->add_flag("--dim", solve_dim, "also compute the metric dimension");
  solve->add_flag("--bounds", solve_bounds_only, "lower bounds only, skip the exact game");
  solve->add_option("--seed", solve_seed, "seed for randomized families");
  solve->add_option("-o,--out", solve_out, "report path (default stdout)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "degeneracy lower bounds and greedy colouring");
  std::string bounds_graph;
  std::optional<std::string> bounds_labels, bounds_out;
  std::optional<std::uint64_t> bounds_seed;
  bounds->add_option("-g,--graph", bounds_graph, "family[:k=v,...] or edge-list file")->required();
  bounds->add_option("--labels", bounds_labels, "labels sidecar");
  bounds->add_option("--seed", bounds_seed, "seed for randomized families");
  bounds->add_option("-o,--out", bounds_out, "report path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::optional<std::string> verify_out;
  verify->add_option("suite", suite, "suite name or \"all\"")->required();
  verify->add_option("-o,--out", verify_out, "summary path (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "play many seeded games and summarise them");
  GameOptions bench_opts;
  int bench_games = 10;
  std::optional<std::string> bench_out;
  add_game_options(bench, bench_opts);
  bench->add_option("--games", bench_games, "number of games (seeds seed..seed+games-1)")->check(CLI::PositiveNumber);
  bench->add_option("-o,--out", bench_out, "summary path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) {
      GraphContext ctx = make_graph(gen_family, params_from_tokens(gen_params), gen_seed);
      write_text(gen_out, edge_list_string(ctx.graph));
      Json labels = labels_for(ctx);
      std::optional<std::string> lpath = gen_labels;
      if (!lpath && gen_out && *gen_out != "-") lpath = *gen_out + ".labels.json";
      if (!labels.is_null() && lpath) write_text(lpath, labels.dump() + "\n");
      return kExitOk;
    }

    if (*play_cmd) {
      Game g = setup(play_opts, play_opts.seed);
      Transcript t = locgame::play(g.ctx, *g.cops, g.opp, {.cap = play_opts.cap, .on_probe = {}});
      write_text(play_out, pretty(transcript_to_json(t, g.ctx.ref, play_opts.seed)));
      std::cerr << describe(t.outcome) << "\n";
      return exit_for(t.outcome);
    }

    if (*solve || *bounds) {
      bool is_solve = solve->parsed();
      GraphContext ctx = is_solve ? resolve_graph(solve_graph, solve_labels, solve_seed)
                                  : resolve_graph(bounds_graph, bounds_labels, bounds_seed);
      BoundsOptions opts;
      if (is_solve) {
        // An explicit request must not silently drop the exact values.
        const int n = ctx.graph.order();
        require(solve_bounds_only || n <= kSolverMaxVertices, ErrorCode::size_limit,
                "exact solver limited to n <= " + std::to_string(kSolverMaxVertices));
        require(!solve_dim || n <= kDimensionMaxVertices, ErrorCode::size_limit,
                "metric dimension limited to n <= " + std::to_string(kDimensionMaxVertices));
        opts.exact_zeta = !solve_bounds_only;
        opts.kmax = solve_kmax;
        opts.dim = solve_dim;
      }
      BoundsReport r = lower_bounds(ctx.graph, opts);
      Json j = bounds_to_json(r);
      write_text(is_solve ? solve_out : bounds_out, pretty(j));
      return kExitOk;
    }

    if (*verify) {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      Json all = Json::array();
      bool pass = true;
      for (const auto& name : names) {
        SuiteResult r = run_suite(name);
        pass &= r.pass();
        all.push_back(r.to_json());
        std::cerr << name << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
      }
      write_text(verify_out, pretty(names.size() == 1 ? all[0] : Json{{"pass", pass}, {"suites", all}}));
      return pass ? kExitOk : kExitFailed;
    }

    if (*bench) {
      // Per-game seeds: seed + i (or i without a run seed).
      std::uint64_t base = bench_opts.seed.value_or(0);
      int captured = 0, evaded = 0, faults = 0, max_round = 0;
      long long round_sum = 0;
      Json games = Json::array();
      auto t0 = std::chrono::steady_clock::now();
      for (int i = 0; i < bench_games; ++i) {
        std::optional<std::uint64_t> seed;
        if (bench_opts.seed) seed = base + static_cast<std::uint64_t>(i);
        Game g = setup(bench_opts, seed);
        Transcript t = locgame::play(g.ctx, *g.cops, g.opp, {.cap = bench_opts.cap, .on_probe = {}});
        int rounds = static_cast<int>(t.rounds.size());
        if (is_captured(t.outcome)) {
          ++captured;
          round_sum += rounds;
          max_round = std::max(max_round, rounds);
        } else if (is_evaded(t.outcome)) {
          ++evaded;
        } else {
          ++faults;
        }
        games.push_back({{"seed", seed ? Json(*seed) : Json(nullptr)}, {"outcome", outcome_to_json(t.outcome)}});
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << bench_games << " games in " << ms << " ms\n";
      Json summary = {{"games", bench_games},
                      {"captured", captured},
                      {"evaded", evaded},
                      {"faults", faults},
                      {"mean_capture_round", captured ? Json(static_cast<double>(round_sum) / captured) : Json(nullptr)},
                      {"max_capture_round", captured ? Json(max_round) : Json(nullptr)},
                      {"results", std::move(games)}};
      write_text(bench_out, pretty(summary));
      return faults ? kExitFault : (evaded ? kExitEvaded : kExitOk);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
