#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "locgame/registry.hpp"

namespace locgame {

/// Regression constant: the solver's value of the localization number of Q_3.
inline constexpr int kZetaQ3 = 3;

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
  }

  Json to_json() const {
    auto sorted = cases;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    Json cs = Json::array();
    for (const auto& c : sorted) cs.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"suite", suite}, {"pass", pass()}, {"cases", std::move(cs)}};
  }
};

/// Single-cop-per-axis probing in the style of the G_k strategy, on a strong
/// power of a cycle: axis a (cycled each round) is probed at the vertex
/// whose coordinate a is 0 or 10 and whose other coordinates are 0, with the
/// offset chosen from the previous reading by the G_k main-stage rule.
class GkScheduleCops final : public CopStrategy {
 public:
  GkScheduleCops(const ProductGraph& power, int cops) : pg_(power), cops_(cops) {
    require(cops >= 1, ErrorCode::invalid_argument, "need at least one cop");
    offsets_.assign(cops, 0);
    cases_.assign(cops, GkCops::MainCase::a);
  }
  int cop_count() const override { return cops_; }
  std::string name() const override { return "gk-schedule"; }

  Probe next_probe() override {
    Probe p;
    for (int c = 0; c < cops_; ++c) {
      std::vector<int> x(pg_.dimension(), 0);
      x[axis(c)] = offsets_[c] % pg_.radix[axis(c)];
      p.push_back(pg_.vertex(x));
    }
    return p;
  }

  void observe(const Probe&, const DistanceVector& d) override {
    for (int c = 0; c < cops_; ++c) {
      switch (stage_) {
        case 0:
          cases_[c] = d[c] <= 20 ? GkCops::classify(d[c]) : GkCops::MainCase::b;
          offsets_[c] = cases_[c] == GkCops::MainCase::d ? 0 : 10;
          break;
        case 1:
          offsets_[c] = cases_[c] == GkCops::MainCase::e ? 0 : 10;
          break;
        default:
          offsets_[c] = 0;
      }
    }
    stage_ = (stage_ + 1) % 3;
    if (stage_ == 0) ++sweep_;
  }

  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<GkScheduleCops>(*this); }

 private:
  int axis(int c) const { return (c + sweep_) % pg_.dimension(); }

  ProductGraph pg_;
  int cops_;
  int stage_ = 0;
  int sweep_ = 0;
  std::vector<int> offsets_;
  std::vector<GkCops::MainCase> cases_;
};

namespace detail {

inline std::string outcome_text(const Transcript& t) { return describe(t.outcome); }

inline int capture_round(const Transcript& t) {
  return is_captured(t.outcome) ? std::get<Captured>(t.outcome).round : -1;
}

// Captures against the largest-class adversary and `seeds` random ones
// within `cap` rounds; one case per opponent.
inline void adversary_cases(SuiteResult& out, const std::string& prefix, const DistanceOracle& d,
                            const CopStrategy& proto, int cap, int seeds) {
  {
    LargestClassAdversary a;
    auto c = proto.clone();
    auto t = play_phantom(d, *c, a, {.cap = cap, .on_probe = {}});
    out.cases.push_back({prefix + "/largest-class", is_captured(t.outcome), outcome_text(t)});
  }
  int worst = 0, failures = 0;
  std::string first_failure;
  for (int s = 0; s < seeds; ++s) {
    RandomAdversary a(static_cast<std::uint64_t>(s));
    auto c = proto.clone();
    auto t = play_phantom(d, *c, a, {.cap = cap, .on_probe = {}});
    if (!is_captured(t.outcome)) {
      if (failures++ == 0) first_failure = "seed " + std::to_string(s) + ": " + outcome_text(t);
    } else {
      worst = std::max(worst, capture_round(t));
    }
  }
  out.cases.push_back({prefix + "/random-x" + std::to_string(seeds), failures == 0,
                       failures == 0 ? "worst round " + std::to_string(worst) : first_failure});
}

inline CaseResult tree_case(const std::string& id, const DistanceOracle& d, const CopStrategy& cops, int cap) {
  auto r = explore_phantom_tree(d, cops, cap);
  std::string detail = "worst round " + std::to_string(r.worst_round) + ", " + std::to_string(r.branches) + " branches";
  if (!r.fault.empty()) detail += ", fault: " + r.fault;
  if (r.truncated) detail += ", truncated";
  return {id, r.all_captured && r.worst_round <= cap, detail};
}

/// Graphs with edges drawn from pair indices of a bitmask over i < j.
inline Graph graph_of_mask(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++b)
      if (mask >> b & 1) e.emplace_back(i, j);
  return from_edge_list(n, e);
}

}  // namespace detail

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 7), by minimum relabelled edge mask.
inline std::vector<Graph> connected_graphs(int n) {
  require(n >= 1 && n <= 7, ErrorCode::size_limit, "graph enumeration limited to n <= 7");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, 0));
  for (int i = 0, b = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++b) idx[i][j] = idx[j][i] = b;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
    std::uint64_t best = m;
    for (const auto& p : perms) {
      std::uint64_t c = 0;
      for (int i = 0, b = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
          if (m >> b & 1) c |= std::uint64_t{1} << idx[p[i]][p[j]];
      best = std::min(best, c);
      if (best < m) break;  // m is not the class minimum
    }
    if (best < m || !seen.insert(m).second) continue;
    Graph g = detail::graph_of_mask(n, m);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Every connected outerplanar graph on n >= 3 vertices, up to relabelling,
/// appears among the spanning connected subgraphs of the triangulations of
/// the polygon 0..n-1. Returns those subgraphs without duplicates (as
/// labelled graphs; isomorphic copies do occur).
inline std::vector<Graph> outerplanar_graphs(int n) {
  require(n >= 1 && n <= 9, ErrorCode::size_limit, "outerplanar enumeration limited to n <= 9");
  if (n <= 2) return {path(n)};
  std::vector<std::vector<Edge>> triangulations;
  std::function<void(std::vector<Edge>, std::vector<Edge>)> rec = [&](std::vector<Edge> todo, std::vector<Edge> diag) {
    if (todo.empty()) {
      triangulations.push_back(std::move(diag));
      return;
    }
    auto [a, b] = todo.back();
    todo.pop_back();
    if (b - a < 2) return rec(std::move(todo), std::move(diag));
    for (int c = a + 1; c < b; ++c) {
      auto t = todo;
      auto d = diag;
      if (c - a >= 2) d.emplace_back(a, c);
      if (b - c >= 2) d.emplace_back(c, b);
      t.emplace_back(a, c);
      t.emplace_back(c, b);
      rec(std::move(t), std::move(d));
    }
  };
  rec({{0, n - 1}}, {});

  std::vector<std::vector<int>> idx(n, std::vector<int>(n, 0));
  for (int i = 0, b = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++b) idx[i][j] = idx[j][i] = b;
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (const auto& diag : triangulations) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    es.insert(es.end(), diag.begin(), diag.end());
    const int m = static_cast<int>(es.size());
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      if (std::popcount(s) < n - 1) continue;
      std::uint64_t key = 0;
      for (int i = 0; i < m; ++i)
        if (s >> i & 1) key |= std::uint64_t{1} << idx[es[i].first][es[i].second];
      if (!seen.insert(key).second) continue;
      Graph g = detail::graph_of_mask(n, key);
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

// ------------------------------------------------------------------ suites

inline SuiteResult verify_hypercube() {
  SuiteResult out{"hypercube", {}};
  auto q3 = hypercube(3);
  out.cases.push_back(detail::tree_case("Q3/exhaustive", hypercube_distances(q3), *hypercube_cops(q3), 3));
  for (int n = 4; n <= 8; ++n) {
    auto q = hypercube(n);
    detail::adversary_cases(out, "Q" + std::to_string(n), hypercube_distances(q), *hypercube_cops(q), n, 50);
  }
  return out;
}

inline SuiteResult verify_product() {
  SuiteResult out{"product", {}};
  auto p33 = path_product({3, 3});
  out.cases.push_back(detail::tree_case("P3xP3/exhaustive", distances(p33.graph), ProductCops(p33), 4));
  for (std::vector<int> lens : {std::vector<int>{4, 3, 2}, std::vector<int>{5, 5}}) {
    auto pg = path_product(lens);
    std::string id = "P";
    for (std::size_t i = 0; i < lens.size(); ++i) id += (i ? "xP" : "") + std::to_string(lens[i]);
    LargestClassAdversary a;
    ProductCops c(pg);
    int cap = pg.dimension() + 2;
    auto t = play_phantom(distances(pg.graph), c, a, {.cap = cap, .on_probe = {}});
    out.cases.push_back({id + "/largest-class", is_captured(t.outcome), detail::outcome_text(t)});
  }
  return out;
}

inline SuiteResult verify_outerplanar() {
  SuiteResult out{"outerplanar", {}};
  for (std::uint64_t s = 0; s < 100; ++s) {
    int n = 10 + static_cast<int>(s % 31);
    Graph g = random_outerplanar(n, 0x0e57 + s);
    auto d = distances(g);
    OuterplanarCops cops(d);
    LargestClassAdversary a;
    std::size_t last = 0;
    std::string violation;
    auto hook = [&](const RoundRecord& rec, const CandidateSet& cand, const CopStrategy& cs) {
      if (!violation.empty()) return;
      const auto& oc = static_cast<const OuterplanarCops&>(cs);
      bool probed = cand.size() == 1 && (cand.vertices[0] == rec.probe[0] || cand.vertices[0] == rec.probe[1]);
      if (!probed)
        for (Vertex v : cand.vertices)
          if (oc.territory()[v]) violation = "round " + std::to_string(rec.round) + ": candidate in territory";
      if (oc.territory_size() < last) violation = "round " + std::to_string(rec.round) + ": territory shrank";
      last = oc.territory_size();
    };
    auto t = play_phantom(d, cops, a, {.cap = 50 * n, .on_probe = hook});
    bool ok = is_captured(t.outcome) && violation.empty();
    char id[32];
    std::snprintf(id, sizeof id, "random/%03d-n%d", static_cast<int>(s), n);
    out.cases.push_back({id, ok, violation.empty() ? detail::outcome_text(t) : violation});
  }
  for (int n = 1; n <= 8; ++n) {
    int count = 0, bad = 0;
    for (const auto& g : outerplanar_graphs(n)) {
      ++count;
      if (!cops_win(g, 2).first) ++bad;
    }
    out.cases.push_back({"solver/n" + std::to_string(n), bad == 0,
                         std::to_string(count) + " graphs, " + std::to_string(bad) + " with zeta > 2"});
  }
  return out;
}

inline SuiteResult verify_gk() {
  SuiteResult out{"gk", {}};
  auto g1 = gk(1);
  auto d1 = distances(g1.graph);
  out.cases.push_back(detail::tree_case("G1/exhaustive", d1, GkCops(d1, g1.layout), 12));
  auto g2 = gk(2);
  auto d2 = distances(g2.graph);
  detail::adversary_cases(out, "G2", d2, GkCops(d2, g2.layout), 12, 50);

  // Satellite distance formula against breadth-first search.
  for (const auto* g : {&g1, &g2}) {
    const auto& L = g->layout;
    Rng rng = Rng::split(17, "gk_formula");
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      int axis = rng.uniform_int(1, L.k);
      int t = rng.chance(0.5) ? 0 : 10;
      Vertex w = static_cast<Vertex>(rng.below(L.core_count));
      auto bfs_row = bfs(g->graph, L.satellite(axis, t));
      if (bfs_row[w] != GkLayout::satellite_core_distance(L.core_coords(w)[axis - 1], t)) ++bad;
    }
    out.cases.push_back({"G" + std::to_string(L.k) + "/distance-formula", bad == 0,
                         std::to_string(bad) + " of 100 pairs disagree"});
  }
  for (int k = 1; k <= 3; ++k) {
    int deg = degeneracy(strong_cycle_power(40, k).graph).k;
    int want = static_cast<int>(int_pow(3, k)) - 1;
    out.cases.push_back({"C40^" + std::to_string(k) + "/degeneracy", deg == want,
                         "degeneracy " + std::to_string(deg) + ", expected " + std::to_string(want)});
  }
  return out;
}

inline SuiteResult verify_evasion() {
  SuiteResult out{"evasion", {}};
  auto run = [&](const std::string& id, const DistanceOracle& d, CopStrategy& cops, bool bip, int m) {
    DegeneracyEvader ev(d, m, bip ? DegeneracyEvader::Variant::bipartite : DegeneracyEvader::Variant::closed_neighbourhood);
    std::size_t smallest = SIZE_MAX;
    auto hook = [&](const RoundRecord&, const CandidateSet& cand, const CopStrategy&) {
      smallest = std::min(smallest, cand.size());
    };
    auto t = play_concrete(d, cops, ev, {.cap = 500, .on_probe = hook});
    bool ok = is_evaded(t.outcome) && smallest >= 2;
    out.cases.push_back({id, ok, detail::outcome_text(t) + ", smallest candidate set " + std::to_string(smallest)});
  };
  auto sp = strong_cycle_power(40, 2);
  auto dsp = distances(sp.graph);
  {
    StationaryCops c({0});
    run("C40^2/stationary", dsp, c, false, 1);
  }
  for (int s = 0; s < 10; ++s) {
    RandomCops c(1, sp.graph.order(), static_cast<std::uint64_t>(s));
    run("C40^2/random-" + std::to_string(s), dsp, c, false, 1);
  }
  {
    GkScheduleCops c(sp, 1);
    run("C40^2/gk-schedule", dsp, c, false, 1);
  }
  for (auto [n, m] : {std::pair{4, 1}, std::pair{8, 2}}) {
    auto q = hypercube(n);
    auto dq = hypercube_distances(q);
    std::string id = "Q" + std::to_string(n);
    {
      StationaryCops c(Probe(m, 0));
      run(id + "/stationary", dq, c, true, m);
    }
    for (int s = 0; s < 10; ++s) {
      RandomCops c(m, q.graph.order(), static_cast<std::uint64_t>(s));
      run(id + "/random-" + std::to_string(s), dq, c, true, m);
    }
  }
  return out;
}

inline SuiteResult verify_bounds() {
  SuiteResult out{"bounds", {}};
  auto exact = [&](const std::string& id, const Graph& g, int want) {
    auto z = localization_number(g, g.order());
    out.cases.push_back({id, z && *z == want, "zeta " + (z ? std::to_string(*z) : std::string("none"))});
  };
  exact("exact/C3", cycle(3), 2);
  for (int n = 2; n <= 8; ++n) exact("exact/P" + std::to_string(n), path(n), 1);
  for (int n = 3; n <= 6; ++n) exact("exact/K" + std::to_string(n), clique(n), n - 1);

  std::vector<std::pair<Graph, int>> solved;
  for (int n = 2; n <= 6; ++n) {
    int count = 0, bad = 0;
    for (const auto& g : connected_graphs(n)) {
      ++count;
      auto r = lower_bounds(g, {.exact_zeta = true, .kmax = n, .dim = true});
      bool ok = r.zeta && r.dim && r.lower_deg && *r.lower_deg <= *r.zeta && *r.zeta <= *r.dim &&
                (!r.lower_bip || *r.lower_bip <= *r.zeta);
      if (!ok) ++bad;
      if (r.zeta) solved.emplace_back(g, *r.zeta);
    }
    out.cases.push_back({"sandwich/n" + std::to_string(n), bad == 0,
                         std::to_string(count) + " graphs, " + std::to_string(bad) + " violations"});
  }

  auto chroma = [&](const std::string& id, const Graph& g, int k) {
    int chi = color_count(degeneracy_coloring(g));
    out.cases.push_back({id, verify_chromatic_bound(g, k),
                         "greedy " + std::to_string(chi) + " vs 3^" + std::to_string(k)});
  };
  chroma("chromatic/G1", gk(1).graph, 1);
  chroma("chromatic/G2", gk(2).graph, 2);
  chroma("chromatic/C3", cycle(3), 2);
  for (int n = 1; n <= 8; ++n) chroma("chromatic/Q" + std::to_string(n), hypercube(n).graph, ceil_log2(n) + 2);
  int bad = 0;
  for (const auto& [g, z] : solved)
    if (!verify_chromatic_bound(g, z)) ++bad;
  out.cases.push_back({"chromatic/solved", bad == 0, std::to_string(solved.size()) + " graphs"});

  auto z3 = localization_number(hypercube(3).graph, 4);
  bool in_bracket = z3 && *z3 >= 2 && *z3 <= 4;
  out.cases.push_back({"Q3/bracket", in_bracket && *z3 == kZetaQ3,
                       "zeta " + (z3 ? std::to_string(*z3) : std::string("none")) + ", frozen " +
                           std::to_string(kZetaQ3)});
  return out;
}

/// Library strategies against the solver: capture when k >= zeta, the
/// optimal robber evades when k < zeta.
inline SuiteResult verify_solver_cross() {
  SuiteResult out{"solver-cross", {}};
  auto against_optimal = [&](const std::string& id, const DistanceOracle& d, CopStrategy& cops, bool expect_capture,
                             int cap) {
    auto adv = optimal_robber(d.graph(), cops.cop_count());
    const auto& table = adv->table();
    bool left_region = false;
    bool start_win = !table.cops_win();
    auto hook = [&](const RoundRecord&, const CandidateSet& cand, const CopStrategy&) {
      if (start_win && cand.size() > 1 && table.cop_win(table.expand(GameStateTable::mask_of(cand.vertices))))
        left_region = true;
    };
    auto t = play_phantom(d, cops, *adv, {.cap = cap, .on_probe = hook});
    bool ok = (expect_capture ? is_captured(t.outcome) && detail::capture_round(t) >= table.depth[table.full()]
                              : is_evaded(t.outcome)) &&
              !left_region;
    out.cases.push_back({id, ok, detail::outcome_text(t)});
  };

  for (int s = 0; s < 30; ++s) {
    int n = 5 + s % 6;
    Graph g = random_outerplanar(n, 900 + static_cast<std::uint64_t>(s));
    auto d = distances(g);
    OuterplanarCops cops(d);
    against_optimal("outerplanar/" + std::to_string(s), d, cops, true, 50 * n);
  }
  {
    auto q = hypercube(3);
    auto d = hypercube_distances(q);
    auto cops = hypercube_cops(q);
    against_optimal("hypercube/Q3", d, *cops, true, 5);
  }
  {
    auto pg = path_product({3, 3});
    auto d = distances(pg.graph);
    ProductCops cops(pg);
    against_optimal("product/P3xP3", d, cops, true, 4);
  }
  for (int n = 2; n <= 8; ++n) {
    auto d = distances(path(n));
    StationaryCops cops({0});
    against_optimal("stationary/P" + std::to_string(n), d, cops, true, 1);
  }
  {
    auto d = distances(cycle(3));
    for (Vertex v = 0; v < 3; ++v) {
      StationaryCops c({v});
      against_optimal("stationary/C3-" + std::to_string(v), d, c, false, 200);
    }
    RandomCops rc(1, 3, 5);
    against_optimal("random/C3", d, rc, false, 200);
  }
  for (int n = 4; n <= 6; ++n) {
    auto d = distances(clique(n));
    RandomCops rc(n - 2, n, 11);
    against_optimal("random/K" + std::to_string(n), d, rc, false, 200);
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"outerplanar", "hypercube", "product", "gk",
                                              "evasion",     "bounds",    "solver-cross"};
  return names;
}

inline SuiteResult run_suite(const std::string& name) {
  if (name == "outerplanar") return verify_outerplanar();
  if (name == "hypercube") return verify_hypercube();
  if (name == "product") return verify_product();
  if (name == "gk") return verify_gk();
  if (name == "evasion") return verify_evasion();
  if (name == "bounds") return verify_bounds();
  if (name == "solver-cross") return verify_solver_cross();
  fail(ErrorCode::invalid_argument, "unknown suite \"" + name + "\"");
}

}  // namespace locgame
