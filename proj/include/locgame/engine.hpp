#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

/// One round's cop placements, one vertex per cop. Duplicates are allowed.
using Probe = std::vector<Vertex>;
/// Distances from each probed vertex to the robber, aligned with the Probe.
using DistanceVector = std::vector<int>;

enum class Phase { post_probe, post_move };

/// Vertices consistent with every observation so far (sorted ids).
struct CandidateSet {
  std::vector<Vertex> vertices;
  Phase phase = Phase::post_move;

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

  static CandidateSet everything(int n) {
    CandidateSet s;
    s.vertices.resize(n);
    for (int i = 0; i < n; ++i) s.vertices[i] = i;
    return s;
  }
};

/// One nonempty block of the partition of a candidate set by distance vector.
struct CandidateClass {
  DistanceVector dist;
  std::vector<Vertex> vertices;
};

inline DistanceVector distance_vector(const DistanceOracle& o, const Probe& p, Vertex v) {
  DistanceVector d(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) d[i] = o(p[i], v);
  return d;
}

/// Splits `s` by the distance vectors the probe would report. Classes are
/// ordered by their least vertex.
inline std::vector<CandidateClass> partition(const CandidateSet& s, const Probe& p, const DistanceOracle& o) {
  std::vector<DistanceOracle::Row> rows;
  rows.reserve(p.size());
  for (Vertex u : p) rows.push_back(o.row(u));
  std::map<DistanceVector, std::vector<Vertex>> groups;
  DistanceVector d(p.size());
  for (Vertex v : s.vertices) {
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = (*rows[i])[v];
    groups[d].push_back(v);
  }
  std::vector<CandidateClass> out;
  out.reserve(groups.size());
  for (auto& [dv, vs] : groups) out.push_back({dv, std::move(vs)});
  std::sort(out.begin(), out.end(),
            [](const CandidateClass& a, const CandidateClass& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

/// {v in s : dist(p_i, v) = d_i for all i}. Throws if nothing is consistent.
inline CandidateSet refine(const CandidateSet& s, const Probe& p, const DistanceVector& d, const DistanceOracle& o) {
  require(p.size() == d.size(), ErrorCode::invalid_argument, "probe and distance vector lengths differ");
  std::vector<DistanceOracle::Row> rows;
  for (Vertex u : p) rows.push_back(o.row(u));
  CandidateSet out;
  out.phase = Phase::post_probe;
  for (Vertex v : s.vertices) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) ok = (*rows[i])[v] == d[i];
    if (ok) out.vertices.push_back(v);
  }
  require(!out.vertices.empty(), ErrorCode::precondition, "observation inconsistent with every candidate");
  return out;
}

/// Closed neighbourhood N[s].
inline CandidateSet expand(const CandidateSet& s, const Graph& g) {
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : s.vertices) {
    mark[v] = 1;
    for (Vertex w : g.neighbors(v)) mark[w] = 1;
  }
  CandidateSet out;
  out.phase = Phase::post_move;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mark[v]) out.vertices.push_back(v);
  return out;
}

struct RoundRecord {
  int round = 0;
  Probe probe;
  DistanceVector dist;
  std::size_t candidates = 0;
  std::optional<Vertex> robber;  // concrete play only

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct Captured {
  int round;
  Vertex vertex;
  friend bool operator==(const Captured&, const Captured&) = default;
};
struct Evaded {
  int rounds_played;
  friend bool operator==(const Evaded&, const Evaded&) = default;
};
struct StrategyFault {
  int round;
  std::string description;
  friend bool operator==(const StrategyFault&, const StrategyFault&) = default;
};
using Outcome = std::variant<Captured, Evaded, StrategyFault>;

inline bool is_captured(const Outcome& o) { return std::holds_alternative<Captured>(o); }
inline bool is_evaded(const Outcome& o) { return std::holds_alternative<Evaded>(o); }
inline bool is_fault(const Outcome& o) { return std::holds_alternative<StrategyFault>(o); }

struct Transcript {
  std::string mode;  // "concrete" or "phantom"
  int cops = 0;
  std::vector<RoundRecord> rounds;
  Outcome outcome = Evaded{0};

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Deterministic cop strategy. A round is `next_probe()` followed by
/// `observe()` with that probe's result. `clone()` must produce an
/// independent copy whose next probe equals the original's.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual int cop_count() const = 0;
  virtual std::string name() const = 0;
  virtual Probe next_probe() = 0;
  virtual void observe(const Probe& probe, const DistanceVector& dist) = 0;
  virtual std::unique_ptr<CopStrategy> clone() const = 0;
};

/// The exact probe the cops will emit next, computed on a copy.
inline Probe peek_next_probe(const CopStrategy& cops) { return cops.clone()->next_probe(); }

using PeekFn = std::function<Probe()>;

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual Vertex choose_start(const Graph& g, const PeekFn& peek) = 0;
  /// Stay at `current` or return one of its neighbours.
  virtual Vertex move(Vertex current, const Transcript& so_far, const PeekFn& peek) = 0;
  virtual std::unique_ptr<RobberStrategy> clone() const = 0;
};

/// Worst-case robber abstraction: after each probe picks which class of the
/// partition play continues from.
class PhantomAdversary {
 public:
  virtual ~PhantomAdversary() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Vertex> choose(std::span<const CandidateClass> classes, const Graph& g, int round) = 0;
  virtual std::unique_ptr<PhantomAdversary> clone() const = 0;
};

/// Called once per round after refinement, with the post-probe candidate set.
using ProbeHook = std::function<void(const RoundRecord&, const CandidateSet&, const CopStrategy&)>;

struct PlayOptions {
  int cap = 0;  // 0 means 50 * n
  ProbeHook on_probe;
};

inline int default_cap(const Graph& g) { return 50 * g.order(); }

namespace detail {

inline std::optional<std::string> check_probe(const Probe& p, int arity, const Graph& g) {
  if (static_cast<int>(p.size()) != arity)
    return "probe has " + std::to_string(p.size()) + " entries, expected " + std::to_string(arity);
  for (Vertex v : p)
    if (!g.contains(v)) return "probe vertex " + std::to_string(v) + " is not a vertex";
  return std::nullopt;
}

}  // namespace detail

/// Referee with a concrete robber token. Round order: probe, observation,
/// capture check, robber move.
inline Transcript play_concrete(const DistanceOracle& dist, CopStrategy& cops, RobberStrategy& robber,
                                const PlayOptions& opts = {}) {
  const Graph& g = dist.graph();
  const int cap = opts.cap > 0 ? opts.cap : default_cap(g);
  Transcript t;
  t.mode = "concrete";
  t.cops = cops.cop_count();
  PeekFn peek = [&cops] { return peek_next_probe(cops); };

  int round = 0;
  try {
    Vertex pos = robber.choose_start(g, peek);
    if (!g.contains(pos)) {
      t.outcome = StrategyFault{0, "robber start " + std::to_string(pos) + " is not a vertex"};
      return t;
    }
    CandidateSet cand = CandidateSet::everything(g.order());
    for (round = 1; round <= cap; ++round) {
      Probe p = cops.next_probe();
      if (auto err = detail::check_probe(p, cops.cop_count(), g)) {
        t.outcome = StrategyFault{round, *err};
        return t;
      }
      DistanceVector d = distance_vector(dist, p, pos);
      cand = refine(cand, p, d, dist);
      RoundRecord rec{round, p, d, cand.size(), pos};
      t.rounds.push_back(rec);
      cops.observe(p, d);
      if (opts.on_probe) opts.on_probe(rec, cand, cops);
      if (cand.size() == 1) {
        t.outcome = Captured{round, cand.vertices.front()};
        return t;
      }
      Vertex next = robber.move(pos, t, peek);
      if (!g.contains(next) || (next != pos && !g.adjacent(pos, next))) {
        t.outcome = StrategyFault{round, "robber moved from " + std::to_string(pos) + " to non-neighbour " +
                                             std::to_string(next)};
        return t;
      }
      pos = next;
      cand = expand(cand, g);
    }
  } catch (const Error& e) {
    t.outcome = StrategyFault{round, e.what()};
    return t;
  }
  t.outcome = Evaded{cap};
  return t;
}

/// Referee without a robber token: the adversary chooses a class after every probe.
inline Transcript play_phantom(const DistanceOracle& dist, CopStrategy& cops, PhantomAdversary& adversary,
                               const PlayOptions& opts = {}) {
  const Graph& g = dist.graph();
  const int cap = opts.cap > 0 ? opts.cap : default_cap(g);
  Transcript t;
  t.mode = "phantom";
  t.cops = cops.cop_count();
  int round = 0;
  try {
    CandidateSet cand = CandidateSet::everything(g.order());
    for (round = 1; round <= cap; ++round) {
      Probe p = cops.next_probe();
      if (auto err = detail::check_probe(p, cops.cop_count(), g)) {
        t.outcome = StrategyFault{round, *err};
        return t;
      }
      auto classes = partition(cand, p, dist);
      auto chosen = adversary.choose(classes, g, round);
      auto it = std::find_if(classes.begin(), classes.end(),
                             [&](const CandidateClass& c) { return c.vertices == chosen; });
      if (it == classes.end()) {
        t.outcome = StrategyFault{round, "adversary selected a set that is not a candidate class"};
        return t;
      }
      cand.vertices = it->vertices;
      cand.phase = Phase::post_probe;
      RoundRecord rec{round, p, it->dist, cand.size(), std::nullopt};
      t.rounds.push_back(rec);
      cops.observe(p, it->dist);
      if (opts.on_probe) opts.on_probe(rec, cand, cops);
      if (cand.size() == 1) {
        t.outcome = Captured{round, cand.vertices.front()};
        return t;
      }
      cand = expand(cand, g);
    }
  } catch (const Error& e) {
    t.outcome = StrategyFault{round, e.what()};
    return t;
  }
  t.outcome = Evaded{cap};
  return t;
}

struct PhantomTreeResult {
  bool all_captured = true;  // every branch captured within the cap
  int worst_round = 0;       // latest capture round over all branches
  std::size_t branches = 0;  // leaves explored
  bool truncated = false;    // node budget exhausted
  std::string fault;         // first strategy fault, if any
};

/// Branches on every candidate class after every probe (the full phantom
/// game tree for a deterministic cop strategy). `on_probe` sees every node.
inline PhantomTreeResult explore_phantom_tree(const DistanceOracle& dist, const CopStrategy& cops, int cap,
                                              const ProbeHook& on_probe = {}, std::size_t node_budget = 50'000'000) {
  const Graph& g = dist.graph();
  PhantomTreeResult res;
  std::size_t nodes = 0;

  auto walk = [&](auto&& self, std::unique_ptr<CopStrategy> state, CandidateSet cand, int round) -> void {
    if (!res.all_captured) return;  // first failing branch settles the answer
    if (++nodes > node_budget) {
      res.truncated = true;
      res.all_captured = false;
      return;
    }
    Probe p;
    try {
      p = state->next_probe();
    } catch (const Error& e) {
      res.fault = e.what();
      res.all_captured = false;
      return;
    }
    if (auto err = detail::check_probe(p, state->cop_count(), g)) {
      res.fault = *err;
      res.all_captured = false;
      return;
    }
    auto classes = partition(cand, p, dist);
    for (const auto& c : classes) {
      if (!res.all_captured) return;
      std::unique_ptr<CopStrategy> child = state->clone();
      try {
        child->observe(p, c.dist);
      } catch (const Error& e) {
        res.fault = e.what();
        res.all_captured = false;
        return;
      }
      CandidateSet post{c.vertices, Phase::post_probe};
      if (on_probe) on_probe(RoundRecord{round, p, c.dist, post.size(), std::nullopt}, post, *child);
      if (c.vertices.size() == 1) {
        ++res.branches;
        res.worst_round = std::max(res.worst_round, round);
        continue;
      }
      if (round >= cap) {
        ++res.branches;
        res.all_captured = false;
        res.worst_round = std::max(res.worst_round, round + 1);
        continue;
      }
      self(self, std::move(child), expand(post, g), round + 1);
    }
  };

  walk(walk, cops.clone(), CandidateSet::everything(g.order()), 1);
  return res;
}

inline std::string describe(const Outcome& o) {
  if (auto* c = std::get_if<Captured>(&o))
    return "captured at vertex " + std::to_string(c->vertex) + " in round " + std::to_string(c->round);
  if (auto* e = std::get_if<Evaded>(&o)) return "evaded for " + std::to_string(e->rounds_played) + " rounds";
  auto& f = std::get<StrategyFault>(o);
  return "strategy fault in round " + std::to_string(f.round) + ": " + f.description;
}

}  // namespace locgame
