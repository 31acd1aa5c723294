#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locgame/engine.hpp"
#include "locgame/rng.hpp"
#include "locgame/solver.hpp"

namespace locgame {

/// Evader living in the k-core H of the graph. Before every move it peeks
/// at the cops' next probe and steps to the smaller vertex of the
/// lexicographically least pair in N_H[v] (N_H(v) for the bipartite
/// variant) whose distance vectors coincide, so the next post-probe
/// candidate set always contains both vertices of the pair.
class DegeneracyEvader final : public RobberStrategy {
 public:
  enum class Variant { closed_neighbourhood, bipartite };

  /// With `enforce_threshold` false the cop-count bound is not checked; the
  /// strategy then evades only as long as twin pairs happen to exist, and a
  /// missing pair surfaces as an internal error.
  DegeneracyEvader(const DistanceOracle& dist, int opposing_cops, Variant variant = Variant::closed_neighbourhood,
                   bool enforce_threshold = true)
      : dist_(dist), variant_(variant) {
    const Graph& g = dist.graph();
    auto deg = degeneracy(g);
    k_ = deg.k;
    require(opposing_cops >= 1, ErrorCode::invalid_argument, "opposing cop count must be positive");
    if (variant_ == Variant::bipartite) {
      require(bipartition(g).has_value(), ErrorCode::not_bipartite, "bipartite evader on a non-bipartite graph");
      // m < log2 k  <=>  2^m < k
      require(!enforce_threshold || int_pow(2, opposing_cops) < k_, ErrorCode::precondition,
              "bipartite evader needs 2^m < degeneracy (m=" + std::to_string(opposing_cops) +
                  ", k=" + std::to_string(k_) + ")");
    } else {
      // m < log3(k + 1)  <=>  3^m < k + 1
      require(!enforce_threshold || int_pow(3, opposing_cops) < k_ + 1LL, ErrorCode::precondition,
              "degeneracy evader needs 3^m < degeneracy + 1 (m=" + std::to_string(opposing_cops) +
                  ", k=" + std::to_string(k_) + ")");
    }
    in_core_.assign(g.order(), 0);
    for (Vertex v : deg.core) in_core_[v] = 1;
    core_ = std::move(deg.core);
  }

  std::string name() const override {
    return variant_ == Variant::bipartite ? "bipartite-evader" : "degeneracy-evader";
  }

  Vertex choose_start(const Graph&, const PeekFn& peek) override { return step_from(core_.front(), peek()); }

  Vertex move(Vertex current, const Transcript&, const PeekFn& peek) override { return step_from(current, peek()); }

  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<DegeneracyEvader>(*this); }

  int degeneracy_k() const { return k_; }
  bool in_core(Vertex v) const { return in_core_[v]; }

  /// Lexicographically least pair (w, x), w < x, in the core neighbourhood
  /// of v sharing a distance vector under `probe`.
  std::optional<std::pair<Vertex, Vertex>> twin_pair(Vertex v, const Probe& probe) const {
    std::vector<Vertex> nb;
    if (variant_ == Variant::closed_neighbourhood) nb.push_back(v);
    for (Vertex w : dist_.graph().neighbors(v))
      if (in_core_[w]) nb.push_back(w);
    std::sort(nb.begin(), nb.end());
    std::vector<DistanceVector> vecs;
    vecs.reserve(nb.size());
    for (Vertex w : nb) vecs.push_back(distance_vector(dist_, probe, w));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (vecs[i] == vecs[j]) return std::pair{nb[i], nb[j]};
    return std::nullopt;
  }

 private:
  Vertex step_from(Vertex v, const Probe& probe) const {
    auto pair = twin_pair(v, probe);
    require(pair.has_value(), ErrorCode::internal, "no twin pair in core neighbourhood of " + std::to_string(v));
    return pair->first;
  }

  DistanceOracle dist_;
  Variant variant_;
  int k_ = 0;
  std::vector<Vertex> core_;
  std::vector<char> in_core_;
};

inline std::unique_ptr<DegeneracyEvader> degeneracy_evader(const DistanceOracle& dist, int opposing_cops) {
  return std::make_unique<DegeneracyEvader>(dist, opposing_cops);
}

inline std::unique_ptr<DegeneracyEvader> bipartite_evader(const DistanceOracle& dist, int opposing_cops) {
  return std::make_unique<DegeneracyEvader>(dist, opposing_cops, DegeneracyEvader::Variant::bipartite);
}

/// Largest class; ties go to the lexicographically least vertex set.
class LargestClassAdversary final : public PhantomAdversary {
 public:
  std::string name() const override { return "largest-class"; }
  std::vector<Vertex> choose(std::span<const CandidateClass> classes, const Graph&, int) override {
    const CandidateClass* best = &classes.front();
    for (const auto& c : classes) {
      if (c.vertices.size() > best->vertices.size() ||
          (c.vertices.size() == best->vertices.size() && c.vertices < best->vertices))
        best = &c;
    }
    return best->vertices;
  }
  std::unique_ptr<PhantomAdversary> clone() const override { return std::make_unique<LargestClassAdversary>(*this); }
};

/// Seeded adversary: a non-singleton class with probability proportional to
/// its size (a uniformly placed robber), or any class once all are singletons.
class RandomAdversary final : public PhantomAdversary {
 public:
  explicit RandomAdversary(std::uint64_t seed) : rng_(Rng::split(seed, "random_adversary")) {}
  std::string name() const override { return "random-class"; }
  std::vector<Vertex> choose(std::span<const CandidateClass> classes, const Graph&, int) override {
    std::size_t total = 0;
    for (const auto& c : classes)
      if (c.vertices.size() > 1) total += c.vertices.size();
    if (total == 0) return classes[rng_.below(classes.size())].vertices;
    std::size_t pick = rng_.below(total);
    for (const auto& c : classes) {
      if (c.vertices.size() <= 1) continue;
      if (pick < c.vertices.size()) return c.vertices;
      pick -= c.vertices.size();
    }
    return classes.back().vertices;
  }
  std::unique_ptr<PhantomAdversary> clone() const override { return std::make_unique<RandomAdversary>(*this); }

 private:
  Rng rng_;
};

/// Solver-backed adversary: keeps play inside the robber-winning region
/// when possible, otherwise maximises the remaining forced-capture depth.
class OptimalAdversary final : public PhantomAdversary {
 public:
  explicit OptimalAdversary(std::shared_ptr<const GameStateTable> table) : table_(std::move(table)) {
    require(table_ != nullptr, ErrorCode::precondition, "optimal adversary needs a solver table");
  }

  std::string name() const override { return "optimal"; }

  /// Value of continuing from a post-probe class (0 for singletons).
  int class_value(const std::vector<Vertex>& c) const {
    if (c.size() <= 1) return 0;
    return table_->depth[table_->expand(GameStateTable::mask_of(c))];
  }

  std::vector<Vertex> choose(std::span<const CandidateClass> classes, const Graph& g, int) override {
    require(g.order() == table_->n, ErrorCode::precondition, "solver table is for a different graph");
    const CandidateClass* best = &classes.front();
    int best_value = class_value(best->vertices);
    for (const auto& c : classes) {
      int v = class_value(c.vertices);
      if (v > best_value || (v == best_value && c.vertices < best->vertices)) {
        best = &c;
        best_value = v;
      }
    }
    return best->vertices;
  }

  const GameStateTable& table() const { return *table_; }

  std::unique_ptr<PhantomAdversary> clone() const override { return std::make_unique<OptimalAdversary>(*this); }

 private:
  std::shared_ptr<const GameStateTable> table_;
};

inline std::unique_ptr<OptimalAdversary> optimal_robber(const Graph& g, int k) {
  auto [win, table] = cops_win(g, k);
  (void)win;
  return std::make_unique<OptimalAdversary>(std::make_shared<const GameStateTable>(std::move(table)));
}

/// Concrete robber that never moves.
class StillRobber final : public RobberStrategy {
 public:
  explicit StillRobber(Vertex at) : at_(at) {}
  std::string name() const override { return "still"; }
  Vertex choose_start(const Graph&, const PeekFn&) override { return at_; }
  Vertex move(Vertex current, const Transcript&, const PeekFn&) override { return current; }
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<StillRobber>(*this); }

 private:
  Vertex at_;
};

/// Seeded random walk (stay or step to a uniform neighbour).
class RandomWalkRobber final : public RobberStrategy {
 public:
  explicit RandomWalkRobber(std::uint64_t seed) : rng_(Rng::split(seed, "random_walk")) {}
  std::string name() const override { return "random-walk"; }
  Vertex choose_start(const Graph& g, const PeekFn&) override {
    graph_ = &g;
    return static_cast<Vertex>(rng_.below(g.order()));
  }
  Vertex move(Vertex current, const Transcript&, const PeekFn&) override {
    auto nb = graph_->neighbors(current);
    std::size_t pick = rng_.below(nb.size() + 1);
    return pick == nb.size() ? current : nb[pick];
  }
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<RandomWalkRobber>(*this); }

 private:
  Rng rng_;
  const Graph* graph_ = nullptr;
};

/// Replays a fixed walk; stays once the script runs out.
class ScriptedRobber final : public RobberStrategy {
 public:
  explicit ScriptedRobber(std::vector<Vertex> walk) : walk_(std::move(walk)) {
    require(!walk_.empty(), ErrorCode::invalid_argument, "scripted robber needs a start vertex");
  }
  std::string name() const override { return "scripted"; }
  Vertex choose_start(const Graph&, const PeekFn&) override { return walk_.front(); }
  Vertex move(Vertex current, const Transcript& t, const PeekFn&) override {
    std::size_t idx = t.rounds.size();
    return idx < walk_.size() ? walk_[idx] : current;
  }
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<ScriptedRobber>(*this); }

 private:
  std::vector<Vertex> walk_;
};

}  // namespace locgame
