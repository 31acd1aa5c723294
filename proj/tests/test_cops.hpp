#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "locgame/engine.hpp"

namespace locgame::testing {

/// Adaptive deterministic cops: each cop in turn takes the pool vertex that
/// minimises the largest class (then sum of squared class sizes) of the
/// cops' consistent-position set. The strongest simple probing rule we have
/// that is not tailored to one graph family.
class GreedySplitCops final : public CopStrategy {
 public:
  GreedySplitCops(const DistanceOracle& dist, int k, std::vector<Vertex> pool = {})
      : dist_(dist), k_(k), pool_(std::move(pool)) {
    if (pool_.empty())
      for (Vertex v = 0; v < dist.order(); ++v) pool_.push_back(v);
    known_ = CandidateSet::everything(dist.order());
  }
  int cop_count() const override { return k_; }
  std::string name() const override { return "greedy-split"; }

  Probe next_probe() override {
    Probe p;
    std::vector<std::vector<int>> keys(known_.size());
    for (int i = 0; i < k_; ++i) {
      Vertex best = pool_.front();
      std::pair<std::size_t, std::size_t> best_score{SIZE_MAX, SIZE_MAX};
      for (Vertex u : pool_) {
        auto row = dist_.row(u);
        std::map<std::vector<int>, std::size_t> sizes;
        for (std::size_t j = 0; j < known_.size(); ++j) {
          auto key = keys[j];
          key.push_back((*row)[known_.vertices[j]]);
          ++sizes[key];
        }
        std::pair<std::size_t, std::size_t> score{0, 0};
        for (auto& [key, c] : sizes) {
          score.first = std::max(score.first, c);
          score.second += c * c;
        }
        if (score < best_score) {
          best_score = score;
          best = u;
        }
      }
      p.push_back(best);
      auto row = dist_.row(best);
      for (std::size_t j = 0; j < known_.size(); ++j) keys[j].push_back((*row)[known_.vertices[j]]);
    }
    return p;
  }

  void observe(const Probe& p, const DistanceVector& d) override {
    known_ = refine(known_, p, d, dist_);
    known_ = expand(known_, dist_.graph());
  }

  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<GreedySplitCops>(*this); }

 private:
  DistanceOracle dist_;
  int k_;
  std::vector<Vertex> pool_;
  CandidateSet known_;
};

}  // namespace locgame::testing
