#pragma once

#include <bit>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locgame/engine.hpp"
#include "locgame/generators.hpp"
#include "locgame/rng.hpp"

namespace locgame {

/// Probes the same vertices every round.
class StationaryCops final : public CopStrategy {
 public:
  explicit StationaryCops(Probe probe) : probe_(std::move(probe)) {
    require(!probe_.empty(), ErrorCode::invalid_argument, "stationary cops need at least one vertex");
  }
  int cop_count() const override { return static_cast<int>(probe_.size()); }
  std::string name() const override { return "stationary"; }
  Probe next_probe() override { return probe_; }
  void observe(const Probe&, const DistanceVector&) override {}
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<StationaryCops>(*this); }

 private:
  Probe probe_;
};

/// Seeded uniform probes; deterministic for a given seed.
class RandomCops final : public CopStrategy {
 public:
  RandomCops(int cops, int n, std::uint64_t seed) : cops_(cops), n_(n), rng_(Rng::split(seed, "random_cops")) {
    require(cops >= 1 && cops <= n, ErrorCode::invalid_argument, "random cops need 1 <= k <= n");
  }
  int cop_count() const override { return cops_; }
  std::string name() const override { return "random"; }
  Probe next_probe() override {
    Probe p(cops_);
    for (auto& v : p) v = static_cast<Vertex>(rng_.below(n_));
    return p;
  }
  void observe(const Probe&, const DistanceVector&) override {}
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<RandomCops>(*this); }

 private:
  int cops_;
  int n_;
  Rng rng_;
};

inline int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

/// Coordinate-learning strategy on a Cartesian product of paths (the
/// hypercube is the all-2 case), with ceil(log2 n) + 2 cops. Probe layout:
/// index 0 is C0 (the all-zero tuple), index 1 is C1 (coordinate r-1 at its
/// far end in round r), then one maintenance cop per bit of a coordinate
/// index (coordinate j at its far end iff bit i of j is set).
///
/// Besides probing, the strategy keeps the decoded robber coordinates it
/// would know after each round (`tracked()`).
class ProductCops final : public CopStrategy {
 public:
  explicit ProductCops(const ProductGraph& pg, std::string name = "product")
      : radix_(pg.radix), name_(std::move(name)) {
    require(!radix_.empty(), ErrorCode::missing_labels, "product cops need a coordinate labelling");
    require(pg.graph.order() > 0, ErrorCode::missing_labels, "product cops need a labelled product graph");
    maintenance_ = ceil_log2(dimension());
    tracked_.assign(radix_.size(), std::nullopt);
  }

  int dimension() const { return static_cast<int>(radix_.size()); }
  int cop_count() const override { return maintenance_ + 2; }
  std::string name() const override { return name_; }

  Probe next_probe() override {
    const int n = dimension();
    const int target = round_ % n;  // coordinate learned this round (0-based)
    Probe p;
    std::vector<int> c(n, 0);
    p.push_back(vertex(c));
    c[target] = radix_[target] - 1;
    p.push_back(vertex(c));
    c[target] = 0;
    for (int bit = 0; bit < maintenance_; ++bit) {
      for (int j = 0; j < n; ++j) c[j] = (j >> bit) & 1 ? radix_[j] - 1 : 0;
      p.push_back(vertex(c));
    }
    return p;
  }

  void observe(const Probe&, const DistanceVector& d) override {
    const int n = dimension();
    const int target = round_ % n;
    if (last_) {
      int delta = d[0] - (*last_)[0];
      require(delta >= -1 && delta <= 1, ErrorCode::internal, "C0 distance jumped by more than one");
      if (delta != 0 && n > 1) {
        int j = 0;
        for (int bit = 0; bit < maintenance_; ++bit) {
          int delta_i = d[2 + bit] - (*last_)[2 + bit];
          if (delta_i == -delta) j |= 1 << bit;
        }
        require(j < n, ErrorCode::internal, "decoded coordinate index out of range");
        if (tracked_[j]) *tracked_[j] += delta;
        last_move_ = {j, delta};
      } else {
        last_move_.reset();
      }
    }
    // d0 = sum x, d1 = d0 - x_t + (L_t - 1 - x_t).
    tracked_[target] = (d[0] - d[1] + radix_[target] - 1) / 2;
    last_ = d;
    ++round_;
  }

  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<ProductCops>(*this); }

  const std::vector<std::optional<int>>& tracked() const { return tracked_; }
  int rounds_observed() const { return round_; }

 private:
  Vertex vertex(const std::vector<int>& c) const {
    Vertex v = 0;
    for (int i = 0; i < dimension(); ++i) v = v * radix_[i] + c[i];
    return v;
  }

  std::vector<int> radix_;
  std::string name_;
  int maintenance_ = 0;
  int round_ = 0;
  std::optional<DistanceVector> last_;
  std::optional<std::pair<int, int>> last_move_;
  std::vector<std::optional<int>> tracked_;
};

inline std::unique_ptr<ProductCops> hypercube_cops(const ProductGraph& q) {
  for (int r : q.radix)
    require(r == 2, ErrorCode::missing_labels, "hypercube cops need a hypercube coordinate labelling");
  return std::make_unique<ProductCops>(q, "hypercube");
}

inline std::unique_ptr<ProductCops> product_cops(const ProductGraph& pg) { return std::make_unique<ProductCops>(pg); }

}  // namespace locgame
