#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "locgame/engine.hpp"
#include "locgame/generators.hpp"

namespace locgame {

/// k-cop strategy on G_k. Outside the satellite search, cop i (0-based)
/// probes one of the two satellites of axis i + 1.
///
/// Per axis the strategy keeps the set of values the robber's coordinate can
/// take if he has stayed in the core (a subset of Z_40, as a bitmask). Main
/// stage: three probe rounds with the probe schedule chosen from the first
/// reading. Resolution: up to two further rounds chosen from the predicted
/// coordinate y. Any reading below 40 or above 60 switches to a thread chase.
/// The referee decides capture, so when a stage ends without capture the
/// strategy restarts the main stage.
///
/// Near a satellite v_c (fewer than 11 steps away) every other satellite
/// sees the robber through v_c, so the two-round chase cannot read off the
/// thread's core end. There the strategy switches to a satellite search:
/// cop c keeps probing v_c, which pins the robber to his thread, and the
/// other cops pick probes that minimise the largest class of the positions
/// consistent with everything observed so far.
class GkCops final : public CopStrategy {
 public:
  enum class Stage { main, resolution, chase_near, chase_far, satellite_search };
  enum class MainCase { a, b, c, d, e };

  GkCops(const DistanceOracle& dist, const GkLayout& layout) : dist_(dist), layout_(layout) {
    require(layout.k >= 1, ErrorCode::missing_labels, "gk cops need a G_k layout");
    require(dist.order() == layout.vertex_count(), ErrorCode::missing_labels, "graph does not match the G_k layout");
    axes_.resize(layout.k);
    known_ = CandidateSet::everything(dist.order());
    restart();
  }

  int cop_count() const override { return layout_.k; }
  std::string name() const override { return "gk"; }

  Probe next_probe() override {
    if (stage_ == Stage::satellite_search) return search_probe();
    Probe p(layout_.k);
    for (int i = 0; i < layout_.k; ++i) p[i] = layout_.satellite(i + 1, axes_[i].next_t);
    return p;
  }

  void observe(const Probe& probe, const DistanceVector& d) override {
    const int k = layout_.k;
    for (int i = 0; i < k; ++i) axes_[i].last_t = axes_[i].next_t;
    if (!first_) known_ = expand(known_, dist_.graph());
    first_ = false;
    known_ = refine(known_, probe, d, dist_);
    core_asserted_ = false;

    if (stage_ == Stage::satellite_search) {
      if (d[search_cop_] < kCore) return;
      restart();
      ++restarts_;
      return;
    }

    int near = -1;
    bool far = false;
    for (int i = 0; i < k; ++i) {
      if (d[i] < kCore && near < 0) near = i;
      if (d[i] > kCore + 20) far = true;
    }
    if (near >= 0 && d[near] <= kSearchRadius) {
      stage_ = Stage::satellite_search;
      search_cop_ = near;
      search_satellite_ = probe[near];
      return;
    }
    if (near >= 0) {
      stage_ = Stage::chase_near;
      for (int i = 0; i < k; ++i) axes_[i].next_t = i == near ? axes_[i].last_t : other(axes_[i].last_t);
      return;
    }
    if (far) {
      stage_ = Stage::chase_far;
      for (auto& a : axes_) a.next_t = other(a.last_t);
      return;
    }

    switch (stage_) {
      case Stage::main:
        on_main(d);
        break;
      case Stage::resolution:
        on_resolution(d);
        break;
      case Stage::chase_near:
      case Stage::chase_far:
      case Stage::satellite_search:
        restart();
        ++restarts_;
        break;
    }
  }

  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<GkCops>(*this); }

  Stage stage() const noexcept { return stage_; }
  /// Round within the current stage that the next probe belongs to (1-based).
  int stage_round() const noexcept { return stage_round_; }
  /// Number of times a stage ended without capture and play restarted.
  int restarts() const noexcept { return restarts_; }
  /// True right after an observation from which the proof concludes the
  /// robber is in the core.
  bool core_asserted() const noexcept { return core_asserted_; }
  bool critical(int axis0) const { return axes_[axis0].critical; }
  /// Predicted coordinate (core presumption), or -1 when not yet determined.
  int predicted(int axis0) const {
    auto m = axes_[axis0].values;
    return std::popcount(m) == 1 ? std::countr_zero(m) : -1;
  }
  MainCase main_case(int axis0) const { return axes_[axis0].main_case; }

  static MainCase classify(int d) {
    if (d >= 2 && d <= 8) return MainCase::a;
    if (d >= 12 && d <= 20) return MainCase::b;
    if (d == 1) return MainCase::c;
    if (d == 0) return MainCase::d;
    require(d >= 9 && d <= 11, ErrorCode::internal, "main-stage reading out of range");
    return MainCase::e;
  }

  /// Satellite offset probed in the resolution round for prediction y.
  static int resolution_offset(int y) {
    if (y == 39 || (y >= 1 && y <= 9) || (y >= 30 && y <= 38) || y == 10) return 0;
    return 10;  // y = 11, 12..29, 0
  }

 private:
  static constexpr int kCore = GkLayout::kThreadLength;
  // Furthest distance from a satellite at which its chase is unreliable.
  static constexpr int kSearchRadius = 10;
  static constexpr int kCycle = GkLayout::kCycle;
  static constexpr std::uint64_t kAll = (std::uint64_t{1} << kCycle) - 1;

  struct Axis {
    int next_t = 0;
    int last_t = 0;
    MainCase main_case = MainCase::a;
    int reading2 = 0;
    std::uint64_t values = kAll;
    bool critical = false;
  };

  static int other(int t) { return t == 0 ? 10 : 0; }

  static int circ(int x, int t) {
    int a = x > t ? x - t : t - x;
    return a < kCycle - a ? a : kCycle - a;
  }

  static std::uint64_t filter(std::uint64_t m, int t, int reading) {
    std::uint64_t out = 0;
    for (int x = 0; x < kCycle; ++x)
      if ((m >> x & 1) && kCore + circ(x, t) == reading) out |= std::uint64_t{1} << x;
    return out;
  }

  static std::uint64_t step(std::uint64_t m) {
    std::uint64_t up = ((m << 1) | (m >> (kCycle - 1))) & kAll;
    std::uint64_t down = ((m >> 1) | (m << (kCycle - 1))) & kAll;
    return m | up | down;
  }

  // Cop c stays on its satellite; the others greedily split the positions
  // consistent with the observations (largest class, then sum of squares,
  // then least vertex id).
  Probe search_probe() const {
    const int k = layout_.k;
    Probe p(k, search_satellite_);
    std::vector<std::vector<int>> keys(known_.size());
    auto row = dist_.row(search_satellite_);
    for (std::size_t j = 0; j < known_.size(); ++j) keys[j].push_back((*row)[known_.vertices[j]]);
    for (int i = 0; i < k; ++i) {
      if (i == search_cop_) continue;
      Vertex best = -1;
      std::pair<std::size_t, std::size_t> best_score{SIZE_MAX, SIZE_MAX};
      for (Vertex u = 0; u < layout_.core_count + 2 * k; ++u) {
        auto r = dist_.row(u);
        std::map<std::vector<int>, std::size_t> sizes;
        for (std::size_t j = 0; j < known_.size(); ++j) {
          auto key = keys[j];
          key.push_back((*r)[known_.vertices[j]]);
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
      p[i] = best;
      auto r = dist_.row(best);
      for (std::size_t j = 0; j < known_.size(); ++j) keys[j].push_back((*r)[known_.vertices[j]]);
    }
    return p;
  }

  void restart() {
    stage_ = Stage::main;
    stage_round_ = 1;
    for (auto& a : axes_) {
      a.next_t = 0;
      a.values = kAll;
      a.critical = false;
    }
  }

  int single(const Axis& a) const {
    require(std::popcount(a.values) == 1, ErrorCode::internal, "core prediction is not unique");
    return std::countr_zero(a.values);
  }

  void on_main(const DistanceVector& d) {
    const int k = layout_.k;
    if (stage_round_ == 1) {
      for (int i = 0; i < k; ++i) {
        auto& a = axes_[i];
        a.values = filter(kAll, a.last_t, d[i]);
        a.main_case = classify(d[i] - kCore);
        a.next_t = a.main_case == MainCase::d ? 0 : 10;
      }
      stage_round_ = 2;
      return;
    }
    if (stage_round_ == 2) {
      for (int i = 0; i < k; ++i) {
        auto& a = axes_[i];
        a.values = filter(step(a.values), a.last_t, d[i]);
        a.reading2 = d[i];
        a.next_t = a.main_case == MainCase::e ? 0 : 10;
      }
      stage_round_ = 3;
      return;
    }
    bool any = false;
    for (int i = 0; i < k; ++i) {
      auto& a = axes_[i];
      a.values = filter(step(a.values), a.last_t, d[i]);
      switch (a.main_case) {
        case MainCase::c:
          a.critical = a.reading2 == kCore + 10 && d[i] == kCore + 11;
          break;
        case MainCase::d:
        case MainCase::e:
          a.critical = d[i] == kCore + 11;
          break;
        default:
          a.critical = false;
      }
      any |= a.critical;
    }
    if (!any) {
      core_asserted_ = true;
      restart();
      ++restarts_;
      return;
    }
    begin_resolution(1);
  }

  void begin_resolution(int rep) {
    stage_ = Stage::resolution;
    stage_round_ = rep;
    for (auto& a : axes_) a.next_t = resolution_offset(single(a));
  }

  void on_resolution(const DistanceVector& d) {
    const int k = layout_.k;
    bool any = false, saw_forty = false;
    for (int i = 0; i < k; ++i) {
      auto& a = axes_[i];
      int y = single(a);
      a.values = filter(step(a.values), a.last_t, d[i]);
      if (d[i] == kCore) saw_forty = true;
      if (y == 39 || y == 11)
        a.critical = d[i] == kCore + 2;
      else if (y == 0 || y == 10)
        a.critical = d[i] == kCore + 11;
      else
        a.critical = false;
      any |= a.critical;
    }
    if (saw_forty || !any) core_asserted_ = true;
    if (any && !saw_forty && stage_round_ == 1) return begin_resolution(2);
    restart();
    ++restarts_;
  }

  DistanceOracle dist_;
  GkLayout layout_;
  std::vector<Axis> axes_;
  CandidateSet known_;
  bool first_ = true;
  int search_cop_ = 0;
  Vertex search_satellite_ = 0;
  Stage stage_ = Stage::main;
  int stage_round_ = 1;
  int restarts_ = 0;
  bool core_asserted_ = false;
};

inline std::unique_ptr<GkCops> gk_cops(const DistanceOracle& dist, const GkLayout& layout) {
  return std::make_unique<GkCops>(dist, layout);
}

}  // namespace locgame
