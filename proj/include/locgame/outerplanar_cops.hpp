#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "locgame/blocks.hpp"
#include "locgame/engine.hpp"

namespace locgame {

/// Two-cop strategy for connected outerplanar graphs built on a growing cop
/// territory.
///
/// State invariants, checked after every observation:
///   * no vertex the robber may occupy lies in the territory (a captured
///     robber standing on a probed endpoint is the only exception);
///   * territory only grows;
///   * both endpoints lie in the current block, and in a block with an outer
///     cycle the territory meets it in the arc v_ell .. v_r (clockwise).
///
/// Case code is written for one orientation. The mirrored cases flip the
/// orientation flag, which exchanges the roles of the two endpoints.
///
/// The strategy replays its own observations to keep the set of positions
/// consistent with them; a territory vertex in that set raises an internal
/// error, which the referee reports as a strategy fault.
class OuterplanarCops final : public CopStrategy {
 public:
  explicit OuterplanarCops(const DistanceOracle& dist) : dist_(dist) {
    const Graph& g = dist_.graph();
    shared_ = std::make_shared<const OuterEmbedding>(outer_embedding(g));
    const int n = g.order();
    territory_.assign(n, 0);
    pos_.assign(n, -1);
    attach_.assign(n, -1);
    known_ = CandidateSet::everything(n);
    if (n == 1) {
      vL_ = vR_ = 0;
      k2_ = true;
      return;
    }
    // Start in the first block containing vertex 0, on its least outer edge.
    const auto& tree = shared_->tree;
    int b = tree.blocks_of[0].front();
    std::vector<Edge> outer;
    const auto& cyc = shared_->blocks[b].cycle;
    if (cyc.empty()) {
      outer.push_back({tree.blocks[b][0], tree.blocks[b][1]});
    } else {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Vertex a = cyc[i], c = cyc[(i + 1) % cyc.size()];
        outer.push_back({std::min(a, c), std::max(a, c)});
      }
    }
    Edge e = *std::min_element(outer.begin(), outer.end());
    set_block(b, e.first, e.second);
    pending_ = {e.first, e.second};
  }

  int cop_count() const override { return 2; }
  std::string name() const override { return "outerplanar"; }

  Probe next_probe() override {
    switch (mode_) {
      case Mode::scan:
        return {hub_, ws_[wi_]};
      case Mode::sector:
        return {at(sector_s_), at(sector_w_)};
      case Mode::standard:
        break;
    }
    return {vL_, vR_};
  }

  void observe(const Probe& probe, const DistanceVector& d) override {
    for (Vertex v : pending_) claim(v);
    pending_.clear();
    if (!first_) known_ = expand(known_, graph());
    first_ = false;
    known_ = refine(known_, probe, d, dist_);
    if (known_.size() == 1) return;

    switch (mode_) {
      case Mode::standard:
        on_standard(d[0], d[1]);
        break;
      case Mode::scan:
        on_scan(d[0], d[1]);
        break;
      case Mode::sector:
        on_sector(d[0], d[1]);
        break;
    }
    for (Vertex v : known_.vertices)
      require(!territory_[v], ErrorCode::internal,
              "territory vertex " + std::to_string(v) + " is still a robber candidate");
  }

  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<OuterplanarCops>(*this); }

  /// Territory membership per vertex.
  const std::vector<char>& territory() const noexcept { return territory_; }
  std::size_t territory_size() const noexcept { return territory_count_; }
  std::pair<Vertex, Vertex> endpoints() const noexcept { return {vL_, vR_}; }
  int current_block() const noexcept { return block_; }
  const BlockTree& blocks() const noexcept { return shared_->tree; }

  /// One-line diagnostic of the case machine state.
  std::string describe_state() const {
    std::string out = mode_ == Mode::standard ? "standard" : mode_ == Mode::scan ? "scan" : "sector";
    out += " block=" + std::to_string(block_) + " L=" + std::to_string(vL_) + " R=" + std::to_string(vR_);
    if (!k2_) out += " ell=" + std::to_string(ell_) + " r=" + std::to_string(r_) + " dir=" + std::to_string(dir_);
    out += " T={";
    for (Vertex v = 0; v < graph().order(); ++v)
      if (territory_[v]) out += std::to_string(v) + ",";
    out += "}";
    return out;
  }

 private:
  enum class Mode { standard, scan, sector };

  const Graph& graph() const { return dist_.graph(); }

  static int mod(int a, int m) { return ((a % m) + m) % m; }

  // Clockwise-indexed vertex of the current cycle block.
  Vertex at(int i) const { return (*cycle_)[mod(dir_ * i, m_)]; }

  // Index of v in [ell_, ell_ + m_).
  int idx(Vertex v) const {
    int p = pos_[v];
    int i = dir_ == 1 ? p : mod(-p, m_);
    return ell_ + mod(i - ell_, m_);
  }

  void flip() {
    dir_ = -dir_;
    int e = -r_, r = -ell_;
    ell_ = e;
    r_ = r;
    std::swap(vL_, vR_);
  }

  void claim(Vertex v) {
    if (!territory_[v]) {
      territory_[v] = 1;
      ++territory_count_;
    }
  }

  void claim_all(const std::vector<Vertex>& vs) {
    for (Vertex v : vs) claim(v);
  }

  // G_v for v in the current block: vertices outside the block hanging at v.
  std::vector<Vertex> hanging(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < graph().order(); ++x)
      if (attach_[x] == v && x != v) out.push_back(x);
    return out;
  }

  bool hanging_open(Vertex v) const {
    for (Vertex x = 0; x < graph().order(); ++x)
      if (attach_[x] == v && x != v && !territory_[x]) return true;
    return false;
  }

  // Arc v_i .. v_j together with everything hanging from it.
  std::vector<Vertex> arc_region(int i, int j) const {
    std::vector<Vertex> out;
    for (int t = i; t <= j; ++t) {
      out.push_back(at(t));
      auto h = hanging(at(t));
      out.insert(out.end(), h.begin(), h.end());
    }
    return out;
  }

  bool in_block(int b, Vertex v) const {
    const auto& vs = shared_->tree.blocks[b];
    return std::binary_search(vs.begin(), vs.end(), v);
  }

  // Clockwise cycle successor of a in block b (the other vertex for K2).
  Vertex first_step(int b, Vertex a) const {
    const auto& cyc = shared_->blocks[b].cycle;
    if (cyc.empty()) {
      const auto& vs = shared_->tree.blocks[b];
      return vs[0] == a ? vs[1] : vs[0];
    }
    auto it = std::find(cyc.begin(), cyc.end(), a);
    std::size_t p = static_cast<std::size_t>(it - cyc.begin());
    return cyc[(p + 1) % cyc.size()];
  }

  // Vertices on the far side of hub a through block b, hub excluded.
  std::vector<Vertex> component(int b, Vertex a) const {
    const Graph& g = graph();
    std::vector<char> seen(g.order(), 0);
    seen[a] = 1;
    std::deque<Vertex> q;
    std::vector<Vertex> out;
    for (Vertex v : shared_->tree.blocks[b])
      if (v != a) {
        seen[v] = 1;
        q.push_back(v);
      }
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      out.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    return out;
  }

  // Makes b the current block with endpoints a (left) and x (right); x must
  // follow a on the outer cycle when b has one.
  void set_block(int b, Vertex a, Vertex x) {
    const Graph& g = graph();
    block_ = b;
    vL_ = a;
    vR_ = x;
    std::fill(pos_.begin(), pos_.end(), -1);
    std::fill(attach_.begin(), attach_.end(), -1);
    const auto& vs = shared_->tree.blocks[b];
    std::deque<Vertex> q;
    for (Vertex v : vs) {
      attach_[v] = v;
      q.push_back(v);
    }
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(v))
        if (attach_[w] < 0) {
          attach_[w] = attach_[v];
          q.push_back(w);
        }
    }
    const auto& cyc = shared_->blocks[b].cycle;
    k2_ = cyc.empty();
    if (k2_) return;
    cycle_ = &cyc;
    m_ = static_cast<int>(cyc.size());
    for (int i = 0; i < m_; ++i) pos_[cyc[i]] = i;
    int pa = pos_[a], px = pos_[x];
    if (mod(px - pa, m_) == 1)
      dir_ = 1;
    else if (mod(pa - px, m_) == 1)
      dir_ = -1;
    else
      fail(ErrorCode::internal, "new endpoints are not consecutive on the outer cycle");
    ell_ = dir_ == 1 ? pa : mod(-pa, m_);
    r_ = ell_ + 1;
  }

  std::vector<int> out_indices_of(Vertex v) const {
    std::vector<int> out;
    for (Vertex w : graph().neighbors(v))
      if (pos_[w] >= 0) {
        int i = idx(w);
        if (i > r_ && i < ell_ + m_) out.push_back(i);
      }
    return out;
  }

  void set_right(int r) {
    r_ = r;
    vR_ = at(r_);
  }

  void set_left(int ell) {
    ell_ = ell;
    vL_ = at(ell_);
  }

  void on_standard(int dL, int dR) {
    if (k2_) return on_k2(dL, dR);
    if (r_ - ell_ + 1 == m_) return on_block_exhausted(dL, dR);
    if (dL == 1 || dR == 1) return on_adjacent(dL, dR);
    on_far(dL, dR);
  }

  void on_k2(int dL, int dR) {
    require(dL != dR, ErrorCode::internal, "equal distances across a bridge");
    Vertex a = dL < dR ? vL_ : vR_, b = dL < dR ? vR_ : vL_;
    claim_all(hanging(b));
    for (int nb : shared_->tree.blocks_of[a]) {
      if (nb == block_) continue;
      Vertex x = first_step(nb, a);
      if (territory_[x]) continue;
      set_block(nb, a, x);
      pending_.push_back(x);
      return;
    }
    fail(ErrorCode::internal, "no unexplored block at the nearer bridge end");
  }

  // Case 1: the whole block is territory.
  void on_block_exhausted(int dL, int dR) {
    Vertex a = vL_;
    if (vL_ != vR_) {
      require(dL != dR, ErrorCode::internal, "equal distances to adjacent exhausted endpoints");
      a = dL < dR ? vL_ : vR_;
      claim_all(hanging(dL < dR ? vR_ : vL_));
    }
    hub_ = a;
    comps_.clear();
    for (int nb : shared_->tree.blocks_of[a])
      if (nb != block_ && !territory_[first_step(nb, a)]) comps_.push_back(nb);
    require(!comps_.empty(), ErrorCode::internal, "no unexplored component at the hub");
    ci_ = 0;
    if (comps_.size() == 1) return enter(comps_[0]);
    load_scan();
    mode_ = Mode::scan;
  }

  void load_scan() {
    int b = comps_[ci_];
    wi_ = 0;
    ws_.clear();
    const auto& cyc = shared_->blocks[b].cycle;
    if (cyc.empty()) {
      ws_.push_back(first_step(b, hub_));
      return;
    }
    int m = static_cast<int>(cyc.size());
    int p = static_cast<int>(std::find(cyc.begin(), cyc.end(), hub_) - cyc.begin());
    std::vector<std::pair<int, Vertex>> keyed;
    for (Vertex w : graph().neighbors(hub_))
      if (in_block(b, w)) {
        int q = static_cast<int>(std::find(cyc.begin(), cyc.end(), w) - cyc.begin());
        keyed.push_back({mod(q - p, m), w});
      }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [k, w] : keyed) ws_.push_back(w);
  }

  void on_scan(int da, int dw) {
    if (dw <= da) return enter(comps_[ci_]);
    require(dw == da + 1, ErrorCode::internal, "neighbour distance out of range during component scan");
    if (wi_ + 1 < ws_.size()) {
      ++wi_;
      return;
    }
    claim_all(component(comps_[ci_], hub_));
    ++ci_;
    require(ci_ < comps_.size(), ErrorCode::internal, "every component at the hub was cleared");
    if (ci_ + 1 == comps_.size()) return enter(comps_[ci_]);
    load_scan();
  }

  // Robber is beyond the hub in block b: everything else at the hub is safe.
  void enter(int b) {
    for (int nb : shared_->tree.blocks_of[hub_])
      if (nb != b && nb != block_) claim_all(component(nb, hub_));
    Vertex x = first_step(b, hub_);
    set_block(b, hub_, x);
    pending_.push_back(x);
    mode_ = Mode::standard;
  }

  // Case 2: the robber is adjacent to an endpoint.
  void on_adjacent(int dL, int dR) {
    if (dL == 1 && dR == 1) return;
    if (dL != 1) flip();
    claim_all(hanging(vR_));
    if (graph().adjacent(vL_, at(r_ + 1))) {
      set_right(r_ + 1);
      pending_.push_back(vR_);
      return;
    }
    auto out = out_indices_of(vL_);
    int s = *std::min_element(out.begin(), out.end());
    require(s >= r_ + 2, ErrorCode::internal, "farthest neighbour precedes the right endpoint");
    // v_s may have chords back into r+1 .. s-1; the robber can step onto any
    // of their ends, so the new endpoint is the first of them.
    int u = s - 1;
    for (Vertex x : graph().neighbors(at(s)))
      if (pos_[x] >= 0) {
        int i = idx(x);
        if (i > r_ && i < u) u = i;
      }
    claim_all(arc_region(r_ + 1, u));
    set_right(u);
  }

  void claim_left_side(int s) {
    claim_all(hanging(vL_));
    claim_all(arc_region(s, ell_ + m_ - 1));
    set_left(s - m_);
  }

  void claim_right_side(int t) {
    claim_all(hanging(vR_));
    claim_all(arc_region(r_ + 1, t));
    set_right(t);
  }

  // Cases 3 to 5: the robber is at distance at least 2 from both endpoints.
  void on_far(int dL, int dR) {
    auto chordL = [&] {
      for (int i : out_indices_of(vL_))
        if (i <= ell_ + m_ - 2) return true;
      return false;
    };
    auto chordR = [&] {
      for (int i : out_indices_of(vR_))
        if (i >= r_ + 2) return true;
      return false;
    };
    bool cl = chordL(), cr = chordR();

    if (cl != cr) {
      if (cr) {
        flip();
        std::swap(dL, dR);
      }
      if (!hanging_open(vR_)) {
        set_right(r_ + 1);
        pending_.push_back(vR_);
      } else if (dR >= dL) {
        claim_all(hanging(vR_));
      } else {
        claim_all(hanging(vL_));
        auto out = out_indices_of(vL_);
        claim_left_side(*std::min_element(out.begin(), out.end()));
      }
      return;
    }

    if (cl && cr) {
      auto outL = out_indices_of(vL_), outR = out_indices_of(vR_);
      int s = *std::min_element(outL.begin(), outL.end());
      int t = *std::max_element(outR.begin(), outR.end());
      require(t <= s, ErrorCode::internal, "crossing chords at the endpoints");
      if (s != t) {
        if (dL >= dR)
          claim_left_side(s);
        else
          claim_right_side(t);
        return;
      }
      if (dL < dR) return claim_right_side(t);
      if (dR < dL) return claim_left_side(s);
      // Equal distances: test the sectors cut out by the chords at v_s.
      int w = s;
      for (Vertex x : graph().neighbors(at(s)))
        if (pos_[x] >= 0) {
          int i = idx(x);
          if (i > r_ && i < w) w = i;
        }
      require(w < s, ErrorCode::internal, "no sector boundary before v_s");
      sector_s_ = s;
      sector_w_ = w;
      mode_ = Mode::sector;
      return;
    }

    bool openL = hanging_open(vL_), openR = hanging_open(vR_);
    if (openL && openR) {
      claim_all(hanging(dL >= dR ? vL_ : vR_));
      return;
    }
    if (openR) flip();
    set_right(r_ + 1);
    pending_.push_back(vR_);
  }

  // Probe was (v_s, w): either the left side is cleared or the sector
  // between v_r and w is.
  void on_sector(int ds, int dw) {
    mode_ = Mode::standard;
    if (ds >= dw) return claim_left_side(sector_s_);
    require(dw == ds + 1, ErrorCode::internal, "sector probe distances out of range");
    auto region = arc_region(r_, sector_w_);
    pending_.insert(pending_.end(), region.begin(), region.end());
    set_right(sector_w_);
  }

  DistanceOracle dist_;
  std::shared_ptr<const OuterEmbedding> shared_;

  std::vector<char> territory_;
  std::size_t territory_count_ = 0;
  std::vector<Vertex> pending_;
  CandidateSet known_;
  bool first_ = true;

  int block_ = 0;
  bool k2_ = false;
  const std::vector<Vertex>* cycle_ = nullptr;
  int m_ = 0;
  int dir_ = 1;
  int ell_ = 0, r_ = 0;
  Vertex vL_ = 0, vR_ = 0;
  std::vector<int> pos_;
  std::vector<int> attach_;

  Mode mode_ = Mode::standard;
  Vertex hub_ = 0;
  std::vector<int> comps_;
  std::size_t ci_ = 0;
  std::vector<Vertex> ws_;
  std::size_t wi_ = 0;
  int sector_s_ = 0, sector_w_ = 0;
};

inline std::unique_ptr<OuterplanarCops> outerplanar_cops(const DistanceOracle& dist) {
  return std::make_unique<OuterplanarCops>(dist);
}

}  // namespace locgame
