// Copyright 2026 The locft developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "locft/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace locft {

bool PauliMask::is_zero() const {
  for (auto w : xw)
    if (w) return false;
  for (auto w : zw)
    if (w) return false;
  return true;
}

int PauliMask::weight() const {
  int c = 0;
  for (size_t i = 0; i < xw.size(); ++i) c += std::popcount(xw[i] | zw[i]);
  return c;
}

PauliMask PauliMask::operator^(const PauliMask& o) const {
  PauliMask r(n);
  for (size_t i = 0; i < xw.size(); ++i) {
    r.xw[i] = xw[i] ^ o.xw[i];
    r.zw[i] = zw[i] ^ o.zw[i];
  }
  return r;
}

PauliMask propagate(const GateEvent& gate, const PauliMask& error) {
  auto check = [&](int q) {
    if (q < 0 || q >= error.n) throw std::out_of_range("propagate: operand index out of range");
  };
  check(gate.a);
  if (is_two_qubit(gate.kind)) check(gate.b);

  PauliMask m = error;
  switch (gate.kind) {
    case GateKind::CNOT: {
      // X on the control propagates forward, Z on the target backward.
      m.set_x(gate.b, m.x(gate.b) ^ m.x(gate.a));
      m.set_z(gate.a, m.z(gate.a) ^ m.z(gate.b));
      break;
    }
    case GateKind::H: {
      bool x = m.x(gate.a), z = m.z(gate.a);
      m.set_x(gate.a, z);
      m.set_z(gate.a, x);
      break;
    }
    case GateKind::P: {
      m.set_z(gate.a, m.z(gate.a) ^ m.x(gate.a));
      break;
    }
    case GateKind::Swap: {
      bool xa = m.x(gate.a), za = m.z(gate.a);
      m.set_x(gate.a, m.x(gate.b));
      m.set_z(gate.a, m.z(gate.b));
      m.set_x(gate.b, xa);
      m.set_z(gate.b, za);
      break;
    }
    case GateKind::PrepZ:
    case GateKind::PrepX: {
      m.set_x(gate.a, false);
      m.set_z(gate.a, false);
      break;
    }
    case GateKind::MeasZ:
    case GateKind::MeasX:
    case GateKind::Idle:
      break;
  }
  return m;
}

double NoiseModel::rate_for(GateKind k) const {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::Swap: return p_gate2;
    case GateKind::H:
    case GateKind::P: return p_gate1;
    case GateKind::PrepZ:
    case GateKind::PrepX: return p_prep;
    case GateKind::MeasZ:
    case GateKind::MeasX: return p_meas;
    case GateKind::Idle: return p_idle;
  }
  return 0;
}

std::optional<FaultRecord> inject_fault(const GateEvent& gate, const NoiseModel& noise, Rng& rng) {
  double p = noise.rate_for(gate.kind);
  if (p <= 0 || rng.u01() >= p) return std::nullopt;
  FaultRecord f;
  f.time = gate.time;
  f.event_id = gate.id;
  f.site_a = gate.a;
  f.site_b = gate.b;
  switch (gate.kind) {
    case GateKind::CNOT:
    case GateKind::Swap: {
      uint32_t v = rng.below(15) + 1;
      f.pauli_a = v & 3;
      f.pauli_b = (v >> 2) & 3;
      break;
    }
    case GateKind::H:
    case GateKind::P:
    case GateKind::Idle: {
      f.pauli_a = static_cast<uint8_t>(rng.below(3) + 1);
      break;
    }
    case GateKind::PrepZ: {
      f.pauli_a = 1;  // bit flip in the Z basis
      f.flip = true;
      break;
    }
    case GateKind::PrepX: {
      f.pauli_a = 2;  // phase flip in the X basis
      f.flip = true;
      break;
    }
    case GateKind::MeasZ:
    case GateKind::MeasX: {
      f.flip = true;
      break;
    }
  }
  return f;
}

FrameBatch::FrameBatch(int n_sites)
    : n_(n_sites),
      x_(n_sites, 0),
      z_(n_sites, 0),
      live_(n_sites, 0),
      live_index_(n_sites, -1),
      touched_(n_sites, -1) {}

void FrameBatch::clear() {
  std::fill(x_.begin(), x_.end(), 0);
  std::fill(z_.begin(), z_.end(), 0);
  std::fill(live_.begin(), live_.end(), 0);
  std::fill(live_index_.begin(), live_index_.end(), -1);
  std::fill(touched_.begin(), touched_.end(), -1);
  live_list_.clear();
  active_ = ~uint64_t{0};
  step_clock_ = 0;
}

void FrameBatch::set_live(int site, bool v) {
  if (v == static_cast<bool>(live_[site])) return;
  live_[site] = v;
  if (v) {
    live_index_[site] = static_cast<int32_t>(live_list_.size());
    live_list_.push_back(site);
  } else {
    int32_t pos = live_index_[site];
    int32_t last = live_list_.back();
    live_list_[pos] = last;
    live_index_[last] = pos;
    live_list_.pop_back();
    live_index_[site] = -1;
  }
}

PauliMask FrameBatch::slice(const std::vector<int>& sites, int trial) const {
  PauliMask m(static_cast<int>(sites.size()));
  for (size_t i = 0; i < sites.size(); ++i) {
    m.set_x(static_cast<int>(i), (x_[sites[i]] >> trial) & 1);
    m.set_z(static_cast<int>(i), (z_[sites[i]] >> trial) & 1);
  }
  return m;
}

void FrameBatch::load_slice(const std::vector<int>& sites, int trial, const PauliMask& m) {
  uint64_t bit = uint64_t{1} << trial;
  for (size_t i = 0; i < sites.size(); ++i) {
    x_[sites[i]] = (x_[sites[i]] & ~bit) | (m.x(static_cast<int>(i)) ? bit : 0);
    z_[sites[i]] = (z_[sites[i]] & ~bit) | (m.z(static_cast<int>(i)) ? bit : 0);
  }
}

void FrameBatch::apply_gate(const GateEvent& ev, uint64_t act) {
  switch (ev.kind) {
    case GateKind::CNOT: {
      x_[ev.b] ^= x_[ev.a] & act;
      z_[ev.a] ^= z_[ev.b] & act;
      break;
    }
    case GateKind::H: {
      uint64_t d = (x_[ev.a] ^ z_[ev.a]) & act;
      x_[ev.a] ^= d;
      z_[ev.a] ^= d;
      break;
    }
    case GateKind::P: {
      z_[ev.a] ^= x_[ev.a] & act;
      break;
    }
    case GateKind::Swap: {
      uint64_t dx = (x_[ev.a] ^ x_[ev.b]) & act;
      uint64_t dz = (z_[ev.a] ^ z_[ev.b]) & act;
      x_[ev.a] ^= dx;
      x_[ev.b] ^= dx;
      z_[ev.a] ^= dz;
      z_[ev.b] ^= dz;
      break;
    }
    case GateKind::PrepZ:
    case GateKind::PrepX: {
      x_[ev.a] &= ~act;
      z_[ev.a] &= ~act;
      set_live(ev.a, true);
      break;
    }
    case GateKind::MeasZ:
    case GateKind::MeasX:
    case GateKind::Idle:
      break;
  }
}

uint32_t FrameBatch::fault_1q(int site, uint64_t hits, Rng& rng, int want_lane) {
  uint32_t lane_draw = 0;
  for (uint64_t w = hits; w; w &= w - 1) {
    int t = std::countr_zero(w);
    uint32_t v = rng.below(3) + 1;
    if (t == want_lane) lane_draw = v;
    if (v & 1) x_[site] ^= uint64_t{1} << t;
    if (v & 2) z_[site] ^= uint64_t{1} << t;
  }
  return lane_draw;
}

uint32_t FrameBatch::fault_2q(int a, int b, uint64_t hits, Rng& rng, int want_lane) {
  uint32_t lane_draw = 0;
  for (uint64_t w = hits; w; w &= w - 1) {
    int t = std::countr_zero(w);
    uint32_t v = rng.below(15) + 1;
    if (t == want_lane) lane_draw = v;
    uint64_t bit = uint64_t{1} << t;
    if (v & 1) x_[a] ^= bit;
    if (v & 2) z_[a] ^= bit;
    if (v & 4) x_[b] ^= bit;
    if (v & 8) z_[b] ^= bit;
  }
  return lane_draw;
}

void FrameBatch::run(const Schedule& sched, const NoiseModel& noise, Rng& rng, const RunHooks& hooks) {
  const bool forcing = hooks.forced && !hooks.forced->empty();
  const uint64_t lane_bit = hooks.faults ? (uint64_t{1} << hooks.fault_lane) : 0;

  for (const auto& step : sched.steps) {
    const int64_t now = step_clock_;
    for (const auto& ev : step) {
      touched_[ev.a] = now;
      if (ev.b >= 0) touched_[ev.b] = now;

      uint64_t meas_flips = 0;
      if (ev.kind == GateKind::MeasZ)
        meas_flips = x_[ev.a];
      else if (ev.kind == GateKind::MeasX)
        meas_flips = z_[ev.a];

      apply_gate(ev, active_);

      // Fault after the ideal gate action.
      double p = noise.rate_for(ev.kind);
      uint64_t hits = p > 0 ? (rng.bernoulli_word(p) & active_) : 0;
      uint32_t lane_draw = 0;
      const int want_lane = hooks.faults ? hooks.fault_lane : -1;
      switch (ev.kind) {
        case GateKind::CNOT:
        case GateKind::Swap:
          if (hits) lane_draw = fault_2q(ev.a, ev.b, hits, rng, want_lane);
          break;
        case GateKind::H:
        case GateKind::P:
        case GateKind::Idle:
          if (hits) lane_draw = fault_1q(ev.a, hits, rng, want_lane);
          break;
        case GateKind::PrepZ:
          x_[ev.a] ^= hits;
          lane_draw = 1;
          break;
        case GateKind::PrepX:
          z_[ev.a] ^= hits;
          lane_draw = 2;
          break;
        case GateKind::MeasZ:
        case GateKind::MeasX:
          meas_flips ^= hits;
          break;
      }
      if (hits && hooks.faults && (hits & lane_bit)) {
        FaultRecord f;
        f.time = static_cast<int32_t>(now);
        f.event_id = hooks.id_offset + ev.id;
        f.site_a = ev.a;
        f.site_b = ev.b;
        f.pauli_a = lane_draw & 3;
        f.pauli_b = (lane_draw >> 2) & 3;
        f.flip = is_meas(ev.kind) || is_prep(ev.kind);
        hooks.faults->push_back(f);
      }

      if (forcing) {
        auto it = hooks.forced->by_event.find(hooks.id_offset + ev.id);
        if (it != hooks.forced->by_event.end()) {
          for (const auto& f : it->second) {
            uint64_t bit = uint64_t{1} << f.trial;
            if (!(bit & active_)) continue;
            if (is_meas(ev.kind) && f.flip) {
              meas_flips ^= bit;
            } else if (ev.kind == GateKind::PrepZ && f.flip) {
              x_[ev.a] ^= bit;
            } else if (ev.kind == GateKind::PrepX && f.flip) {
              z_[ev.a] ^= bit;
            } else {
              if (f.pauli_a & 1) x_[ev.a] ^= bit;
              if (f.pauli_a & 2) z_[ev.a] ^= bit;
              if (ev.b >= 0) {
                if (f.pauli_b & 1) x_[ev.b] ^= bit;
                if (f.pauli_b & 2) z_[ev.b] ^= bit;
              }
            }
          }
        }
      }

      if (is_meas(ev.kind)) {
        if (hooks.records) {
          uint64_t& rec = (*hooks.records)[hooks.id_offset + ev.id];
          rec = (rec & ~active_) | (meas_flips & active_);
        }
        set_live(ev.a, false);
      }
    }

    // Idle noise on live sites with no event this step.
    if (noise.p_idle > 0 && !live_list_.empty()) {
      const uint64_t grid = static_cast<uint64_t>(live_list_.size()) * 64;
      uint64_t pos = rng.geometric_skip(noise.p_idle);
      while (pos < grid) {
        int site = live_list_[pos >> 6];
        uint64_t bit = uint64_t{1} << (pos & 63);
        if (touched_[site] != now && (bit & active_)) {
          uint32_t v = rng.below(3) + 1;
          if (v & 1) x_[site] ^= bit;
          if (v & 2) z_[site] ^= bit;
          if (hooks.faults && (bit & lane_bit)) {
            FaultRecord f;
            f.time = static_cast<int32_t>(now);
            f.site_a = site;
            f.pauli_a = static_cast<uint8_t>(v);
            hooks.faults->push_back(f);
          }
        }
        uint64_t j = rng.geometric_skip(noise.p_idle);
        if (j >= grid - pos) break;
        pos += 1 + j;
      }
    }
    if (forcing && !hooks.forced->by_idle.empty()) {
      for (int site : live_list_) {
        if (touched_[site] == now) continue;
        auto it = hooks.forced->by_idle.find(now * ForcedTable::kStepKey + site);
        if (it == hooks.forced->by_idle.end()) continue;
        for (const auto& f : it->second) {
          uint64_t bit = uint64_t{1} << f.trial;
          if (!(bit & active_)) continue;
          if (f.pauli_a & 1) x_[site] ^= bit;
          if (f.pauli_a & 2) z_[site] ^= bit;
        }
      }
    }
    ++step_clock_;
  }
}

RunResult run_circuit(const Schedule& sched, int n_sites, const NoiseModel& noise, Rng& rng,
                      const PauliMask* initial, const ForcedTable* forced) {
  FrameBatch batch(n_sites);
  batch.set_active(1);
  for (int s = 0; s < n_sites; ++s) batch.set_live(s, true);
  if (initial) {
    std::vector<int> all(n_sites);
    for (int s = 0; s < n_sites; ++s) all[s] = s;
    batch.load_slice(all, 0, *initial);
  }

  std::vector<uint64_t> records(sched.next_id, 0);
  RunResult out;
  FrameBatch::RunHooks hooks;
  hooks.records = &records;
  hooks.faults = &out.faults;
  hooks.fault_lane = 0;
  hooks.forced = forced;
  batch.run(sched, noise, rng, hooks);

  std::vector<int> all(n_sites);
  for (int s = 0; s < n_sites; ++s) all[s] = s;
  out.final = batch.slice(all, 0);
  sched.for_each([&](const GateEvent& ev) {
    if (is_meas(ev.kind)) out.meas_flips[ev.id] = static_cast<int>(records[ev.id] & 1);
  });
  return out;
}

}  // namespace locft
