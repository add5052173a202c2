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

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "locft/rng.hpp"
#include "locft/schedule.hpp"

namespace locft {

// Tracked X/Z error pattern on n qubits. Bit i of x set means a bit-flip
// error on qubit i; both bits set is a Y. Global phase is not tracked and
// the all-zero mask is the unique no-error state.
struct PauliMask {
  int n = 0;
  std::vector<uint64_t> xw, zw;

  PauliMask() = default;
  explicit PauliMask(int n_qubits) : n(n_qubits), xw((n_qubits + 63) / 64, 0), zw((n_qubits + 63) / 64, 0) {}

  bool x(int i) const { return (xw[i >> 6] >> (i & 63)) & 1; }
  bool z(int i) const { return (zw[i >> 6] >> (i & 63)) & 1; }
  void set_x(int i, bool v) { v ? xw[i >> 6] |= uint64_t{1} << (i & 63) : xw[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void set_z(int i, bool v) { v ? zw[i >> 6] |= uint64_t{1} << (i & 63) : zw[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void toggle_x(int i) { xw[i >> 6] ^= uint64_t{1} << (i & 63); }
  void toggle_z(int i) { zw[i >> 6] ^= uint64_t{1} << (i & 63); }

  bool is_zero() const;
  int weight() const;  // qubits with any error
  PauliMask operator^(const PauliMask& o) const;
  bool operator==(const PauliMask& o) const { return n == o.n && xw == o.xw && zw == o.zw; }
};

// Conjugates the mask through one ideal gate. CNOT copies X forward and Z
// backward, H exchanges X and Z, P maps X to Y, Swap exchanges both bits,
// Prep clears its operand, Meas and Idle leave the mask unchanged.
// Throws std::out_of_range for operand indices beyond the mask.
PauliMask propagate(const GateEvent& gate, const PauliMask& error);

// Stochastic Pauli noise rates per location kind. A faulty one-qubit gate
// draws uniformly from {X,Y,Z}; a faulty two-qubit gate uniformly from the
// 15 non-identity pairs; a faulty measurement flips the reported bit; a
// faulty preparation flips in the conjugate-sensitive basis.
struct NoiseModel {
  double p_gate1 = 0, p_gate2 = 0, p_prep = 0, p_meas = 0, p_idle = 0;

  double rate_for(GateKind k) const;
  bool all_zero() const { return p_gate1 == 0 && p_gate2 == 0 && p_prep == 0 && p_meas == 0 && p_idle == 0; }
};

struct FaultRecord {
  int32_t time = 0;
  int32_t event_id = -1;  // -1 for idle faults
  int32_t site_a = -1, site_b = -1;
  uint8_t pauli_a = 0, pauli_b = 0;  // bit0 = X, bit1 = Z
  bool flip = false;                 // measurement or preparation flip

  bool operator==(const FaultRecord&) const = default;
};

// Draws the fault (if any) for a single location, per the NoiseModel
// distribution. Deterministic given the rng state.
std::optional<FaultRecord> inject_fault(const GateEvent& gate, const NoiseModel& noise, Rng& rng);

// Forced deterministic faults for exhaustive single-fault enumeration.
// Gate faults are keyed by global event id; idle faults by (step, site).
struct ForcedFault {
  int trial = 0;
  uint8_t pauli_a = 0, pauli_b = 0;
  bool flip = false;
};
struct ForcedTable {
  std::unordered_map<int64_t, std::vector<ForcedFault>> by_event;            // key: global event id
  std::unordered_map<int64_t, std::vector<ForcedFault>> by_idle;             // key: step * kStepKey + site
  static constexpr int64_t kStepKey = int64_t{1} << 32;
  bool empty() const { return by_event.empty() && by_idle.empty(); }
};

// 64 Monte Carlo trials simulated in parallel, one bit lane per trial.
// The active mask restricts every state change to a subset of lanes so a
// rejected-ancilla segment can be replayed with fresh noise for just the
// trials that rejected, while the other lanes' state and records stay put.
class FrameBatch {
 public:
  explicit FrameBatch(int n_sites);

  int n_sites() const { return n_; }
  uint64_t active() const { return active_; }
  void set_active(uint64_t m) { active_ = m; }

  void clear();

  uint64_t x_word(int site) const { return x_[site]; }
  uint64_t z_word(int site) const { return z_[site]; }
  void xor_x(int site, uint64_t w) { x_[site] ^= w; }
  void xor_z(int site, uint64_t w) { z_[site] ^= w; }

  bool live(int site) const { return live_[site]; }
  void set_live(int site, bool v);
  const std::vector<int32_t>& live_sites() const { return live_list_; }

  // Extracts one trial's mask restricted to the given sites, in list order.
  PauliMask slice(const std::vector<int>& sites, int trial) const;
  void load_slice(const std::vector<int>& sites, int trial, const PauliMask& m);

  // Runs a schedule: per event, ideal conjugation then fault injection; per
  // timestep, idle noise on live sites with no event that step. Measurement
  // flip words land in records[id_offset + event.id]. The step clock keeps
  // running across calls so idle-fault forcing stays globally addressable.
  struct RunHooks {
    std::vector<uint64_t>* records = nullptr;
    int id_offset = 0;
    std::vector<FaultRecord>* faults = nullptr;  // collected for lane `fault_lane`
    int fault_lane = 0;
    const ForcedTable* forced = nullptr;
  };
  void run(const Schedule& sched, const NoiseModel& noise, Rng& rng, const RunHooks& hooks = {});

  int64_t step_clock() const { return step_clock_; }
  void reset_step_clock() { step_clock_ = 0; }

 private:
  void apply_gate(const GateEvent& ev, uint64_t act);
  uint32_t fault_1q(int site, uint64_t hits, Rng& rng, int want_lane);
  uint32_t fault_2q(int a, int b, uint64_t hits, Rng& rng, int want_lane);

  int n_;
  std::vector<uint64_t> x_, z_;
  uint64_t active_ = ~uint64_t{0};
  std::vector<uint8_t> live_;
  std::vector<int32_t> live_list_;
  std::vector<int32_t> live_index_;  // site -> position in live_list_, -1 if dead
  std::vector<int64_t> touched_;     // site -> last step it saw an event
  int64_t step_clock_ = 0;
};

// Single-trial convenience wrapper with the documented return bundle:
// final mask, measurement flip bits keyed by event id, and fault records.
struct RunResult {
  PauliMask final;
  std::unordered_map<int, int> meas_flips;
  std::vector<FaultRecord> faults;
};
RunResult run_circuit(const Schedule& sched, int n_sites, const NoiseModel& noise, Rng& rng,
                      const PauliMask* initial = nullptr, const ForcedTable* forced = nullptr);

}  // namespace locft
