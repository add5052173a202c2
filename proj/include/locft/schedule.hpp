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
#include <iosfwd>
#include <string>
#include <vector>

namespace locft {

enum class GateKind : uint8_t {
  PrepZ,
  PrepX,
  H,
  P,
  CNOT,
  Swap,
  MeasZ,
  MeasX,
  Idle,
};

const char* gate_kind_name(GateKind k);

inline bool is_two_qubit(GateKind k) { return k == GateKind::CNOT || k == GateKind::Swap; }
inline bool is_meas(GateKind k) { return k == GateKind::MeasZ || k == GateKind::MeasX; }
inline bool is_prep(GateKind k) { return k == GateKind::PrepZ || k == GateKind::PrepX; }

// One gate application. `a` is the control for CNOT. `id` is a stable handle
// assigned at emission; measurement records and fault locations refer to it.
struct GateEvent {
  GateKind kind;
  int32_t a = -1;
  int32_t b = -1;
  int32_t time = 0;
  int32_t id = -1;

  int operand_count() const { return is_two_qubit(kind) ? 2 : 1; }
};

// A timestep-ordered gate sequence. Within a step no site may appear in two
// events; that is checked by `check_disjoint`, not enforced on append.
class Schedule {
 public:
  std::vector<std::vector<GateEvent>> steps;

  int depth() const { return static_cast<int>(steps.size()); }
  int num_events() const;
  bool empty() const { return steps.empty(); }

  // Appends an event at the given step (growing the step list as needed) and
  // assigns the next event id. Returns the id.
  int add(int step, GateKind kind, int a, int b = -1);

  // Appends an event in a fresh step after everything emitted so far.
  int add_next(GateKind kind, int a, int b = -1) { return add(depth(), kind, a, b); }

  // Appends all of `other`, shifted to start after this schedule's last step.
  // Event ids of `other` are re-assigned; returns the id offset applied.
  int append(const Schedule& other);

  // True iff no site appears twice within any single step.
  bool check_disjoint(std::string* why = nullptr) const;

  // Renumbers event times to match step indices (after manual surgery).
  void retime();

  // Line-oriented text form: one timestep per line, events as KIND(a) or
  // KIND(a,b), sorted by first operand.
  std::string to_text() const;

  void for_each(auto&& fn) const {
    for (const auto& step : steps)
      for (const auto& ev : step) fn(ev);
  }

  int next_id = 0;
};

// Greedy earliest-fit compaction: every event moves to the first step at or
// after all earlier events touching its operands. Relative order of events
// sharing an operand is preserved, so occupancy and mask semantics are
// unchanged for every fault-free input.
Schedule parallelize(const Schedule& in);

}  // namespace locft
