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

#include "locft/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace locft {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::PrepZ: return "PREPZ";
    case GateKind::PrepX: return "PREPX";
    case GateKind::H: return "H";
    case GateKind::P: return "P";
    case GateKind::CNOT: return "CNOT";
    case GateKind::Swap: return "SWAP";
    case GateKind::MeasZ: return "MEASZ";
    case GateKind::MeasX: return "MEASX";
    case GateKind::Idle: return "IDLE";
  }
  return "?";
}

int Schedule::num_events() const {
  int n = 0;
  for (const auto& s : steps) n += static_cast<int>(s.size());
  return n;
}

int Schedule::add(int step, GateKind kind, int a, int b) {
  if (step >= depth()) steps.resize(step + 1);
  GateEvent ev;
  ev.kind = kind;
  ev.a = a;
  ev.b = b;
  ev.time = step;
  ev.id = next_id++;
  steps[step].push_back(ev);
  return ev.id;
}

int Schedule::append(const Schedule& other) {
  int tshift = depth();
  int idshift = next_id;
  for (int t = 0; t < other.depth(); ++t) {
    for (GateEvent ev : other.steps[t]) {
      ev.time += tshift;
      ev.id += idshift;
      if (ev.time >= depth()) steps.resize(ev.time + 1);
      steps[ev.time].push_back(ev);
    }
  }
  next_id += other.next_id;
  return idshift;
}

bool Schedule::check_disjoint(std::string* why) const {
  std::unordered_set<int> seen;
  for (int t = 0; t < depth(); ++t) {
    seen.clear();
    for (const auto& ev : steps[t]) {
      if (!seen.insert(ev.a).second || (ev.b >= 0 && !seen.insert(ev.b).second)) {
        if (why) {
          std::ostringstream os;
          os << "step " << t << ": site used twice by " << gate_kind_name(ev.kind) << "(" << ev.a;
          if (ev.b >= 0) os << "," << ev.b;
          os << ")";
          *why = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

void Schedule::retime() {
  for (int t = 0; t < depth(); ++t)
    for (auto& ev : steps[t]) ev.time = t;
}

std::string Schedule::to_text() const {
  std::ostringstream os;
  for (const auto& step : steps) {
    auto sorted = step;
    std::sort(sorted.begin(), sorted.end(),
              [](const GateEvent& x, const GateEvent& y) { return x.a < y.a; });
    bool first = true;
    for (const auto& ev : sorted) {
      if (!first) os << ' ';
      first = false;
      os << gate_kind_name(ev.kind) << '(' << ev.a;
      if (ev.b >= 0) os << ',' << ev.b;
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

Schedule parallelize(const Schedule& in) {
  Schedule out;
  out.next_id = in.next_id;
  std::unordered_map<int, int> ready;  // site -> first free step
  in.for_each([&](const GateEvent& ev) {
    int t = ready.count(ev.a) ? ready[ev.a] : 0;
    if (ev.b >= 0 && ready.count(ev.b)) t = std::max(t, ready[ev.b]);
    if (t >= out.depth()) out.steps.resize(t + 1);
    GateEvent copy = ev;
    copy.time = t;
    out.steps[t].push_back(copy);
    ready[ev.a] = t + 1;
    if (ev.b >= 0) ready[ev.b] = t + 1;
  });
  return out;
}

}  // namespace locft
