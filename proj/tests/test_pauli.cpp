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

#include <set>

#include "doctest.h"
#include "locft/rng.hpp"
#include "locft/schedule.hpp"
#include "pauli_oracle.hpp"

using namespace locft;

namespace {

GateEvent ev(GateKind k, int a, int b = -1) {
  GateEvent e;
  e.kind = k;
  e.a = a;
  e.b = b;
  return e;
}

PauliMask mask2(int pa, int pb) {
  PauliMask m(2);
  m.set_x(0, pa & 1);
  m.set_z(0, (pa >> 1) & 1);
  m.set_x(1, pb & 1);
  m.set_z(1, (pb >> 1) & 1);
  return m;
}

PauliMask random_mask(int n, Rng& rng) {
  PauliMask m(n);
  for (int i = 0; i < n; ++i) {
    m.set_x(i, rng.below(2));
    m.set_z(i, rng.below(2));
  }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("conjugation rules match the matrix oracle for every Pauli input") {
  for (GateKind k : {GateKind::H, GateKind::P}) {
    for (int pa = 0; pa < 4; ++pa) {
      auto want = oracle::conjugate(k, pa, 0);
      PauliMask in(2);
      in.set_x(0, pa & 1);
      in.set_z(0, (pa >> 1) & 1);
      PauliMask out = propagate(ev(k, 0), in);
      CHECK(out.x(0) == (want[0] & 1));
      CHECK(out.z(0) == ((want[0] >> 1) & 1));
    }
  }
  for (GateKind k : {GateKind::CNOT, GateKind::Swap}) {
    for (int pa = 0; pa < 4; ++pa) {
      for (int pb = 0; pb < 4; ++pb) {
        auto want = oracle::conjugate(k, pa, pb);
        PauliMask out = propagate(ev(k, 0, 1), mask2(pa, pb));
        CHECK(out == mask2(want[0], want[1]));
      }
    }
  }
}

TEST_CASE("spec propagation examples") {
  PauliMask xc(2);
  xc.set_x(0, true);
  PauliMask r = propagate(ev(GateKind::CNOT, 0, 1), xc);
  CHECK(r.x(0));
  CHECK(r.x(1));
  CHECK_FALSE(r.z(0));

  PauliMask zt(2);
  zt.set_z(1, true);
  r = propagate(ev(GateKind::CNOT, 0, 1), zt);
  CHECK(r.z(0));
  CHECK(r.z(1));

  PauliMask xq(1);
  xq.set_x(0, true);
  r = propagate(ev(GateKind::H, 0), xq);
  CHECK_FALSE(r.x(0));
  CHECK(r.z(0));

  r = propagate(ev(GateKind::P, 0), xq);
  CHECK(r.x(0));
  CHECK(r.z(0));

  PauliMask zero(2);
  for (GateKind k : {GateKind::H, GateKind::P, GateKind::CNOT, GateKind::Swap, GateKind::MeasZ})
    CHECK(propagate(ev(k, 0, is_two_qubit(k) ? 1 : -1), zero).is_zero());
}

TEST_CASE("propagation is linear and swap is an involution") {
  Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 8;
    PauliMask a = random_mask(n, rng), b = random_mask(n, rng);
    GateKind kinds[] = {GateKind::H,     GateKind::P,     GateKind::CNOT,  GateKind::Swap,
                        GateKind::PrepZ, GateKind::PrepX, GateKind::MeasZ, GateKind::Idle};
    GateKind k = kinds[rng.below(8)];
    int qa = rng.below(n), qb = (qa + 1 + rng.below(n - 1)) % n;
    GateEvent e = ev(k, qa, is_two_qubit(k) ? qb : -1);
    CHECK(propagate(e, a ^ b) == (propagate(e, a) ^ propagate(e, b)));

    GateEvent sw = ev(GateKind::Swap, qa, qb);
    CHECK(propagate(sw, propagate(sw, a)) == a);
  }
}

TEST_CASE("out-of-range operand is rejected") {
  PauliMask m(3);
  CHECK_THROWS_AS(propagate(ev(GateKind::H, 5), m), std::out_of_range);
  CHECK_THROWS_AS(propagate(ev(GateKind::CNOT, 0, 3), m), std::out_of_range);
}

TEST_CASE("inject_fault honors the location distribution") {
  NoiseModel off;
  Rng rng(11);
  GateEvent cnot = ev(GateKind::CNOT, 0, 1);
  for (int i = 0; i < 100; ++i) CHECK_FALSE(inject_fault(cnot, off, rng).has_value());

  NoiseModel certain;
  certain.p_gate2 = 1.0;
  auto f = inject_fault(cnot, certain, rng);
  REQUIRE(f.has_value());
  CHECK((f->pauli_a | f->pauli_b) != 0);
}

TEST_CASE("two-qubit fault draw is uniform over the 15 non-identity Paulis") {
  // Chi-square against uniform, 3e5 draws, 14 degrees of freedom. The 1e-9
  // quantile is ~: anything below 80 is an emphatic pass.
  NoiseModel certain;
  certain.p_gate2 = 1.0;
  Rng rng(12345);
  GateEvent cnot = ev(GateKind::CNOT, 0, 1);
  const int draws = 300000;
  std::array<int, 16> counts{};
  for (int i = 0; i < draws; ++i) {
    auto f = inject_fault(cnot, certain, rng);
    REQUIRE(f.has_value());
    counts[f->pauli_a | (f->pauli_b << 2)]++;
  }
  CHECK(counts[0] == 0);
  double expected = draws / 15.0;
  double chi2 = 0;
  for (int v = 1; v < 16; ++v) chi2 += (counts[v] - expected) * (counts[v] - expected) / expected;
  CHECK(chi2 < 80.0);
}

TEST_CASE("fixed seed replays the identical fault sequence") {
  Schedule s;
  for (int i = 0; i < 50; ++i) s.add_next(GateKind::CNOT, 2 * (i % 3), 2 * (i % 3) + 1);
  NoiseModel noise;
  noise.p_gate2 = 0.3;
  noise.p_idle = 0.2;

  Rng r1(99), r2(99);
  auto a = run_circuit(s, 6, noise, r1);
  auto b = run_circuit(s, 6, noise, r2);
  CHECK(a.faults == b.faults);
  CHECK(a.final == b.final);
  CHECK(a.meas_flips == b.meas_flips);
  CHECK(!a.faults.empty());
}

TEST_CASE("noiseless run leaves a zero mask and zero flips") {
  Schedule s;
  s.add_next(GateKind::PrepZ, 0);
  s.add_next(GateKind::H, 0);
  s.add_next(GateKind::CNOT, 0, 1);
  s.add_next(GateKind::MeasZ, 0);
  s.add_next(GateKind::MeasZ, 1);
  NoiseModel off;
  Rng rng(1);
  auto r = run_circuit(s, 2, off, rng);
  CHECK(r.final.is_zero());
  for (auto& [id, flip] : r.meas_flips) CHECK(flip == 0);
}

TEST_CASE("a forced X before MeasZ flips that measurement") {
  Schedule s;
  int idle_id = s.add_next(GateKind::Idle, 0);
  int meas_id = s.add_next(GateKind::MeasZ, 0);
  ForcedTable forced;
  forced.by_event[idle_id].push_back({0, 1, 0, false});  // X on the idle location
  NoiseModel off;
  Rng rng(1);
  auto r = run_circuit(s, 1, off, rng, nullptr, &forced);
  CHECK(r.meas_flips.at(meas_id) == 1);
}

TEST_CASE("measurement reads x bits for Z basis and z bits for X basis") {
  Schedule s;
  int mz = s.add_next(GateKind::MeasZ, 0);
  int mx = s.add_next(GateKind::MeasX, 1);
  PauliMask init(2);
  init.set_z(0, true);  // phase error must not affect MeasZ
  init.set_z(1, true);
  NoiseModel off;
  Rng rng(1);
  auto r = run_circuit(s, 2, off, rng, &init);
  CHECK(r.meas_flips.at(mz) == 0);
  CHECK(r.meas_flips.at(mx) == 1);
}

TEST_CASE("idle noise is charged only to untouched live sites") {
  Schedule s;
  s.add(0, GateKind::H, 0);
  NoiseModel noise;
  noise.p_idle = 1.0;
  Rng rng(5);
  auto r = run_circuit(s, 3, noise, rng);
  CHECK_FALSE(r.final.x(0) || r.final.z(0));
  CHECK((r.final.x(1) || r.final.z(1)));
  CHECK((r.final.x(2) || r.final.z(2)));
}

TEST_CASE("batched lanes agree with scalar propagation") {
  Rng rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = 10;
    Schedule s;
    for (int g = 0; g < 40; ++g) {
      int pick = rng.below(4);
      int a = rng.below(n), b = (a + 1 + rng.below(n - 1)) % n;
      switch (pick) {
        case 0: s.add_next(GateKind::H, a); break;
        case 1: s.add_next(GateKind::P, a); break;
        case 2: s.add_next(GateKind::CNOT, a, b); break;
        default: s.add_next(GateKind::Swap, a, b); break;
      }
    }
    PauliMask init = random_mask(n, rng);

    // scalar reference
    PauliMask want = init;
    s.for_each([&](const GateEvent& e) { want = propagate(e, want); });

    // batch: load the same mask in several lanes
    FrameBatch batch(n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int lane : {0, 17, 63}) batch.load_slice(all, lane, init);
    NoiseModel off;
    Rng r2(1);
    batch.run(s, off, r2);
    for (int lane : {0, 17, 63}) {
      PauliMask got = batch.slice(all, lane);
      CHECK(got == want);
    }
  }
}

TEST_CASE("active mask freezes inactive lanes") {
  const int n = 4;
  Schedule s;
  s.add_next(GateKind::CNOT, 0, 1);
  s.add_next(GateKind::PrepZ, 2);
  FrameBatch batch(n);
  std::vector<int> all = {0, 1, 2, 3};
  PauliMask init(n);
  init.set_x(0, true);
  init.set_x(2, true);
  batch.load_slice(all, 0, init);
  batch.load_slice(all, 1, init);
  batch.set_active(uint64_t{1} << 1);  // only lane 1 active
  NoiseModel off;
  Rng rng(1);
  batch.run(s, off, rng);
  PauliMask lane0 = batch.slice(all, 0), lane1 = batch.slice(all, 1);
  CHECK(lane0 == init);          // untouched
  CHECK(lane1.x(1));             // CNOT propagated
  CHECK_FALSE(lane1.x(2));       // prep cleared
}

TEST_SUITE_END();
