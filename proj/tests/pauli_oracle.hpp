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
//
// Brute-force matrix oracle for Clifford conjugation of Paulis, independent
// of the bit-twiddling rules under test: builds the gate unitary, conjugates
// the Pauli matrix, and pattern-matches the result against X^x Z^z up to
// global phase.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <stdexcept>

#include "locft/schedule.hpp"

namespace locft::oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat pauli1(int x, int z) {
  Mat X(2, 2), Z(2, 2);
  X << 0, 1, 1, 0;
  Z << 1, 0, 0, -1;
  Mat m = Mat::Identity(2, 2);
  if (x) m = X * m;
  if (z) m = m * Z;
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

inline Mat gate_matrix(GateKind k) {
  const cd i(0, 1);
  Mat m;
  switch (k) {
    case GateKind::H:
      m.resize(2, 2);
      m << 1, 1, 1, -1;
      m /= std::sqrt(2.0);
      return m;
    case GateKind::P:
      m.resize(2, 2);
      m << 1, 0, 0, i;
      return m;
    case GateKind::CNOT:
      m = Mat::Zero(4, 4);
      // basis order |ab>, a = control: |10> <-> |11>
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(3, 2) = 1;
      m(2, 3) = 1;
      return m;
    case GateKind::Swap:
      m = Mat::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      return m;
    default:
      throw std::invalid_argument("no unitary for this gate kind");
  }
}

// Matches m against phase * X^x Z^z (per factor); returns (x, z) bits packed
// as bit0 = x, bit1 = z for each qubit, or nullopt when m is not a Pauli.
inline std::optional<std::array<int, 2>> match_pauli(const Mat& m, int n_qubits) {
  const cd phases[4] = {cd(1, 0), cd(-1, 0), cd(0, 1), cd(0, -1)};
  for (int code = 0; code < (n_qubits == 1 ? 4 : 16); ++code) {
    int pa = code & 3, pb = (code >> 2) & 3;
    Mat cand = pauli1(pa & 1, (pa >> 1) & 1);
    if (n_qubits == 2) cand = kron(cand, pauli1(pb & 1, (pb >> 1) & 1));
    for (cd ph : phases) {
      if ((m - ph * cand).cwiseAbs().maxCoeff() < 1e-9) return std::array<int, 2>{pa, pb};
    }
  }
  return std::nullopt;
}

// Conjugates the Pauli given by (pa, pb) bit codes through the gate and
// returns the resulting Pauli bit codes.
inline std::array<int, 2> conjugate(GateKind k, int pa, int pb) {
  int n = is_two_qubit(k) ? 2 : 1;
  Mat p = pauli1(pa & 1, (pa >> 1) & 1);
  if (n == 2) p = kron(p, pauli1(pb & 1, (pb >> 1) & 1));
  Mat u = gate_matrix(k);
  Mat conj = u * p * u.adjoint();
  auto r = match_pauli(conj, n);
  if (!r) throw std::runtime_error("conjugation did not yield a Pauli");
  return *r;
}

}  // namespace locft::oracle
