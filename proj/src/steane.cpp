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

#include "locft/steane.hpp"

#include <bit>
#include <stdexcept>

namespace locft {

namespace {

constexpr Word7 word(const char* s) {
  Word7 w = 0;
  for (int i = 0; i < 7; ++i)
    if (s[i] == '1') w |= Word7(1) << i;
  return w;
}

// Reduced row echelon form over GF(2) for up to 8-bit rows. Returns the
// nonzero rows, pivots ascending.
std::vector<Word7> rref(std::vector<Word7> rows) {
  std::vector<Word7> out;
  for (int col = 0; col < 8; ++col) {
    Word7 bit = Word7(1) << col;
    size_t pivot = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot == SIZE_MAX) continue;
    Word7 prow = rows[pivot];
    rows.erase(rows.begin() + pivot);
    for (auto& r : rows)
      if (r & bit) r ^= prow;
    for (auto& r : out)
      if (r & bit) r ^= prow;
    out.push_back(prow);
  }
  return out;
}

int dot(Word7 a, Word7 b) { return std::popcount(static_cast<unsigned>(a & b)) & 1; }

}  // namespace

const std::array<Word7, 16>& steane_codewords() {
  static const std::array<Word7, 16> words = {
      // logical zero
      word("0000000"), word("1111000"), word("1100110"), word("1010101"),
      word("0011110"), word("0101101"), word("0110011"), word("1001011"),
      // logical one
      word("1111111"), word("0000111"), word("0011001"), word("0101010"),
      word("1100001"), word("1010010"), word("1001100"), word("0110100"),
  };
  return words;
}

Word7 CodeParams::syndrome(Word7 w) const {
  Word7 s = 0;
  for (int i = 0; i < 3; ++i) s |= Word7(dot(checks[i], w)) << i;
  return s;
}

CodeParams derive_parity_checks(const std::vector<Word7>& codewords) {
  std::vector<Word7> basis = rref(codewords);
  if (basis.size() != 4) throw std::invalid_argument("codeword list does not span a 4-dimensional code");

  // Null space of the code: all 7-bit words orthogonal to every basis row.
  std::vector<Word7> dual;
  for (Word7 v = 1; v < 128; ++v) {
    bool ortho = true;
    for (Word7 b : basis)
      if (dot(v, b)) {
        ortho = false;
        break;
      }
    if (ortho) dual.push_back(v);
  }
  std::vector<Word7> checks = rref(dual);
  if (checks.size() != 3) throw std::invalid_argument("dual space is not 3-dimensional");

  CodeParams p;
  for (int i = 0; i < 3; ++i) p.checks[i] = checks[i];
  p.syndrome_to_pos.fill(-1);
  for (int q = 0; q < 7; ++q) {
    Word7 s = p.syndrome(Word7(1) << q);
    if (s == 0 || p.syndrome_to_pos[s] >= 0)
      throw std::invalid_argument("single-flip syndromes are not distinct");
    p.syndrome_to_pos[s] = static_cast<int8_t>(q);
  }
  for (Word7 w : codewords)
    if (p.syndrome(w) != 0) throw std::invalid_argument("parity checks do not annihilate a codeword");
  return p;
}

const CodeParams& code() {
  static const CodeParams p =
      derive_parity_checks({steane_codewords().begin(), steane_codewords().end()});
  return p;
}

HammingResult hamming_decode(Word7 w) {
  const CodeParams& p = code();
  Word7 s = p.syndrome(w);
  if (s == 0) return {w, std::nullopt};
  int pos = p.syndrome_to_pos[s];
  return {static_cast<Word7>(w ^ (Word7(1) << pos)), pos};
}

int logical_parity(Word7 w) {
  return std::popcount(static_cast<unsigned>(hamming_decode(w).corrected)) & 1;
}

FlipDecode decode_flips(const uint8_t* bits, int level) {
  FlipDecode r;
  if (level == 0) {
    r.correction.assign(1, 0);
    r.logical = bits[0] & 1;
    return r;
  }
  int sub = pow7(level - 1);
  r.correction.assign(static_cast<size_t>(sub) * 7, 0);
  Word7 decoded = 0;
  std::array<FlipDecode, 7> subs;
  for (int j = 0; j < 7; ++j) {
    subs[j] = decode_flips(bits + j * sub, level - 1);
    std::copy(subs[j].correction.begin(), subs[j].correction.end(), r.correction.begin() + j * sub);
    if (subs[j].logical) decoded |= Word7(1) << j;
  }
  auto h = hamming_decode(decoded);
  if (h.flip_position) {
    // A level-(L-1) logical flip is undone by toggling the whole sub-block.
    int j = *h.flip_position;
    for (int i = 0; i < sub; ++i) r.correction[j * sub + i] ^= 1;
  }
  r.logical = std::popcount(static_cast<unsigned>(h.corrected)) & 1;
  return r;
}

int concat_decode(const std::vector<uint8_t>& bits, int level) {
  if (static_cast<int>(bits.size()) != pow7(level))
    throw std::invalid_argument("concat_decode: bit count is not 7^level");
  return decode_flips(bits.data(), level).logical;
}

const char* pauli_class_name(PauliClass c) {
  switch (c) {
    case PauliClass::I: return "I";
    case PauliClass::X: return "X";
    case PauliClass::Z: return "Z";
    case PauliClass::Y: return "Y";
  }
  return "?";
}

PauliClass residual_logical_class(const PauliMask& error, int level) {
  int n = pow7(level);
  if (error.n != n) throw std::invalid_argument("residual_logical_class: mask length is not 7^level");
  std::vector<uint8_t> xs(n), zs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = error.x(i);
    zs[i] = error.z(i);
  }
  int bx = decode_flips(xs.data(), level).logical;
  int bz = decode_flips(zs.data(), level).logical;
  if (bx && bz) return PauliClass::Y;
  if (bx) return PauliClass::X;
  if (bz) return PauliClass::Z;
  return PauliClass::I;
}

ConcatBlock::ConcatBlock(int L) : level(L), size(pow7(L)) {}

int ConcatBlock::index(const std::vector<int>& p) const {
  if (static_cast<int>(p.size()) != level) throw std::invalid_argument("path length must equal level");
  int idx = 0;
  for (int d : p) {
    if (d < 0 || d >= 7) throw std::invalid_argument("path digit out of range");
    idx = idx * 7 + d;
  }
  return idx;
}

std::vector<int> ConcatBlock::path(int index) const {
  if (index < 0 || index >= size) throw std::invalid_argument("index out of range");
  std::vector<int> p(level);
  for (int i = level - 1; i >= 0; --i) {
    p[i] = index % 7;
    index /= 7;
  }
  return p;
}

Schedule transversal_circuit(GateKind gate, int level, const std::vector<int>& block_a,
                             const std::vector<int>& block_b) {
  int n = pow7(level);
  if (static_cast<int>(block_a.size()) != n)
    throw std::invalid_argument("transversal_circuit: block size is not 7^level");
  if (is_two_qubit(gate) && static_cast<int>(block_b.size()) != n)
    throw std::invalid_argument("transversal_circuit: mismatched block sizes");
  Schedule s;
  for (int r = 0; r < n; ++r)
    s.add(0, gate, block_a[r], is_two_qubit(gate) ? block_b[r] : -1);
  return s;
}

const EncoderSpec& encoder_spec(bool plus_state) {
  static const auto build = [](bool plus) {
    // Generator rows of the state's word span, in canonical RREF: the span
    // of the logical-zero words, extended by the all-ones word for |+>.
    std::vector<Word7> gens;
    const auto& words = steane_codewords();
    gens.assign(words.begin(), words.begin() + 8);
    if (plus) gens.push_back(0x7f);
    std::vector<Word7> rows = rref(gens);

    EncoderSpec spec;
    spec.sub_plus.fill(0);
    for (Word7 row : rows) {
      int pivot = std::countr_zero(static_cast<unsigned>(row));
      spec.sub_plus[pivot] = 1;
      for (int q = pivot + 1; q < 7; ++q)
        if (row & (Word7(1) << q)) spec.cnots.emplace_back(pivot, q);
    }
    return spec;
  };
  static const EncoderSpec zero = build(false);
  static const EncoderSpec plus = build(true);
  return plus_state ? plus : zero;
}

}  // namespace locft
