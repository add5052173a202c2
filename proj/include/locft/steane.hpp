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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "locft/pauli.hpp"
#include "locft/schedule.hpp"

namespace locft {

// Seven-bit words as bitmasks, bit i = qubit i, qubit 0 being the leftmost
// bit of the written-out word.
using Word7 = uint8_t;

// The sixteen codewords of the seven-qubit code: first the eight words of
// the logical zero superposition (even parity), then the eight of logical
// one (odd parity).
const std::array<Word7, 16>& steane_codewords();

struct CodeParams {
  static constexpr int n = 7;
  std::array<Word7, 3> checks;           // rank-3 parity checks, canonical RREF rows
  Word7 logical_parity_vector = 0x7f;    // all-ones
  std::array<int8_t, 8> syndrome_to_pos; // syndrome value -> flip position, -1 for 0

  Word7 syndrome(Word7 w) const;
};

// Derives the canonical parity-check matrix whose kernel is exactly the
// span of the given 16 words. Throws std::invalid_argument when the word
// list does not span a 4-dimensional code.
CodeParams derive_parity_checks(const std::vector<Word7>& codewords);

// The code object every decoder below uses, derived once from the listed
// codewords.
const CodeParams& code();

// Classical single-error correction. Returns the corrected word and the
// flipped position (std::nullopt when the syndrome is already zero).
struct HammingResult {
  Word7 corrected;
  std::optional<int> flip_position;
};
HammingResult hamming_decode(Word7 word);

// Parity of the corrected word; correction precedes the parity read.
int logical_parity(Word7 word);

// Recursive hard-decision decode of a 7^L-bit measurement record: each
// sub-block decodes to a bit, then the seven bits decode as one word.
int concat_decode(const std::vector<uint8_t>& bits, int level);

// Flip-record decoding with the inferred corrections made explicit: the
// returned correction holds, per position, the flips an ideal decoder would
// apply (level-k corrections enter as whole-sub-block toggles), and
// `logical` is the residual logical bit after all corrections.
struct FlipDecode {
  std::vector<uint8_t> correction;
  int logical = 0;
};
FlipDecode decode_flips(const uint8_t* bits, int level);

enum class PauliClass : uint8_t { I, X, Z, Y };
const char* pauli_class_name(PauliClass c);

// Classifies the residual error on a 7^L-qubit block by ideal recursive
// decoding of the X and Z patterns independently (CSS structure).
PauliClass residual_logical_class(const PauliMask& error, int level);

// L-level concatenation indexing: sub-block path <-> physical index.
struct ConcatBlock {
  int level = 0;
  int size = 1;

  explicit ConcatBlock(int L);
  int index(const std::vector<int>& path) const;
  std::vector<int> path(int index) const;
};

inline int pow7(int level) {
  int s = 1;
  for (int i = 0; i < level; ++i) s *= 7;
  return s;
}

// Emits the 7^L parallel events of one transversal logical gate, pairing
// the r-th qubit of each operand block. Blocks are given as site lists in
// block order. Throws std::invalid_argument on size mismatch.
Schedule transversal_circuit(GateKind gate, int level, const std::vector<int>& block_a,
                             const std::vector<int>& block_b = {});

// Fixed deterministic encoder for a logical basis state at one level: which
// of the seven sub-blocks seed in the conjugate basis, and the sub-block
// CNOT stages, derived from the canonical generator matrix.
struct EncoderSpec {
  std::array<uint8_t, 7> sub_plus;            // 1 = prepare this sub-block as |+>
  std::vector<std::pair<int, int>> cnots;     // (control sub-block, target sub-block)
};
const EncoderSpec& encoder_spec(bool plus_state);

}  // namespace locft
