// Copyright 2026 The EdgeTok Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef EDGETOK_GRAMMAR_H_
#define EDGETOK_GRAMMAR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edgetok/vocabulary.h"

namespace edgetok {

// Prefix automaton for token sequences. The accepted language is
//
//   BOS B c^9 ( (N|P) c^3 | B c^9 )* EOS
//
// i.e. BOS must be followed by B, B by nine coordinates, N and P by three,
// and any complete vertex run by one of N, P, B or EOS. PAD and face-count
// bucket ids are never accepted. There is no length bound.
class GrammarState {
 public:
  enum class Phase : uint8_t {
    kExpectBos,
    kExpectB,
    kInVertexRun,
    kExpectFaceTypeOrEnd,
    kAccepted,
  };

  GrammarState() = default;

  Phase phase() const { return phase_; }
  // Coordinates still owed to the current vertex run (1..9), 0 otherwise.
  int32_t remaining() const { return remaining_; }
  int64_t num_b() const { return num_b_; }
  int64_t num_n() const { return num_n_; }
  int64_t num_p() const { return num_p_; }
  int64_t faces() const { return num_b_ + num_n_ + num_p_; }
  // Number of tokens consumed so far.
  std::size_t position() const { return position_; }

  // Consumes |id|; returns false and leaves the state unchanged if the
  // grammar does not allow it here.
  bool TryAdvance(TokenId id, const Vocabulary &vocab);

  friend bool operator==(const GrammarState &, const GrammarState &) = default;

 private:
  Phase phase_ = Phase::kExpectBos;
  int32_t remaining_ = 0;
  int64_t num_b_ = 0;
  int64_t num_n_ = 0;
  int64_t num_p_ = 0;
  std::size_t position_ = 0;
};

// Token classes legal next from a state.
struct AllowedTokens {
  bool coords = false;
  bool b = false;
  bool n = false;
  bool p = false;
  bool bos = false;
  bool eos = false;

  bool empty() const { return !(coords || b || n || p || bos || eos); }
  bool Contains(TokenId id, const Vocabulary &vocab) const;
  // "{B}", "{coordinate}", "{B, N, P, EOS}", "{}".
  std::string ToString() const;
};

GrammarState InitialState();

// Returns the successor state. Throws GrammarError naming the expected set,
// the offending token and its position.
GrammarState Advance(const GrammarState &state, TokenId id,
                     const Vocabulary &vocab);

AllowedTokens Allowed(const GrammarState &state);

// Mask over the base vocabulary (size R + 6): true for every id Advance
// would accept.
std::vector<bool> AllowedNext(const GrammarState &state,
                              const Vocabulary &vocab);

// Ascending list of the ids set in AllowedNext.
std::vector<TokenId> AllowedIds(const GrammarState &state,
                                const Vocabulary &vocab);

struct ValidationResult {
  bool ok = false;
  // First offending index, or the sequence length when the input ends
  // before EOS.
  std::size_t violation_index = 0;
  AllowedTokens expected;
  // State reached by the longest valid prefix.
  GrammarState state;
};

ValidationResult Validate(std::span<const TokenId> ids,
                          const Vocabulary &vocab);

// Drives the automaton over a prefix; throws GrammarError on the first
// illegal token. Used to build next-token masks.
GrammarState ConsumePrefix(std::span<const TokenId> ids,
                           const Vocabulary &vocab);

// Face-count conditioning bucket: 0 for n <= 1000, 1 up to 2000, 2 up to
// 4000, 3 above. Bucket 4 is the unconditional token and is never returned.
// Throws Error for n == 0.
int32_t FaceCountBucket(int64_t face_count);

// Packs |mask| into ceil(V / 8) bytes, bit i of byte k holding id 8k + i.
std::vector<uint8_t> PackMask(const std::vector<bool> &mask);

}  // namespace edgetok

#endif  // EDGETOK_GRAMMAR_H_
