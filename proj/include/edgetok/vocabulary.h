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
#ifndef EDGETOK_VOCABULARY_H_
#define EDGETOK_VOCABULARY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace edgetok {

using TokenId = uint32_t;

enum class TokenKind : uint8_t {
  kCoord,
  kB,  // Begins a sub-sequence; three vertices follow.
  kN,  // Steps to the face across Next(c); one vertex follows.
  kP,  // Steps to the face across Prev(c); one vertex follows.
  kBos,
  kEos,
  kPad,
  kFaceBucket,
  kInvalid,
};

// Token id layout for quantization resolution R:
//
//   0 .. R-1   coordinate values
//   R .. R+5   B, N, P, BOS, EOS, PAD
//   R+6 .. R+10  face-count buckets 0..4 (extension, bucket 4 = unconditional)
//
// The base vocabulary is R + 6 ids, 518 at R = 512.
class Vocabulary {
 public:
  static constexpr int32_t kNumSpecial = 6;
  static constexpr int32_t kNumFaceBuckets = 5;
  static constexpr int32_t kMaxResolution = 65536 - kNumSpecial -
                                            kNumFaceBuckets;

  // Throws Error unless 2 <= resolution <= kMaxResolution.
  explicit Vocabulary(int32_t resolution);

  int32_t resolution() const { return resolution_; }
  uint32_t size() const { return static_cast<uint32_t>(resolution_) + 6; }
  uint32_t extended_size() const { return size() + kNumFaceBuckets; }

  TokenId b() const { return base(); }
  TokenId n() const { return base() + 1; }
  TokenId p() const { return base() + 2; }
  TokenId bos() const { return base() + 3; }
  TokenId eos() const { return base() + 4; }
  TokenId pad() const { return base() + 5; }
  TokenId face_bucket(int32_t k) const {
    return base() + kNumSpecial + static_cast<TokenId>(k);
  }

  bool IsCoord(TokenId id) const {
    return id < static_cast<TokenId>(resolution_);
  }
  TokenKind KindOf(TokenId id) const;

  // "B", "N", "BOS", "17", "BUCKET2", ...
  std::string Name(TokenId id) const;

 private:
  TokenId base() const { return static_cast<TokenId>(resolution_); }

  int32_t resolution_;
};

// A tokenized mesh. Coordinates are stored by value, so the sequence is only
// meaningful together with its resolution.
struct TokenSequence {
  int32_t resolution = 512;
  std::vector<TokenId> ids;

  friend bool operator==(const TokenSequence &,
                         const TokenSequence &) = default;
};

// Space-separated token names, for diagnostics.
std::string Describe(const TokenSequence &seq);

}  // namespace edgetok

#endif  // EDGETOK_VOCABULARY_H_
