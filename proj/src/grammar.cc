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
#include "edgetok/grammar.h"

#include "edgetok/errors.h"

namespace edgetok {

bool GrammarState::TryAdvance(TokenId id, const Vocabulary &vocab) {
  const TokenKind kind = vocab.KindOf(id);
  switch (phase_) {
    case Phase::kExpectBos:
      if (kind != TokenKind::kBos) return false;
      phase_ = Phase::kExpectB;
      break;
    case Phase::kExpectB:
      if (kind != TokenKind::kB) return false;
      ++num_b_;
      phase_ = Phase::kInVertexRun;
      remaining_ = 9;
      break;
    case Phase::kInVertexRun:
      if (kind != TokenKind::kCoord) return false;
      if (--remaining_ == 0) phase_ = Phase::kExpectFaceTypeOrEnd;
      break;
    case Phase::kExpectFaceTypeOrEnd:
      switch (kind) {
        case TokenKind::kB:
          ++num_b_;
          phase_ = Phase::kInVertexRun;
          remaining_ = 9;
          break;
        case TokenKind::kN:
          ++num_n_;
          phase_ = Phase::kInVertexRun;
          remaining_ = 3;
          break;
        case TokenKind::kP:
          ++num_p_;
          phase_ = Phase::kInVertexRun;
          remaining_ = 3;
          break;
        case TokenKind::kEos:
          phase_ = Phase::kAccepted;
          break;
        default:
          return false;
      }
      break;
    case Phase::kAccepted:
      return false;
  }
  ++position_;
  return true;
}

bool AllowedTokens::Contains(TokenId id, const Vocabulary &vocab) const {
  switch (vocab.KindOf(id)) {
    case TokenKind::kCoord:
      return coords;
    case TokenKind::kB:
      return b;
    case TokenKind::kN:
      return n;
    case TokenKind::kP:
      return p;
    case TokenKind::kBos:
      return bos;
    case TokenKind::kEos:
      return eos;
    default:
      return false;
  }
}

std::string AllowedTokens::ToString() const {
  std::string out;
  const auto add = [&out](bool present, const char *name) {
    if (!present) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(bos, "BOS");
  add(b, "B");
  add(n, "N");
  add(p, "P");
  add(eos, "EOS");
  add(coords, "coordinate");
  return "{" + out + "}";
}

GrammarState InitialState() { return GrammarState(); }

AllowedTokens Allowed(const GrammarState &state) {
  AllowedTokens allowed;
  switch (state.phase()) {
    case GrammarState::Phase::kExpectBos:
      allowed.bos = true;
      break;
    case GrammarState::Phase::kExpectB:
      allowed.b = true;
      break;
    case GrammarState::Phase::kInVertexRun:
      allowed.coords = true;
      break;
    case GrammarState::Phase::kExpectFaceTypeOrEnd:
      allowed.b = allowed.n = allowed.p = allowed.eos = true;
      break;
    case GrammarState::Phase::kAccepted:
      break;
  }
  return allowed;
}

GrammarState Advance(const GrammarState &state, TokenId id,
                     const Vocabulary &vocab) {
  GrammarState next = state;
  if (!next.TryAdvance(id, vocab)) {
    throw GrammarError("illegal token " + vocab.Name(id) + " at position " +
                           std::to_string(state.position()) + ", expected " +
                           Allowed(state).ToString(),
                       state.position());
  }
  return next;
}

std::vector<bool> AllowedNext(const GrammarState &state,
                              const Vocabulary &vocab) {
  const AllowedTokens allowed = Allowed(state);
  std::vector<bool> mask(vocab.size(), false);
  if (allowed.coords) {
    for (int32_t i = 0; i < vocab.resolution(); ++i) mask[i] = true;
  }
  mask[vocab.b()] = allowed.b;
  mask[vocab.n()] = allowed.n;
  mask[vocab.p()] = allowed.p;
  mask[vocab.bos()] = allowed.bos;
  mask[vocab.eos()] = allowed.eos;
  return mask;
}

std::vector<TokenId> AllowedIds(const GrammarState &state,
                                const Vocabulary &vocab) {
  const std::vector<bool> mask = AllowedNext(state, vocab);
  std::vector<TokenId> ids;
  for (TokenId id = 0; id < mask.size(); ++id) {
    if (mask[id]) ids.push_back(id);
  }
  return ids;
}

ValidationResult Validate(std::span<const TokenId> ids,
                          const Vocabulary &vocab) {
  ValidationResult result;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!result.state.TryAdvance(ids[i], vocab)) {
      result.violation_index = i;
      result.expected = Allowed(result.state);
      return result;
    }
  }
  if (result.state.phase() != GrammarState::Phase::kAccepted) {
    result.violation_index = ids.size();
    result.expected = Allowed(result.state);
    return result;
  }
  result.ok = true;
  return result;
}

GrammarState ConsumePrefix(std::span<const TokenId> ids,
                           const Vocabulary &vocab) {
  GrammarState state;
  for (TokenId id : ids) state = Advance(state, id, vocab);
  return state;
}

int32_t FaceCountBucket(int64_t face_count) {
  if (face_count <= 0) throw Error("face count bucket needs at least 1 face");
  if (face_count <= 1000) return 0;
  if (face_count <= 2000) return 1;
  if (face_count <= 4000) return 2;
  return 3;
}

std::vector<uint8_t> PackMask(const std::vector<bool> &mask) {
  std::vector<uint8_t> bytes((mask.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) bytes[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
  }
  return bytes;
}

}  // namespace edgetok
