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
#include "edgetok/vocabulary.h"

#include "edgetok/errors.h"

namespace edgetok {

Vocabulary::Vocabulary(int32_t resolution) : resolution_(resolution) {
  if (resolution < 2 || resolution > kMaxResolution) {
    throw Error("unsupported quantization resolution " +
                    std::to_string(resolution));
  }
}

TokenKind Vocabulary::KindOf(TokenId id) const {
  if (IsCoord(id)) return TokenKind::kCoord;
  switch (id - base()) {
    case 0:
      return TokenKind::kB;
    case 1:
      return TokenKind::kN;
    case 2:
      return TokenKind::kP;
    case 3:
      return TokenKind::kBos;
    case 4:
      return TokenKind::kEos;
    case 5:
      return TokenKind::kPad;
    default:
      return id < extended_size() ? TokenKind::kFaceBucket
                                  : TokenKind::kInvalid;
  }
}

std::string Vocabulary::Name(TokenId id) const {
  switch (KindOf(id)) {
    case TokenKind::kCoord:
      return std::to_string(id);
    case TokenKind::kB:
      return "B";
    case TokenKind::kN:
      return "N";
    case TokenKind::kP:
      return "P";
    case TokenKind::kBos:
      return "BOS";
    case TokenKind::kEos:
      return "EOS";
    case TokenKind::kPad:
      return "PAD";
    case TokenKind::kFaceBucket:
      return "BUCKET" + std::to_string(id - base() - kNumSpecial);
    case TokenKind::kInvalid:
      break;
  }
  return "<" + std::to_string(id) + "?>";
}

std::string Describe(const TokenSequence &seq) {
  const Vocabulary vocab(seq.resolution);
  std::string out;
  for (TokenId id : seq.ids) {
    if (!out.empty()) out += ' ';
    out += vocab.Name(id);
  }
  return out;
}

}  // namespace edgetok
