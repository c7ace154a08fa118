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
#ifndef EDGETOK_TOKEN_FILE_H_
#define EDGETOK_TOKEN_FILE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "edgetok/vocabulary.h"

namespace edgetok {

// ERTK container, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "ERTK"
//   4       1     version; low 7 bits = 1, high bit = ids may use the
//                 face-count bucket extension
//   5       2     resolution (uint16)
//   7       4     token count (uint32)
//   11      2n    token ids (uint16 each)
constexpr uint8_t kTokenFileVersion = 1;
constexpr uint8_t kTokenFileExtensionFlag = 0x80;
constexpr std::size_t kTokenFileHeaderSize = 11;

// Throws IoError if an id does not fit the (optionally extended) vocabulary.
std::vector<uint8_t> EncodeTokenFile(const TokenSequence &seq,
                                     bool extended = false);

// Throws IoError on a bad magic, unknown version, truncated payload, trailing
// bytes or an id outside the vocabulary.
TokenSequence DecodeTokenFile(std::span<const uint8_t> bytes);

void WriteTokenFile(const std::filesystem::path &path, const TokenSequence &seq,
                    bool extended = false);
TokenSequence ReadTokenFile(const std::filesystem::path &path);

}  // namespace edgetok

#endif  // EDGETOK_TOKEN_FILE_H_
