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
#include "edgetok/token_file.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>

#include "edgetok/errors.h"

namespace edgetok {
namespace {

constexpr uint8_t kMagic[4] = {'E', 'R', 'T', 'K'};

void PutU16(std::vector<uint8_t> *out, uint32_t v) {
  out->push_back(static_cast<uint8_t>(v & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 8) & 0xff));
}

void PutU32(std::vector<uint8_t> *out, uint32_t v) {
  PutU16(out, v & 0xffff);
  PutU16(out, v >> 16);
}

uint32_t GetU16(std::span<const uint8_t> b, std::size_t at) {
  return static_cast<uint32_t>(b[at]) | (static_cast<uint32_t>(b[at + 1]) << 8);
}

uint32_t GetU32(std::span<const uint8_t> b, std::size_t at) {
  return GetU16(b, at) | (GetU16(b, at + 2) << 16);
}

}  // namespace

std::vector<uint8_t> EncodeTokenFile(const TokenSequence &seq, bool extended) {
  const Vocabulary vocab(seq.resolution);
  if (seq.resolution > 0xffff) {
    throw IoError("resolution does not fit the token file header");
  }
  const uint32_t limit = extended ? vocab.extended_size() : vocab.size();
  std::vector<uint8_t> out;
  out.reserve(kTokenFileHeaderSize + 2 * seq.ids.size());
  for (uint8_t c : kMagic) out.push_back(c);
  out.push_back(kTokenFileVersion |
                (extended ? kTokenFileExtensionFlag : uint8_t{0}));
  PutU16(&out, static_cast<uint32_t>(seq.resolution));
  PutU32(&out, static_cast<uint32_t>(seq.ids.size()));
  for (TokenId id : seq.ids) {
    if (id >= limit) {
      throw IoError("token id " + std::to_string(id) +
                    " outside the vocabulary");
    }
    PutU16(&out, id);
  }
  return out;
}

TokenSequence DecodeTokenFile(std::span<const uint8_t> bytes) {
  if (bytes.size() < kTokenFileHeaderSize) {
    throw IoError("token file truncated: header needs 11 bytes");
  }
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw IoError("not a token file (bad magic)");
  }
  const uint8_t version = bytes[4];
  if ((version & ~kTokenFileExtensionFlag) != kTokenFileVersion) {
    throw IoError("unsupported token file version " +
                  std::to_string(version & ~kTokenFileExtensionFlag));
  }
  const bool extended = (version & kTokenFileExtensionFlag) != 0;

  TokenSequence seq;
  seq.resolution = static_cast<int32_t>(GetU16(bytes, 5));
  if (seq.resolution < 2 || seq.resolution > Vocabulary::kMaxResolution) {
    throw IoError("invalid resolution " + std::to_string(seq.resolution));
  }
  const Vocabulary vocab(seq.resolution);
  const uint32_t count = GetU32(bytes, 7);
  const std::size_t expected = kTokenFileHeaderSize + 2 * std::size_t{count};
  if (bytes.size() != expected) {
    throw IoError("token file holds " + std::to_string(bytes.size()) +
                  " bytes, header implies " + std::to_string(expected));
  }
  const uint32_t limit = extended ? vocab.extended_size() : vocab.size();
  seq.ids.reserve(count);
  for (uint32_t k = 0; k < count; ++k) {
    const uint32_t id = GetU16(bytes, kTokenFileHeaderSize + 2 * k);
    if (id >= limit) {
      throw IoError("token " + std::to_string(k) + " has id " +
                    std::to_string(id) + " outside the vocabulary");
    }
    seq.ids.push_back(id);
  }
  return seq;
}

void WriteTokenFile(const std::filesystem::path &path, const TokenSequence &seq,
                    bool extended) {
  const std::vector<uint8_t> bytes = EncodeTokenFile(seq, extended);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

TokenSequence ReadTokenFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path.string());
  return DecodeTokenFile(bytes);
}

}  // namespace edgetok
