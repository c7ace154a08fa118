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

#include <filesystem>

#include "edgetok/corpus.h"
#include "edgetok/detokenizer.h"
#include "edgetok/errors.h"
#include "edgetok/tokenizer.h"
#include "gtest/gtest.h"

namespace edgetok {
namespace {

// Header for R = 512 and 12 tokens, then BOS B (1,1,1) (2,2,2) (3,3,3) EOS.
std::vector<uint8_t> HandBuiltTriangle() {
  std::vector<uint8_t> b = {'E', 'R', 'T', 'K', 0x01, 0x00, 0x02,
                            0x0c, 0x00, 0x00, 0x00};
  for (uint16_t id : {515, 512, 1, 1, 1, 2, 2, 2, 3, 3, 3, 516}) {
    b.push_back(static_cast<uint8_t>(id & 0xff));
    b.push_back(static_cast<uint8_t>(id >> 8));
  }
  return b;
}

TEST(TokenFileTest, DecodesHandBuiltFile) {
  const std::vector<uint8_t> bytes = HandBuiltTriangle();
  ASSERT_EQ(bytes.size(), 35u);
  const TokenSequence seq = DecodeTokenFile(bytes);
  EXPECT_EQ(seq.resolution, 512);
  ASSERT_EQ(seq.ids.size(), 12u);
  const QuantizedMesh mesh = Detokenize(seq);
  EXPECT_EQ(mesh.vertices.size(), 3u);
  EXPECT_EQ(mesh.faces.size(), 1u);
  EXPECT_EQ(EncodeTokenFile(seq), bytes);
}

TEST(TokenFileTest, ExtensionFlag) {
  TokenSequence seq{512, {515, 512, 1, 1, 1, 2, 2, 2, 3, 3, 3, 516, 518}};
  EXPECT_THROW(EncodeTokenFile(seq), IoError);
  const std::vector<uint8_t> bytes = EncodeTokenFile(seq, true);
  EXPECT_EQ(bytes[4], 0x81);
  EXPECT_EQ(DecodeTokenFile(bytes), seq);
}

TEST(TokenFileTest, RejectsMalformed) {
  const std::vector<uint8_t> good = HandBuiltTriangle();
  auto mutate = [&](auto edit) {
    std::vector<uint8_t> b = good;
    edit(b);
    return b;
  };
  EXPECT_THROW(DecodeTokenFile(std::vector<uint8_t>(good.begin(),
                                                    good.begin() + 10)),
               IoError);
  EXPECT_THROW(DecodeTokenFile(mutate([](auto &b) { b[0] = 'X'; })), IoError);
  EXPECT_THROW(DecodeTokenFile(mutate([](auto &b) { b[4] = 2; })), IoError);
  EXPECT_THROW(DecodeTokenFile(mutate([](auto &b) { b.pop_back(); })),
               IoError);
  EXPECT_THROW(DecodeTokenFile(mutate([](auto &b) { b.push_back(0); })),
               IoError);
  // Resolution 1.
  EXPECT_THROW(DecodeTokenFile(mutate([](auto &b) { b[5] = 1, b[6] = 0; })),
               IoError);
  // Id 518 without the extension flag.
  EXPECT_THROW(DecodeTokenFile(mutate([](auto &b) { b[11] = 0x06; })),
               IoError);
}

TEST(TokenFileTest, FileRoundTrip) {
  const std::filesystem::path path =
      std::filesystem::path(::testing::TempDir()) / "golden.ertk";
  const TokenSequence seq = Tokenize(PrepareMesh(MakeGoldenMesh()));
  WriteTokenFile(path, seq);
  EXPECT_EQ(std::filesystem::file_size(path), 11 + 2 * seq.ids.size());
  EXPECT_EQ(ReadTokenFile(path), seq);
  EXPECT_THROW(ReadTokenFile(path.string() + ".missing"), IoError);
}

TEST(TokenFilePropertyTest, RoundTripOverCorpusAndResolutions) {
  for (int32_t r : {2, 128, 512, 1024, 65525}) {
    for (const NamedMesh &named : ProceduralCorpus()) {
      if (named.mesh.faces.size() > 600) continue;
      const QuantizedMesh mesh = PrepareMesh(named.mesh, r);
      if (mesh.faces.empty()) continue;
      const TokenSequence seq = TokenizeNaive(mesh);
      ASSERT_EQ(DecodeTokenFile(EncodeTokenFile(seq)), seq) << named.name;
    }
  }
}

}  // namespace
}  // namespace edgetok
