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
#include "edgetok/tokenizer.h"

#include <algorithm>

#include "edgetok/corpus.h"
#include "edgetok/errors.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace edgetok {
namespace {

using testing::ScriptToIds;

QuantizedMesh Golden() { return PrepareMesh(MakeGoldenMesh()); }

int64_t Count(const TokenSequence &seq, TokenId id) {
  return std::count(seq.ids.begin(), seq.ids.end(), id);
}

TEST(TokenizeTest, GoldenSequence) {
  const QuantizedMesh mesh = Golden();
  ASSERT_EQ(mesh.vertices.size(), 9u);
  const TokenSequence seq = Tokenize(mesh);
  EXPECT_EQ(seq.resolution, 512);
  EXPECT_EQ(seq.ids, ScriptToIds(testing::kGoldenScript, mesh));
  EXPECT_EQ(seq.ids.size(), 46u);
  EXPECT_EQ(Count(seq, Vocabulary(512).b()), 2);
}

TEST(TokenizeTest, SingleTriangle) {
  RawMesh raw;
  raw.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  raw.faces = {{0, 1, 2}};
  const QuantizedMesh mesh = PrepareMesh(raw);
  EXPECT_EQ(Tokenize(mesh).ids, ScriptToIds("BOS B 3 1 2 EOS", mesh));
  EXPECT_EQ(Tokenize(mesh).ids.size(), 12u);
}

TEST(TokenizeTest, TwoFaceStrip) {
  RawMesh raw;
  raw.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  raw.faces = {{0, 1, 2}, {0, 2, 3}};
  const QuantizedMesh mesh = PrepareMesh(raw);
  const TokenSequence seq = Tokenize(mesh);
  // The right side of face 0 is open, so the walk turns left.
  EXPECT_EQ(seq.ids, ScriptToIds("BOS B 3 1 2 P 4 EOS", mesh));
  EXPECT_EQ(seq.ids.size(), 16u);
}

TEST(TokenizeTest, FanIsOneSubsequence) {
  for (bool hub_first : {true, false}) {
    const QuantizedMesh mesh = PrepareMesh(MakeFan(30, hub_first));
    const TokenSequence seq = Tokenize(mesh);
    EXPECT_EQ(Count(seq, Vocabulary(512).b()), 1) << hub_first;
  }
}

TEST(TokenizeTest, RejectsNonManifold) {
  QuantizedMesh mesh;
  mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
  mesh.faces = {{0, 1, 2}, {0, 1, 3}};
  EXPECT_THROW(Tokenize(mesh), NonManifoldError);
}

TEST(FixedSideBaselineTest, GoldenRestarts) {
  const QuantizedMesh mesh = Golden();
  const TokenSequence seq = TokenizeFixedSideBaseline(mesh);
  const Vocabulary vocab(512);
  EXPECT_EQ(Count(seq, vocab.b()), 5);
  EXPECT_EQ(seq.ids.size(), 2u + 3 * 8 + 7 * 5);
  // Walks: faces 0-1-2, 3, 4, 5, 6-7.
  EXPECT_EQ(seq.ids, ScriptToIds("BOS B 1 2 3 4 5 B 6 1 4 B 7 1 6 B 8 1 7 "
                                 "B 2 1 8 9 EOS",
                                 mesh));
}

TEST(NaiveTest, Lengths) {
  const QuantizedMesh golden = Golden();
  EXPECT_EQ(TokenizeNaive(golden).ids.size(), 74u);
  RawMesh raw;
  raw.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  raw.faces = {{0, 1, 2}};
  const QuantizedMesh tri = PrepareMesh(raw);
  EXPECT_EQ(TokenizeNaive(tri).ids, ScriptToIds("BOS 1 2 3 EOS", tri));
}

TEST(StatsTest, Examples) {
  const QuantizedMesh golden = Golden();
  const TraversalStats stats = ComputeStats(Tokenize(golden), golden, 0.25);
  EXPECT_EQ(stats.faces, 8);
  EXPECT_EQ(stats.vertices, 9);
  EXPECT_EQ(stats.token_count, 46);
  EXPECT_EQ(stats.subsequences, 2);
  EXPECT_DOUBLE_EQ(stats.tokens_per_face, 5.5);
  EXPECT_DOUBLE_EQ(stats.compression_ratio, 44.0 / 72.0);
  EXPECT_DOUBLE_EQ(stats.tokenize_seconds, 0.25);

  const TraversalStats naive = ComputeStats(TokenizeNaive(golden), golden, 0);
  EXPECT_DOUBLE_EQ(naive.compression_ratio, 1.0);
  EXPECT_EQ(naive.subsequences, 0);
}

TEST(TokenizePropertyTest, MatchesRecursiveReference) {
  for (const NamedMesh &named : ProceduralCorpus()) {
    SCOPED_TRACE(named.name);
    const QuantizedMesh mesh = PrepareMesh(named.mesh);
    EXPECT_EQ(Tokenize(mesh).ids,
              testing::RecursiveReferenceTokenizer(mesh).Run());
  }
}

TEST(TokenizePropertyTest, LengthLawsAndFaceConservation) {
  for (const NamedMesh &named : ProceduralCorpus()) {
    SCOPED_TRACE(named.name);
    const QuantizedMesh mesh = PrepareMesh(named.mesh);
    const Vocabulary vocab(mesh.resolution);
    const auto faces = static_cast<int64_t>(mesh.faces.size());

    const TokenSequence ours = Tokenize(mesh);
    const int64_t s = Count(ours, vocab.b());
    EXPECT_EQ(static_cast<int64_t>(ours.ids.size()), 2 + 4 * faces + 6 * s);
    EXPECT_EQ(s + Count(ours, vocab.n()) + Count(ours, vocab.p()), faces);
    EXPECT_EQ(ours.ids.front(), vocab.bos());
    EXPECT_EQ(ours.ids.back(), vocab.eos());
    EXPECT_EQ(Tokenize(mesh), ours);

    const TokenSequence fixed = TokenizeFixedSideBaseline(mesh);
    const int64_t sb = Count(fixed, vocab.b());
    EXPECT_EQ(static_cast<int64_t>(fixed.ids.size()), 2 + 3 * faces + 7 * sb);

    EXPECT_EQ(static_cast<int64_t>(TokenizeNaive(mesh).ids.size()),
              2 + 9 * faces);
  }
}

}  // namespace
}  // namespace edgetok
