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
#include "edgetok/batch.h"

#include "edgetok/corpus.h"
#include "edgetok/detokenizer.h"
#include "edgetok/errors.h"
#include "gtest/gtest.h"

namespace edgetok {
namespace {

std::vector<RawMesh> RawCorpus() {
  std::vector<RawMesh> out;
  for (NamedMesh &named : ProceduralCorpus()) out.push_back(named.mesh);
  return out;
}

TEST(BatchTest, ParallelMatchesSerial) {
  const std::vector<RawMesh> raw = RawCorpus();
  const std::vector<QuantizedMesh> prepared = PrepareBatchSerial(raw, 512);
  for (int jobs : {1, 2, 4}) {
    ASSERT_EQ(PrepareBatch(raw, 512, jobs), prepared);
    for (TokenizerKind kind : {TokenizerKind::kEdgeBreaker,
                               TokenizerKind::kFixedSide,
                               TokenizerKind::kNaive}) {
      const auto serial = TokenizeBatchSerial(prepared, kind);
      ASSERT_EQ(TokenizeBatch(prepared, kind, jobs), serial)
          << TokenizerName(kind);
      if (kind == TokenizerKind::kEdgeBreaker) {
        ASSERT_EQ(DetokenizeBatch(serial, jobs), DetokenizeBatchSerial(serial));
      }
    }
  }
}

TEST(BatchTest, PropagatesErrors) {
  std::vector<QuantizedMesh> meshes(
      6, PrepareMesh(MakeIcosphere(1)));
  QuantizedMesh bad;
  bad.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
  bad.faces = {{0, 1, 2}, {0, 1, 3}};
  meshes[3] = bad;
  EXPECT_THROW(TokenizeBatch(meshes, TokenizerKind::kEdgeBreaker, 4),
               NonManifoldError);
  EXPECT_THROW(TokenizeBatchSerial(meshes, TokenizerKind::kEdgeBreaker),
               NonManifoldError);
}

TEST(BatchTest, Names) {
  EXPECT_EQ(TokenizerName(TokenizerKind::kEdgeBreaker), "ours");
  EXPECT_EQ(TokenizerName(TokenizerKind::kFixedSide), "fixed-side");
  EXPECT_EQ(TokenizerName(TokenizerKind::kNaive), "naive");
  EXPECT_GE(EffectiveJobs(0), 1);
  EXPECT_EQ(EffectiveJobs(3), 3);
}

}  // namespace
}  // namespace edgetok
