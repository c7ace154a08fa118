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
#ifndef EDGETOK_BATCH_H_
#define EDGETOK_BATCH_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgetok/augment.h"
#include "edgetok/mesh.h"
#include "edgetok/tokenizer.h"

namespace edgetok {

enum class TokenizerKind { kEdgeBreaker, kFixedSide, kNaive };

std::string_view TokenizerName(TokenizerKind kind);

TokenSequence TokenizeWith(TokenizerKind kind, const QuantizedMesh &mesh);

// Batch kernels. Each mesh is processed independently, so the parallel
// versions split the batch across OpenMP threads (|jobs| <= 0 means the
// OpenMP default) and must return exactly what the serial reference
// returns. If any mesh fails, the exception of the lowest failing index is
// rethrown after the loop.
std::vector<TokenSequence> TokenizeBatchSerial(
    std::span<const QuantizedMesh> meshes, TokenizerKind kind);
std::vector<TokenSequence> TokenizeBatch(std::span<const QuantizedMesh> meshes,
                                         TokenizerKind kind, int jobs);

std::vector<QuantizedMesh> DetokenizeBatchSerial(
    std::span<const TokenSequence> sequences);
std::vector<QuantizedMesh> DetokenizeBatch(
    std::span<const TokenSequence> sequences, int jobs);

std::vector<QuantizedMesh> PrepareBatchSerial(std::span<const RawMesh> meshes,
                                              int32_t resolution);
std::vector<QuantizedMesh> PrepareBatch(std::span<const RawMesh> meshes,
                                        int32_t resolution, int jobs);

// Number of threads OpenMP would use for |jobs|.
// Mesh i draws its augmentation from stream i, so the output does not depend
// on the number of jobs. With |errors| set, a mesh that fails leaves an empty
// result and its message at the same index instead of throwing.
std::vector<QuantizedMesh> PrepareAugmentedBatch(
    std::span<const RawMesh> meshes, const AugmentOptions &options,
    int32_t resolution, int jobs, std::vector<std::string> *errors = nullptr);

int EffectiveJobs(int jobs);

}  // namespace edgetok

#endif  // EDGETOK_BATCH_H_
