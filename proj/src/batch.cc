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

#include <omp.h>

#include <exception>

#include "edgetok/detokenizer.h"
#include "edgetok/errors.h"

namespace edgetok {
namespace {

// Runs body(i) for i in [0, n) across threads. Exceptions cannot cross the
// parallel region, so they are parked per index and the first one rethrown.
template <typename Body>
void ParallelFor(std::size_t n, int jobs, Body body) {
  std::vector<std::exception_ptr> errors(n);
  const int threads = EffectiveJobs(jobs);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto &error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace

std::string_view TokenizerName(TokenizerKind kind) {
  switch (kind) {
    case TokenizerKind::kEdgeBreaker:
      return "ours";
    case TokenizerKind::kFixedSide:
      return "fixed-side";
    case TokenizerKind::kNaive:
      return "naive";
  }
  return "?";
}

TokenSequence TokenizeWith(TokenizerKind kind, const QuantizedMesh &mesh) {
  switch (kind) {
    case TokenizerKind::kEdgeBreaker:
      return Tokenize(mesh);
    case TokenizerKind::kFixedSide:
      return TokenizeFixedSideBaseline(mesh);
    case TokenizerKind::kNaive:
      return TokenizeNaive(mesh);
  }
  return {};
}

int EffectiveJobs(int jobs) {
  return jobs > 0 ? jobs : omp_get_max_threads();
}

std::vector<TokenSequence> TokenizeBatchSerial(
    std::span<const QuantizedMesh> meshes, TokenizerKind kind) {
  std::vector<TokenSequence> out;
  out.reserve(meshes.size());
  for (const QuantizedMesh &mesh : meshes) {
    out.push_back(TokenizeWith(kind, mesh));
  }
  return out;
}

std::vector<TokenSequence> TokenizeBatch(std::span<const QuantizedMesh> meshes,
                                         TokenizerKind kind, int jobs) {
  std::vector<TokenSequence> out(meshes.size());
  ParallelFor(meshes.size(), jobs,
              [&](std::size_t i) { out[i] = TokenizeWith(kind, meshes[i]); });
  return out;
}

std::vector<QuantizedMesh> DetokenizeBatchSerial(
    std::span<const TokenSequence> sequences) {
  std::vector<QuantizedMesh> out;
  out.reserve(sequences.size());
  for (const TokenSequence &seq : sequences) out.push_back(Detokenize(seq));
  return out;
}

std::vector<QuantizedMesh> DetokenizeBatch(
    std::span<const TokenSequence> sequences, int jobs) {
  std::vector<QuantizedMesh> out(sequences.size());
  ParallelFor(sequences.size(), jobs,
              [&](std::size_t i) { out[i] = Detokenize(sequences[i]); });
  return out;
}

std::vector<QuantizedMesh> PrepareBatchSerial(std::span<const RawMesh> meshes,
                                              int32_t resolution) {
  std::vector<QuantizedMesh> out;
  out.reserve(meshes.size());
  for (const RawMesh &mesh : meshes) {
    out.push_back(PrepareMesh(mesh, resolution));
  }
  return out;
}

std::vector<QuantizedMesh> PrepareBatch(std::span<const RawMesh> meshes,
                                        int32_t resolution, int jobs) {
  std::vector<QuantizedMesh> out(meshes.size());
  ParallelFor(meshes.size(), jobs, [&](std::size_t i) {
    out[i] = PrepareMesh(meshes[i], resolution);
  });
  return out;
}

std::vector<QuantizedMesh> PrepareAugmentedBatch(
    std::span<const RawMesh> meshes, const AugmentOptions &options,
    int32_t resolution, int jobs, std::vector<std::string> *errors) {
  std::vector<QuantizedMesh> out(meshes.size());
  if (errors != nullptr) errors->assign(meshes.size(), "");
  ParallelFor(meshes.size(), jobs, [&](std::size_t i) {
    try {
      out[i] = PrepareAugmented(meshes[i], options, i, resolution);
    } catch (const Error &e) {
      if (errors == nullptr) throw;
      (*errors)[i] = e.what();
    }
  });
  return out;
}

}  // namespace edgetok
