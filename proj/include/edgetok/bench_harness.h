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
#ifndef EDGETOK_BENCH_HARNESS_H_
#define EDGETOK_BENCH_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "edgetok/batch.h"
#include "edgetok/mesh.h"

namespace edgetok {

struct LoadedCorpus {
  std::vector<std::string> names;
  std::vector<QuantizedMesh> meshes;
  // Files rejected with skip_invalid set, with the reason.
  std::vector<std::string> skipped;
};

// Reads every *.obj under |dir| (sorted by name) and prepares it at
// |resolution|. Meshes that fail to parse or to build a half-edge structure
// are skipped when |skip_invalid| is set and raise otherwise.
LoadedCorpus LoadCorpus(const std::filesystem::path &dir, int32_t resolution,
                        bool skip_invalid);

struct BenchRow {
  std::string name;
  double mean_compression_ratio = 0.0;
  double mean_subsequences = 0.0;
  double mean_tokens_per_face = 0.0;
  double meshes_per_second = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // ours, fixed-side, naive
  int64_t mesh_count = 0;
  int64_t min_faces = 0;
  int64_t max_faces = 0;
  int32_t resolution = 0;
  int64_t skipped = 0;
  int jobs = 1;
  int repeat = 1;
};

struct BenchOptions {
  int jobs = 1;
  // Passes over the corpus per tokenizer; only affects timing.
  int repeat = 1;
};

// Runs all three tokenizers over |meshes|. The aggregate statistics depend
// only on the meshes; jobs and repeat change nothing but throughput.
BenchReport RunBench(std::span<const QuantizedMesh> meshes,
                     const BenchOptions &options);

// Fixed-width table, one row per tokenizer.
std::string FormatBenchTable(const BenchReport &report);

}  // namespace edgetok

#endif  // EDGETOK_BENCH_HARNESS_H_
