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
#include "edgetok/bench_harness.h"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "edgetok/errors.h"
#include "edgetok/halfedge.h"
#include "edgetok/obj_io.h"

namespace edgetok {

LoadedCorpus LoadCorpus(const std::filesystem::path &dir, int32_t resolution,
                        bool skip_invalid) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".obj") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  LoadedCorpus corpus;
  for (const auto &file : files) {
    try {
      QuantizedMesh mesh = PrepareMesh(ReadObjFile(file), resolution);
      HalfEdgeMesh::Build(mesh);
      corpus.names.push_back(file.filename().string());
      corpus.meshes.push_back(std::move(mesh));
    } catch (const IoError &) {
      throw;
    } catch (const Error &e) {
      if (!skip_invalid) throw;
      corpus.skipped.push_back(file.filename().string() + ": " + e.what());
    }
  }
  return corpus;
}

BenchReport RunBench(std::span<const QuantizedMesh> meshes,
                     const BenchOptions &options) {
  if (meshes.empty()) throw Error("benchmark corpus is empty");
  BenchReport report;
  report.mesh_count = static_cast<int64_t>(meshes.size());
  report.jobs = EffectiveJobs(options.jobs);
  report.repeat = std::max(1, options.repeat);
  report.resolution = meshes.front().resolution;
  report.min_faces = report.max_faces =
      static_cast<int64_t>(meshes.front().faces.size());
  for (const QuantizedMesh &mesh : meshes) {
    const auto faces = static_cast<int64_t>(mesh.faces.size());
    report.min_faces = std::min(report.min_faces, faces);
    report.max_faces = std::max(report.max_faces, faces);
  }

  for (TokenizerKind kind : {TokenizerKind::kEdgeBreaker,
                             TokenizerKind::kFixedSide, TokenizerKind::kNaive}) {
    std::vector<TokenSequence> sequences;
    const auto start = std::chrono::steady_clock::now();
    for (int pass = 0; pass < report.repeat; ++pass) {
      sequences = TokenizeBatch(meshes, kind, options.jobs);
    }
    const std::chrono::duration<double> wall =
        std::chrono::steady_clock::now() - start;

    BenchRow row;
    row.name = std::string(TokenizerName(kind));
    // Summed in index order so the means do not depend on scheduling.
    for (std::size_t i = 0; i < meshes.size(); ++i) {
      const TraversalStats stats = ComputeStats(sequences[i], meshes[i], 0.0);
      row.mean_compression_ratio += stats.compression_ratio;
      row.mean_subsequences += static_cast<double>(stats.subsequences);
      row.mean_tokens_per_face += stats.tokens_per_face;
    }
    const auto n = static_cast<double>(meshes.size());
    row.mean_compression_ratio /= n;
    row.mean_subsequences /= n;
    row.mean_tokens_per_face /= n;
    row.meshes_per_second =
        wall.count() > 0.0 ? n * report.repeat / wall.count() : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

std::string FormatBenchTable(const BenchReport &report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line),
                "%zu tokenizers over %lld meshes (%lld-%lld faces, R=%d, "
                "jobs=%d, skipped=%lld)\n",
                report.rows.size(), static_cast<long long>(report.mesh_count),
                static_cast<long long>(report.min_faces),
                static_cast<long long>(report.max_faces), report.resolution,
                report.jobs, static_cast<long long>(report.skipped));
  out += line;
  std::snprintf(line, sizeof(line), "%-12s %12s %14s %12s %14s\n", "tokenizer",
                "ratio", "subsequences", "tok/face", "meshes/s");
  out += line;
  for (const BenchRow &row : report.rows) {
    std::snprintf(line, sizeof(line), "%-12s %11.1f%% %14.2f %12.3f %14.1f\n",
                  row.name.c_str(), 100.0 * row.mean_compression_ratio,
                  row.mean_subsequences, row.mean_tokens_per_face,
                  row.meshes_per_second);
    out += line;
  }
  return out;
}

}  // namespace edgetok
