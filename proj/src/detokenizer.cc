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
#include "edgetok/detokenizer.h"

#include <algorithm>
#include <map>
#include <set>

#include "edgetok/errors.h"
#include "edgetok/grammar.h"

namespace edgetok {

QuantizedMesh Detokenize(const TokenSequence &seq,
                         const DetokenizeOptions &options) {
  const Vocabulary vocab(seq.resolution);
  const ValidationResult check = Validate(seq.ids, vocab);
  if (!check.ok) {
    const std::string got = check.violation_index < seq.ids.size()
                                ? vocab.Name(seq.ids[check.violation_index])
                                : "end of sequence";
    throw GrammarError("ungrammatical token sequence: " + got +
                           " at position " +
                           std::to_string(check.violation_index) +
                           ", expected " + check.expected.ToString(),
                       check.violation_index);
  }

  // Raw decode: every vertex token gets its own slot.
  QuantizedMesh raw;
  raw.resolution = seq.resolution;
  raw.faces.reserve(static_cast<std::size_t>(check.state.faces()));

  VertexIndex a = 0, b = 0, t = 0;
  std::size_t i = 1;  // past BOS
  const auto read_vertex = [&]() {
    raw.vertices.push_back({static_cast<int32_t>(seq.ids[i]),
                            static_cast<int32_t>(seq.ids[i + 1]),
                            static_cast<int32_t>(seq.ids[i + 2])});
    i += 3;
    return static_cast<VertexIndex>(raw.vertices.size() - 1);
  };
  while (i < seq.ids.size()) {
    const TokenKind kind = vocab.KindOf(seq.ids[i++]);
    if (kind == TokenKind::kB) {
      const VertexIndex v = read_vertex();
      const VertexIndex s = read_vertex();
      const VertexIndex e = read_vertex();
      a = s;
      b = e;
      t = v;
    } else if (kind == TokenKind::kN) {
      const VertexIndex w = read_vertex();
      a = t;
      t = w;
    } else if (kind == TokenKind::kP) {
      const VertexIndex w = read_vertex();
      b = t;
      t = w;
    } else {
      break;  // EOS
    }
    raw.faces.push_back({a, b, t});
  }

  // Merge by position, first appearance wins.
  QuantizedMesh out;
  out.resolution = seq.resolution;
  std::map<GridPoint, VertexIndex> index_of;
  std::vector<VertexIndex> remap(raw.vertices.size());
  for (std::size_t v = 0; v < raw.vertices.size(); ++v) {
    const auto [it, inserted] = index_of.try_emplace(
        raw.vertices[v], static_cast<VertexIndex>(out.vertices.size()));
    if (inserted) out.vertices.push_back(raw.vertices[v]);
    remap[v] = it->second;
  }
  out.faces.reserve(raw.faces.size());
  for (const Face &f : raw.faces) {
    const Face mapped{remap[f[0]], remap[f[1]], remap[f[2]]};
    const bool degenerate =
        mapped[0] == mapped[1] || mapped[1] == mapped[2] ||
        mapped[0] == mapped[2];
    if (degenerate && !options.keep_degenerate) continue;
    out.faces.push_back(mapped);
  }
  return out;
}

OrientationReport CheckOrientation(const QuantizedMesh &mesh) {
  std::map<std::pair<VertexIndex, VertexIndex>, int32_t> directed;
  for (const Face &f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      ++directed[{f[k], f[(k + 1) % 3]}];
    }
  }
  std::set<std::pair<VertexIndex, VertexIndex>> bad;
  for (const auto &[edge, uses] : directed) {
    if (uses > 1) {
      bad.insert({std::min(edge.first, edge.second),
                  std::max(edge.first, edge.second)});
    }
  }
  OrientationReport report;
  report.violations.assign(bad.begin(), bad.end());
  report.consistent = report.violations.empty();
  return report;
}

}  // namespace edgetok
