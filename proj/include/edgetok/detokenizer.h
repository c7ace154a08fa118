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
#ifndef EDGETOK_DETOKENIZER_H_
#define EDGETOK_DETOKENIZER_H_

#include <utility>
#include <vector>

#include "edgetok/mesh.h"
#include "edgetok/vocabulary.h"

namespace edgetok {

struct DetokenizeOptions {
  // Keep faces that collapse once duplicate vertices are merged.
  bool keep_degenerate = false;
};

// Rebuilds a mesh from a token sequence. The decoder tracks the active
// half-edge a->b with apex t of the last emitted face:
//
//   B v s e   emits (s, e, v), frame (s, e, v)
//   N w       emits (t, b, w), frame (t, b, w)
//   P w       emits (a, t, w), frame (a, t, w)
//
// Vertices repeated across sub-sequences are merged by grid position after
// EOS, in order of first appearance. Throws GrammarError if the sequence is
// not accepted by the grammar.
QuantizedMesh Detokenize(const TokenSequence &seq,
                         const DetokenizeOptions &options = {});

struct OrientationReport {
  bool consistent = true;
  // Undirected edges (smaller index first) that some pair of faces walks in
  // the same direction, sorted.
  std::vector<std::pair<VertexIndex, VertexIndex>> violations;
};

// A mesh is consistently oriented when no directed edge occurs twice, so
// every edge shared by two faces is walked in opposite directions.
OrientationReport CheckOrientation(const QuantizedMesh &mesh);

}  // namespace edgetok

#endif  // EDGETOK_DETOKENIZER_H_
