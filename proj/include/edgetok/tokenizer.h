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
#ifndef EDGETOK_TOKENIZER_H_
#define EDGETOK_TOKENIZER_H_

#include <cstdint>

#include "edgetok/halfedge.h"
#include "edgetok/mesh.h"
#include "edgetok/vocabulary.h"

namespace edgetok {

// Converts a cleaned triangle mesh into a token sequence with the
// three-symbol EdgeBreaker variant:
//
//   BOS  (B v s e  { N w | P w }* )+  EOS
//
// where v, s, e, w are vertices written as three coordinate tokens in XYZ
// order. Vertices on the mesh boundary start out visited so the walk never
// steps off the surface. Every face is written exactly once, which gives the
// length law |seq| = 2 + 4F + 6S for S sub-sequences.
//
// Faces are started in input order from their anchor half-edge, so equal
// inputs produce identical sequences. Throws MeshError (including
// NonManifoldError) when the mesh cannot be represented.
TokenSequence Tokenize(const QuantizedMesh &mesh);
TokenSequence Tokenize(const QuantizedMesh &mesh, const HalfEdgeMesh &he);

// Comparison baseline that can only continue across Next(c): each run starts
// with B and three vertices, then adds one bare vertex (3 tokens) per face
// for as long as the face across Next(c) exists and is unvisited. Length is
// 2 + 3F + 7S. The output does not follow the B/N/P grammar.
TokenSequence TokenizeFixedSideBaseline(const QuantizedMesh &mesh);

// Nine coordinate tokens per face in listed order: 2 + 9F tokens.
TokenSequence TokenizeNaive(const QuantizedMesh &mesh);

struct TraversalStats {
  int64_t faces = 0;
  int64_t vertices = 0;
  int64_t token_count = 0;
  // Number of B tokens.
  int64_t subsequences = 0;
  // Excludes BOS/EOS.
  double tokens_per_face = 0.0;
  // (token_count - 2) / (9 * faces).
  double compression_ratio = 0.0;
  double tokenize_seconds = 0.0;
};

TraversalStats ComputeStats(const TokenSequence &seq, const QuantizedMesh &mesh,
                            double elapsed_seconds);

}  // namespace edgetok

#endif  // EDGETOK_TOKENIZER_H_
