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

#include <cassert>
#include <vector>

#include "edgetok/errors.h"

namespace edgetok {
namespace {

class SequenceWriter {
 public:
  SequenceWriter(const QuantizedMesh &mesh, std::size_t reserve)
      : mesh_(mesh), vocab_(mesh.resolution) {
    seq_.resolution = mesh.resolution;
    seq_.ids.reserve(reserve);
  }

  void Emit(TokenId id) { seq_.ids.push_back(id); }
  void WriteVertex(VertexIndex v) {
    const GridPoint &q = mesh_.vertices[v];
    seq_.ids.push_back(static_cast<TokenId>(q[0]));
    seq_.ids.push_back(static_cast<TokenId>(q[1]));
    seq_.ids.push_back(static_cast<TokenId>(q[2]));
  }

  const Vocabulary &vocab() const { return vocab_; }
  TokenSequence Finish() { return std::move(seq_); }

 private:
  const QuantizedMesh &mesh_;
  Vocabulary vocab_;
  TokenSequence seq_;
};

// Recursive traversal flattened onto an explicit stack; the recursion depth
// can reach the face count.
class EdgeBreakerWalk {
 public:
  EdgeBreakerWalk(const QuantizedMesh &mesh, const HalfEdgeMesh &he)
      : he_(he),
        out_(mesh, 2 + 10 * mesh.faces.size()),
        vertex_visited_(static_cast<std::size_t>(he.num_vertices()), 0),
        face_visited_(static_cast<std::size_t>(he.num_faces()), 0) {}

  TokenSequence Run() {
    for (VertexIndex v = 0; v < he_.num_vertices(); ++v) {
      if (he_.IsBoundaryVertex(v)) vertex_visited_[v] = 1;
    }
    out_.Emit(out_.vocab().bos());
    for (FaceIndex f = 0; f < he_.num_faces(); ++f) {
      if (face_visited_[f]) continue;
      stack_.push_back({Step::kTraverse, HalfEdgeMesh::FaceAnchor(f)});
      Drain();
    }
    out_.Emit(out_.vocab().eos());
    return out_.Finish();
  }

 private:
  struct Step {
    enum Kind : uint8_t { kTraverse, kFirstFace, kFace };
    Kind kind;
    HalfEdgeIndex h;
  };

  // An absent twin counts as an already visited face.
  bool SideVisited(HalfEdgeIndex twin) const {
    return twin == kAbsent || face_visited_[HalfEdgeMesh::FaceOf(twin)];
  }

  void Drain() {
    while (!stack_.empty()) {
      const Step step = stack_.back();
      stack_.pop_back();
      if (step.kind == Step::kTraverse) {
        Traverse(step.h);
      } else {
        TokenizeFace(step.h, step.kind == Step::kFirstFace);
      }
    }
  }

  // Starts a new sub-sequence at c unless its face was reached meanwhile.
  void Traverse(HalfEdgeIndex c) {
    if (face_visited_[HalfEdgeMesh::FaceOf(c)]) return;
    out_.Emit(out_.vocab().b());
    out_.WriteVertex(he_.Apex(c));
    out_.WriteVertex(he_.Origin(c));
    out_.WriteVertex(he_.Destination(c));
    vertex_visited_[he_.Origin(c)] = 1;
    vertex_visited_[he_.Destination(c)] = 1;
    stack_.push_back({Step::kFirstFace, c});
  }

  void TokenizeFace(HalfEdgeIndex c, bool first) {
    assert(c != kAbsent);
    assert(!face_visited_[HalfEdgeMesh::FaceOf(c)]);
    face_visited_[HalfEdgeMesh::FaceOf(c)] = 1;
    const VertexIndex apex = he_.Apex(c);
    if (!first) out_.WriteVertex(apex);

    const HalfEdgeIndex right = he_.Twin(HalfEdgeMesh::Next(c));
    const HalfEdgeIndex left = he_.Twin(HalfEdgeMesh::Prev(c));
    if (!vertex_visited_[apex]) {
      // An interior apex has a twin on every incident edge.
      vertex_visited_[apex] = 1;
      out_.Emit(out_.vocab().n());
      stack_.push_back({Step::kFace, right});
      return;
    }
    const bool right_done = SideVisited(right);
    const bool left_done = SideVisited(left);
    if (right_done && left_done) return;
    if (right_done) {
      out_.Emit(out_.vocab().p());
      stack_.push_back({Step::kFace, left});
    } else if (left_done) {
      out_.Emit(out_.vocab().n());
      stack_.push_back({Step::kFace, right});
    } else {
      // Both neighbours open: finish the right branch, then restart the left
      // one as its own sub-sequence with all three vertices written again.
      out_.Emit(out_.vocab().n());
      stack_.push_back({Step::kTraverse, left});
      stack_.push_back({Step::kFace, right});
    }
  }

  const HalfEdgeMesh &he_;
  SequenceWriter out_;
  std::vector<uint8_t> vertex_visited_;
  std::vector<uint8_t> face_visited_;
  std::vector<Step> stack_;
};

}  // namespace

TokenSequence Tokenize(const QuantizedMesh &mesh) {
  return Tokenize(mesh, HalfEdgeMesh::Build(mesh));
}

TokenSequence Tokenize(const QuantizedMesh &mesh, const HalfEdgeMesh &he) {
  return EdgeBreakerWalk(mesh, he).Run();
}

TokenSequence TokenizeFixedSideBaseline(const QuantizedMesh &mesh) {
  const HalfEdgeMesh he = HalfEdgeMesh::Build(mesh);
  SequenceWriter out(mesh, 2 + 10 * mesh.faces.size());
  std::vector<uint8_t> face_visited(mesh.faces.size(), 0);

  out.Emit(out.vocab().bos());
  for (FaceIndex f = 0; f < he.num_faces(); ++f) {
    if (face_visited[f]) continue;
    HalfEdgeIndex c = HalfEdgeMesh::FaceAnchor(f);
    face_visited[f] = 1;
    out.Emit(out.vocab().b());
    out.WriteVertex(he.Apex(c));
    out.WriteVertex(he.Origin(c));
    out.WriteVertex(he.Destination(c));
    for (;;) {
      const HalfEdgeIndex step = he.Twin(HalfEdgeMesh::Next(c));
      if (step == kAbsent || face_visited[HalfEdgeMesh::FaceOf(step)]) break;
      c = step;
      face_visited[HalfEdgeMesh::FaceOf(c)] = 1;
      out.WriteVertex(he.Apex(c));
    }
  }
  out.Emit(out.vocab().eos());
  return out.Finish();
}

TokenSequence TokenizeNaive(const QuantizedMesh &mesh) {
  if (mesh.faces.empty()) throw MeshError("mesh has no faces");
  SequenceWriter out(mesh, 2 + 9 * mesh.faces.size());
  out.Emit(out.vocab().bos());
  for (const Face &f : mesh.faces) {
    for (VertexIndex v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= mesh.vertices.size()) {
        throw MeshError("face references missing vertex " + std::to_string(v));
      }
      out.WriteVertex(v);
    }
  }
  out.Emit(out.vocab().eos());
  return out.Finish();
}

TraversalStats ComputeStats(const TokenSequence &seq, const QuantizedMesh &mesh,
                            double elapsed_seconds) {
  const Vocabulary vocab(seq.resolution);
  TraversalStats stats;
  stats.faces = static_cast<int64_t>(mesh.faces.size());
  stats.vertices = static_cast<int64_t>(mesh.vertices.size());
  stats.token_count = static_cast<int64_t>(seq.ids.size());
  for (TokenId id : seq.ids) {
    if (id == vocab.b()) ++stats.subsequences;
  }
  if (stats.faces > 0) {
    const double body = static_cast<double>(stats.token_count - 2);
    stats.tokens_per_face = body / static_cast<double>(stats.faces);
    stats.compression_ratio = body / (9.0 * static_cast<double>(stats.faces));
  }
  stats.tokenize_seconds = elapsed_seconds;
  return stats;
}

}  // namespace edgetok
