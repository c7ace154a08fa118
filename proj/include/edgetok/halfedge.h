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
#ifndef EDGETOK_HALFEDGE_H_
#define EDGETOK_HALFEDGE_H_

#include <cstdint>
#include <vector>

#include "edgetok/mesh.h"

namespace edgetok {

using HalfEdgeIndex = int32_t;

// Marks a half-edge on the mesh boundary, i.e. one without an opposite.
constexpr HalfEdgeIndex kAbsent = -1;

// Immutable half-edge connectivity of a triangle mesh.
//
// Face f owns half-edges 3f, 3f+1 and 3f+2. For a face listed as (v0, v1, v2)
// they run v0->v1, v1->v2 and v2->v0, so the anchor of a face is the
// half-edge leaving its first listed vertex. Following the winding, a
// half-edge c runs origin -> destination, Next(c) runs destination -> apex and
// Prev(c) runs apex -> origin.
//
// Twin(Next(c)) and Twin(Prev(c)) are the two neighbouring faces a traversal
// can step into from c.
class HalfEdgeMesh {
 public:
  struct HalfEdge {
    VertexIndex origin;
    HalfEdgeIndex twin;
  };

  // Builds the structure from a cleaned mesh. Throws MeshError for an empty
  // face list or out-of-range indices, NonManifoldError when an undirected
  // edge is used by more than two faces or a directed edge appears twice.
  static HalfEdgeMesh Build(const QuantizedMesh &mesh);

  int32_t num_vertices() const { return num_vertices_; }
  int32_t num_faces() const {
    return static_cast<int32_t>(halfedges_.size() / 3);
  }
  int32_t num_halfedges() const {
    return static_cast<int32_t>(halfedges_.size());
  }

  static HalfEdgeIndex Next(HalfEdgeIndex h) {
    return h % 3 == 2 ? h - 2 : h + 1;
  }
  static HalfEdgeIndex Prev(HalfEdgeIndex h) {
    return h % 3 == 0 ? h + 2 : h - 1;
  }
  static FaceIndex FaceOf(HalfEdgeIndex h) { return h / 3; }
  static HalfEdgeIndex FaceAnchor(FaceIndex f) { return 3 * f; }

  HalfEdgeIndex Twin(HalfEdgeIndex h) const { return halfedges_[h].twin; }
  VertexIndex Origin(HalfEdgeIndex h) const { return halfedges_[h].origin; }
  VertexIndex Destination(HalfEdgeIndex h) const {
    return halfedges_[Next(h)].origin;
  }
  // The vertex of h's face that does not lie on h.
  VertexIndex Apex(HalfEdgeIndex h) const {
    return halfedges_[Prev(h)].origin;
  }

  bool IsBoundaryVertex(VertexIndex v) const { return boundary_[v] != 0; }
  // Ascending list of vertices incident to a twin-less half-edge.
  std::vector<VertexIndex> BoundaryVertices() const;

 private:
  HalfEdgeMesh() = default;

  int32_t num_vertices_ = 0;
  std::vector<HalfEdge> halfedges_;
  std::vector<uint8_t> boundary_;
};

}  // namespace edgetok

#endif  // EDGETOK_HALFEDGE_H_
