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
#include "edgetok/halfedge.h"

#include <string>
#include <unordered_map>

#include "edgetok/errors.h"

namespace edgetok {
namespace {

uint64_t EdgeKey(VertexIndex from, VertexIndex to) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(from)) << 32) |
         static_cast<uint32_t>(to);
}

std::string DescribeNonManifold(NonManifoldError::Kind kind, int32_t from,
                                int32_t to, int32_t first_face,
                                int32_t second_face) {
  std::string what =
      kind == NonManifoldError::Kind::kDuplicateDirectedEdge
          ? "duplicate directed edge " + std::to_string(from) + "->" +
                std::to_string(to)
          : "edge " + std::to_string(from) + "-" + std::to_string(to) +
                " is shared by more than two faces";
  return what + " (faces " + std::to_string(first_face) + " and " +
         std::to_string(second_face) + ")";
}

}  // namespace

NonManifoldError::NonManifoldError(Kind kind, int32_t from, int32_t to,
                                   int32_t first_face, int32_t second_face)
    : MeshError(
          DescribeNonManifold(kind, from, to, first_face, second_face)),
      kind_(kind),
      from_(from),
      to_(to),
      first_face_(first_face),
      second_face_(second_face) {}

HalfEdgeMesh HalfEdgeMesh::Build(const QuantizedMesh &mesh) {
  if (mesh.faces.empty()) throw MeshError("mesh has no faces");

  HalfEdgeMesh out;
  out.num_vertices_ = static_cast<int32_t>(mesh.vertices.size());
  out.halfedges_.reserve(mesh.faces.size() * 3);
  for (const Face &f : mesh.faces) {
    for (VertexIndex v : f) {
      if (v < 0 || v >= out.num_vertices_) {
        throw MeshError("face references missing vertex " + std::to_string(v));
      }
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      throw MeshError("degenerate face; clean the mesh first");
    }
    out.halfedges_.push_back({f[0], kAbsent});
    out.halfedges_.push_back({f[1], kAbsent});
    out.halfedges_.push_back({f[2], kAbsent});
  }
  const HalfEdgeIndex count = out.num_halfedges();

  // Undirected usage first: three faces on one edge would otherwise surface
  // as a duplicate directed edge, which hides the actual defect.
  struct Usage {
    int32_t uses;
    FaceIndex first_face;
  };
  std::unordered_map<uint64_t, Usage> usage;
  usage.reserve(static_cast<std::size_t>(count));
  for (HalfEdgeIndex h = 0; h < count; ++h) {
    const VertexIndex a = out.Origin(h);
    const VertexIndex b = out.Destination(h);
    const VertexIndex lo = a < b ? a : b;
    const VertexIndex hi = a < b ? b : a;
    auto [it, inserted] = usage.try_emplace(EdgeKey(lo, hi), Usage{0, FaceOf(h)});
    if (++it->second.uses > 2) {
      throw NonManifoldError(NonManifoldError::Kind::kEdgeOveruse, lo, hi,
                             it->second.first_face, FaceOf(h));
    }
  }

  std::unordered_map<uint64_t, HalfEdgeIndex> directed;
  directed.reserve(static_cast<std::size_t>(count));
  for (HalfEdgeIndex h = 0; h < count; ++h) {
    const VertexIndex a = out.Origin(h);
    const VertexIndex b = out.Destination(h);
    const auto [it, inserted] = directed.try_emplace(EdgeKey(a, b), h);
    if (!inserted) {
      throw NonManifoldError(NonManifoldError::Kind::kDuplicateDirectedEdge, a,
                             b, FaceOf(it->second), FaceOf(h));
    }
  }

  out.boundary_.assign(static_cast<std::size_t>(out.num_vertices_), 0);
  for (HalfEdgeIndex h = 0; h < count; ++h) {
    const VertexIndex a = out.Origin(h);
    const VertexIndex b = out.Destination(h);
    const auto it = directed.find(EdgeKey(b, a));
    if (it != directed.end()) {
      out.halfedges_[h].twin = it->second;
    } else {
      out.boundary_[a] = 1;
      out.boundary_[b] = 1;
    }
  }
  return out;
}

std::vector<VertexIndex> HalfEdgeMesh::BoundaryVertices() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < num_vertices_; ++v) {
    if (boundary_[v]) out.push_back(v);
  }
  return out;
}

}  // namespace edgetok
