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
#include "edgetok/mesh.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "edgetok/errors.h"

namespace edgetok {
namespace {

constexpr double kUnitCubeTolerance = 1e-9;

struct GridPointHash {
  std::size_t operator()(const GridPoint &p) const {
    uint64_t h = static_cast<uint32_t>(p[0]);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<uint32_t>(p[1]);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<uint32_t>(p[2]);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Rotates |f| so that its smallest index comes first, keeping the winding.
Face LeastRotation(const Face &f) {
  if (f[1] < f[0] && f[1] <= f[2]) return {f[1], f[2], f[0]};
  if (f[2] < f[0] && f[2] < f[1]) return {f[2], f[0], f[1]};
  return f;
}

bool IsDegenerate(const Face &f) {
  return f[0] == f[1] || f[1] == f[2] || f[0] == f[2];
}

}  // namespace

std::pair<RawMesh, NormalizationTransform> Normalize(const RawMesh &mesh) {
  if (mesh.vertices.empty()) {
    throw MeshError("cannot normalize a mesh without vertices");
  }
  Vec3d lo = mesh.vertices.front();
  Vec3d hi = lo;
  for (const Vec3d &p : mesh.vertices) {
    for (int axis = 0; axis < 3; ++axis) {
      lo[axis] = std::min(lo[axis], p[axis]);
      hi[axis] = std::max(hi[axis], p[axis]);
    }
  }
  double extent = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    extent = std::max(extent, hi[axis] - lo[axis]);
  }
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw MeshError("degenerate bounding box: all vertices coincide");
  }

  NormalizationTransform transform;
  transform.translation = {0.0 - lo[0], 0.0 - lo[1], 0.0 - lo[2]};
  transform.scale = 1.0 / extent;

  RawMesh out;
  out.faces = mesh.faces;
  out.vertices.reserve(mesh.vertices.size());
  // Dividing by the extent (rather than multiplying by its reciprocal) makes
  // the longest axis land on exactly 1.0.
  for (const Vec3d &p : mesh.vertices) {
    out.vertices.push_back({(p[0] - lo[0]) / extent, (p[1] - lo[1]) / extent,
                            (p[2] - lo[2]) / extent});
  }
  return {std::move(out), transform};
}

int32_t QuantizeValue(double v, int32_t resolution) {
  if (!(v >= -kUnitCubeTolerance && v <= 1.0 + kUnitCubeTolerance)) {
    throw MeshError("coordinate " + std::to_string(v) +
                    " lies outside the unit cube");
  }
  const double scaled = std::floor(v * static_cast<double>(resolution));
  return static_cast<int32_t>(
      std::clamp(scaled, 0.0, static_cast<double>(resolution - 1)));
}

QuantizedMesh Quantize(const RawMesh &mesh, int32_t resolution) {
  if (resolution < 2) {
    throw MeshError("quantization resolution must be at least 2");
  }
  QuantizedMesh out;
  out.resolution = resolution;
  out.faces = mesh.faces;
  out.vertices.reserve(mesh.vertices.size());
  for (const Vec3d &p : mesh.vertices) {
    out.vertices.push_back({QuantizeValue(p[0], resolution),
                            QuantizeValue(p[1], resolution),
                            QuantizeValue(p[2], resolution)});
  }
  return out;
}

RawMesh Dequantize(const QuantizedMesh &mesh) {
  RawMesh out;
  out.faces = mesh.faces;
  out.vertices.reserve(mesh.vertices.size());
  for (const GridPoint &q : mesh.vertices) {
    out.vertices.push_back({DequantizeValue(q[0], mesh.resolution),
                            DequantizeValue(q[1], mesh.resolution),
                            DequantizeValue(q[2], mesh.resolution)});
  }
  return out;
}

QuantizedMesh Clean(const QuantizedMesh &mesh) {
  QuantizedMesh out;
  out.resolution = mesh.resolution;

  std::unordered_map<GridPoint, VertexIndex, GridPointHash> cell_to_vertex;
  cell_to_vertex.reserve(mesh.vertices.size());
  std::vector<VertexIndex> remap(mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const auto [it, inserted] = cell_to_vertex.try_emplace(
        mesh.vertices[i], static_cast<VertexIndex>(out.vertices.size()));
    if (inserted) out.vertices.push_back(mesh.vertices[i]);
    remap[i] = it->second;
  }

  std::set<Face> seen;
  out.faces.reserve(mesh.faces.size());
  const auto lookup = [&](VertexIndex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= remap.size()) {
      throw MeshError("face references missing vertex " + std::to_string(v));
    }
    return remap[v];
  };
  for (const Face &f : mesh.faces) {
    const Face mapped{lookup(f[0]), lookup(f[1]), lookup(f[2])};
    if (IsDegenerate(mapped)) continue;
    if (!seen.insert(LeastRotation(mapped)).second) continue;
    out.faces.push_back(mapped);
  }
  return out;
}

QuantizedMesh PrepareMesh(const RawMesh &mesh, int32_t resolution) {
  return Clean(Quantize(Normalize(mesh).first, resolution));
}

QuantizedMesh Canonicalize(const QuantizedMesh &mesh) {
  std::map<GridPoint, VertexIndex> order;
  for (const Face &f : mesh.faces) {
    for (VertexIndex v : f) order.emplace(mesh.vertices.at(v), 0);
  }
  QuantizedMesh out;
  out.resolution = mesh.resolution;
  out.vertices.reserve(order.size());
  for (auto &[point, index] : order) {
    index = static_cast<VertexIndex>(out.vertices.size());
    out.vertices.push_back(point);
  }
  out.faces.reserve(mesh.faces.size());
  for (const Face &f : mesh.faces) {
    out.faces.push_back(LeastRotation({order[mesh.vertices[f[0]]],
                                       order[mesh.vertices[f[1]]],
                                       order[mesh.vertices[f[2]]]}));
  }
  std::sort(out.faces.begin(), out.faces.end());
  return out;
}

bool CanonicallyEqual(const QuantizedMesh &a, const QuantizedMesh &b) {
  return Canonicalize(a) == Canonicalize(b);
}

}  // namespace edgetok
