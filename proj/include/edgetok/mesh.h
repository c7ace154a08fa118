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
#ifndef EDGETOK_MESH_H_
#define EDGETOK_MESH_H_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace edgetok {

using VertexIndex = int32_t;
using FaceIndex = int32_t;

using Vec3d = std::array<double, 3>;
// Integer grid cell of a quantized vertex, each component in [0, R).
using GridPoint = std::array<int32_t, 3>;
using Face = std::array<VertexIndex, 3>;

// Real-valued triangle mesh as read from disk.
struct RawMesh {
  std::vector<Vec3d> vertices;
  std::vector<Face> faces;
};

// Maps model coordinates into the unit cube: p' = (p + translation) * scale.
struct NormalizationTransform {
  Vec3d translation{0.0, 0.0, 0.0};
  double scale = 1.0;

  Vec3d Apply(const Vec3d &p) const {
    return {(p[0] + translation[0]) * scale, (p[1] + translation[1]) * scale,
            (p[2] + translation[2]) * scale};
  }
};

// Triangle mesh on an R^3 integer grid. This is what the tokenizer consumes
// and the detokenizer produces.
struct QuantizedMesh {
  int32_t resolution = 512;
  std::vector<GridPoint> vertices;
  std::vector<Face> faces;

  friend bool operator==(const QuantizedMesh &,
                         const QuantizedMesh &) = default;
};

constexpr int32_t kDefaultResolution = 512;

// Translates the bounding-box minimum to the origin and divides by the
// longest extent, so the longest axis spans exactly [0, 1] and the aspect
// ratio is kept. Throws MeshError for an empty mesh or zero extent.
std::pair<RawMesh, NormalizationTransform> Normalize(const RawMesh &mesh);

// q = min(floor(v * R), R - 1) per component. Coordinates must lie in [0, 1]
// up to 1e-9 (values within tolerance are clamped); faces are copied as is.
QuantizedMesh Quantize(const RawMesh &mesh, int32_t resolution);

// Cell-center reconstruction v = (q + 0.5) / R.
RawMesh Dequantize(const QuantizedMesh &mesh);

// Scalar forms of the two maps above.
int32_t QuantizeValue(double v, int32_t resolution);
inline double DequantizeValue(int32_t q, int32_t resolution) {
  return (static_cast<double>(q) + 0.5) / static_cast<double>(resolution);
}

// Merges vertices sharing a grid cell (first occurrence wins), drops faces
// with a repeated index and faces that repeat an earlier face up to cyclic
// rotation. Opposite windings are distinct faces and both survive.
QuantizedMesh Clean(const QuantizedMesh &mesh);

// Normalize, Quantize and Clean in sequence.
QuantizedMesh PrepareMesh(const RawMesh &mesh,
                          int32_t resolution = kDefaultResolution);

// Order-independent form of a mesh used for equality checks: the referenced
// vertices sorted lexicographically, each face rotated so its smallest index
// leads, and the face list sorted. Unreferenced vertices are dropped.
QuantizedMesh Canonicalize(const QuantizedMesh &mesh);

bool CanonicallyEqual(const QuantizedMesh &a, const QuantizedMesh &b);

}  // namespace edgetok

#endif  // EDGETOK_MESH_H_
