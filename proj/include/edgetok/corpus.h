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
#ifndef EDGETOK_CORPUS_H_
#define EDGETOK_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "edgetok/mesh.h"

namespace edgetok {

// Procedural, consistently wound test meshes. Face counts are given next to
// each generator.

// Open height-field grid, 2 * nx * ny faces.
RawMesh MakeGrid(int nx, int ny);
// Closed disk of n triangles around one interior hub vertex. The hub is
// listed first in every face when |hub_first|, last otherwise.
RawMesh MakeFan(int n, bool hub_first = true);
// Zig-zag strip of n faces.
RawMesh MakeStrip(int n);
// Latitude/longitude sphere, 2 * slices * (stacks - 1) faces.
RawMesh MakeUvSphere(int slices, int stacks);
// Upper part of a latitude/longitude sphere left open at the bottom,
// 2 * slices * bands - slices faces.
RawMesh MakeDome(int slices, int bands);
// 2 * major * minor faces, genus one.
RawMesh MakeTorus(int major, int minor);
// Open tube, 2 * slices * rings faces.
RawMesh MakeCylinder(int slices, int rings);
// Closed cone with a fanned base, 2 * slices faces.
RawMesh MakeCone(int slices);
// Flat ring with a hole, 2 * slices * rings faces.
RawMesh MakeAnnulus(int slices, int rings);
// Subdivided icosahedron, 20 * 4^level faces.
RawMesh MakeIcosphere(int level);
RawMesh MakeTetrahedron();
RawMesh MakeOctahedron();

// Nine-vertex, eight-face patch used as the worked traversal example.
// Vertex label k (1-based) is index k - 1; faces are
// (2,3,1) (1,3,4) (4,3,5) (1,4,6) (1,6,7) (1,7,8) (1,8,2) (2,8,9).
RawMesh MakeGoldenMesh();

// Same surface with vertices renumbered, faces reordered and each face's
// corner list rotated. Deterministic for a given seed.
RawMesh Scramble(const RawMesh &mesh, uint64_t seed);

struct NamedMesh {
  std::string name;
  RawMesh mesh;
};

// Fixed collection of more than fifty open and closed meshes with 4 to 4000
// faces, all of which survive quantization at 512 without merges.
std::vector<NamedMesh> ProceduralCorpus();

}  // namespace edgetok

#endif  // EDGETOK_CORPUS_H_
