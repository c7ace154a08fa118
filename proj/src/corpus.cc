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
#include "edgetok/corpus.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace edgetok {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Appends the two triangles of quad a-b-c-d (counter-clockwise).
void AddQuad(RawMesh *mesh, VertexIndex a, VertexIndex b, VertexIndex c,
             VertexIndex d) {
  mesh->faces.push_back({a, b, c});
  mesh->faces.push_back({a, c, d});
}

VertexIndex AddVertex(RawMesh *mesh, double x, double y, double z) {
  mesh->vertices.push_back({x, y, z});
  return static_cast<VertexIndex>(mesh->vertices.size() - 1);
}

}  // namespace

RawMesh MakeGrid(int nx, int ny) {
  RawMesh mesh;
  const auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const double x = static_cast<double>(i) / nx;
      const double y = static_cast<double>(j) / ny;
      AddVertex(&mesh, x, y, 0.1 * std::sin(3.0 * x) * std::cos(2.0 * y));
    }
  }
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      AddQuad(&mesh, id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
    }
  }
  return mesh;
}

RawMesh MakeFan(int n, bool hub_first) {
  RawMesh mesh;
  const VertexIndex hub = AddVertex(&mesh, 0.0, 0.0, 0.2);
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * kPi * i / n;
    AddVertex(&mesh, std::cos(a), std::sin(a), 0.0);
  }
  for (int i = 0; i < n; ++i) {
    const VertexIndex r0 = 1 + i;
    const VertexIndex r1 = 1 + (i + 1) % n;
    if (hub_first) {
      mesh.faces.push_back({hub, r0, r1});
    } else {
      mesh.faces.push_back({r0, r1, hub});
    }
  }
  return mesh;
}

RawMesh MakeStrip(int n) {
  RawMesh mesh;
  const int columns = n / 2 + 2;
  for (int k = 0; k < columns; ++k) {
    AddVertex(&mesh, k, 0.0, 0.0);          // bottom, index 2k
    AddVertex(&mesh, k + 0.5, 1.0, 0.1);    // top, index 2k + 1
  }
  for (int f = 0; f < n; ++f) {
    const int k = f / 2;
    const VertexIndex b0 = 2 * k, t0 = 2 * k + 1;
    const VertexIndex b1 = 2 * k + 2, t1 = 2 * k + 3;
    if (f % 2 == 0) {
      mesh.faces.push_back({b0, b1, t0});
    } else {
      mesh.faces.push_back({t0, b1, t1});
    }
  }
  // Drop trailing vertices no face uses.
  VertexIndex used = 0;
  for (const Face &f : mesh.faces) {
    used = std::max({used, f[0] + 1, f[1] + 1, f[2] + 1});
  }
  mesh.vertices.resize(static_cast<std::size_t>(used));
  return mesh;
}

namespace {

// Shared builder for spheres and domes: a pole plus |rings| latitude rings.
RawMesh LatLong(int slices, int stacks, int rings, bool close_bottom) {
  RawMesh mesh;
  const VertexIndex north = AddVertex(&mesh, 0.0, 1.0, 0.0);
  const auto id = [slices](int ring, int i) {
    return 1 + (ring - 1) * slices + (i % slices);
  };
  for (int ring = 1; ring <= rings; ++ring) {
    const double theta = kPi * ring / stacks;
    for (int i = 0; i < slices; ++i) {
      const double phi = 2.0 * kPi * i / slices;
      AddVertex(&mesh, std::sin(theta) * std::cos(phi), std::cos(theta),
                std::sin(theta) * std::sin(phi));
    }
  }
  for (int i = 0; i < slices; ++i) {
    mesh.faces.push_back({north, id(1, i), id(1, i + 1)});
  }
  for (int ring = 1; ring < rings; ++ring) {
    for (int i = 0; i < slices; ++i) {
      AddQuad(&mesh, id(ring, i), id(ring + 1, i), id(ring + 1, i + 1),
              id(ring, i + 1));
    }
  }
  if (close_bottom) {
    const VertexIndex south = AddVertex(&mesh, 0.0, -1.0, 0.0);
    for (int i = 0; i < slices; ++i) {
      mesh.faces.push_back({south, id(rings, i + 1), id(rings, i)});
    }
  }
  return mesh;
}

}  // namespace

RawMesh MakeUvSphere(int slices, int stacks) {
  return LatLong(slices, stacks, stacks - 1, true);
}

RawMesh MakeDome(int slices, int bands) {
  return LatLong(slices, 2 * bands + 2, bands, false);
}

RawMesh MakeTorus(int major, int minor) {
  RawMesh mesh;
  const auto id = [major, minor](int i, int j) {
    return (i % major) * minor + (j % minor);
  };
  for (int i = 0; i < major; ++i) {
    const double u = 2.0 * kPi * i / major;
    for (int j = 0; j < minor; ++j) {
      const double v = 2.0 * kPi * j / minor;
      const double r = 1.0 + 0.35 * std::cos(v);
      AddVertex(&mesh, r * std::cos(u), 0.35 * std::sin(v), r * std::sin(u));
    }
  }
  for (int i = 0; i < major; ++i) {
    for (int j = 0; j < minor; ++j) {
      AddQuad(&mesh, id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
    }
  }
  return mesh;
}

RawMesh MakeCylinder(int slices, int rings) {
  RawMesh mesh;
  const auto id = [slices](int ring, int i) {
    return ring * slices + (i % slices);
  };
  for (int ring = 0; ring <= rings; ++ring) {
    for (int i = 0; i < slices; ++i) {
      const double a = 2.0 * kPi * i / slices;
      AddVertex(&mesh, std::cos(a), 1.5 * ring / rings, std::sin(a));
    }
  }
  for (int ring = 0; ring < rings; ++ring) {
    for (int i = 0; i < slices; ++i) {
      AddQuad(&mesh, id(ring, i), id(ring, i + 1), id(ring + 1, i + 1),
              id(ring + 1, i));
    }
  }
  return mesh;
}

RawMesh MakeCone(int slices) {
  RawMesh mesh;
  const VertexIndex apex = AddVertex(&mesh, 0.0, 1.2, 0.0);
  const VertexIndex center = AddVertex(&mesh, 0.0, 0.0, 0.0);
  for (int i = 0; i < slices; ++i) {
    const double a = 2.0 * kPi * i / slices;
    AddVertex(&mesh, std::cos(a), 0.0, std::sin(a));
  }
  for (int i = 0; i < slices; ++i) {
    const VertexIndex r0 = 2 + i;
    const VertexIndex r1 = 2 + (i + 1) % slices;
    mesh.faces.push_back({apex, r1, r0});
    mesh.faces.push_back({center, r0, r1});
  }
  return mesh;
}

RawMesh MakeAnnulus(int slices, int rings) {
  RawMesh mesh;
  const auto id = [slices](int ring, int i) {
    return ring * slices + (i % slices);
  };
  for (int ring = 0; ring <= rings; ++ring) {
    const double radius = 0.4 + 0.6 * ring / rings;
    for (int i = 0; i < slices; ++i) {
      const double a = 2.0 * kPi * i / slices;
      AddVertex(&mesh, radius * std::cos(a), radius * std::sin(a),
                0.05 * std::sin(3.0 * a));
    }
  }
  for (int ring = 0; ring < rings; ++ring) {
    for (int i = 0; i < slices; ++i) {
      AddQuad(&mesh, id(ring, i), id(ring + 1, i), id(ring + 1, i + 1),
              id(ring, i + 1));
    }
  }
  return mesh;
}

RawMesh MakeIcosphere(int level) {
  RawMesh mesh;
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  const double base[12][3] = {{-1, t, 0}, {1, t, 0},   {-1, -t, 0}, {1, -t, 0},
                              {0, -1, t}, {0, 1, t},   {0, -1, -t}, {0, 1, -t},
                              {t, 0, -1}, {t, 0, 1},   {-t, 0, -1}, {-t, 0, 1}};
  for (const auto &p : base) {
    const double len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    AddVertex(&mesh, p[0] / len, p[1] / len, p[2] / len);
  }
  mesh.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int l = 0; l < level; ++l) {
    std::map<std::pair<VertexIndex, VertexIndex>, VertexIndex> midpoint;
    const auto mid = [&](VertexIndex a, VertexIndex b) {
      const auto key = std::minmax(a, b);
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Vec3d &p = mesh.vertices[a];
      const Vec3d &q = mesh.vertices[b];
      Vec3d m{(p[0] + q[0]) / 2, (p[1] + q[1]) / 2, (p[2] + q[2]) / 2};
      const double len = std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
      const VertexIndex v =
          AddVertex(&mesh, m[0] / len, m[1] / len, m[2] / len);
      midpoint.emplace(key, v);
      return v;
    };
    std::vector<Face> next;
    next.reserve(mesh.faces.size() * 4);
    for (const Face &f : mesh.faces) {
      const VertexIndex ab = mid(f[0], f[1]);
      const VertexIndex bc = mid(f[1], f[2]);
      const VertexIndex ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    mesh.faces = std::move(next);
  }
  return mesh;
}

RawMesh MakeTetrahedron() {
  RawMesh mesh;
  mesh.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.3, 1.0, 0.0},
                   {0.4, 0.3, 0.9}};
  mesh.faces = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  return mesh;
}

RawMesh MakeOctahedron() {
  RawMesh mesh;
  mesh.vertices = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                   {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  mesh.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return mesh;
}

RawMesh MakeGoldenMesh() {
  RawMesh mesh;
  mesh.vertices = {
      {0.0, 0.0, 0.0},    // 1
      {-1.0, 0.8, 0.1},   // 2
      {0.2, 1.1, 0.0},    // 3
      {1.0, 0.2, -0.1},   // 4
      {1.4, 1.2, 0.2},    // 5
      {0.7, -0.9, 0.0},   // 6
      {-0.3, -1.1, 0.1},  // 7
      {-1.2, -0.3, 0.0},  // 8
      {-2.0, 0.2, 0.3},   // 9
  };
  const int labelled[8][3] = {{2, 3, 1}, {1, 3, 4}, {4, 3, 5}, {1, 4, 6},
                              {1, 6, 7}, {1, 7, 8}, {1, 8, 2}, {2, 8, 9}};
  for (const auto &f : labelled) {
    mesh.faces.push_back({f[0] - 1, f[1] - 1, f[2] - 1});
  }
  return mesh;
}

RawMesh Scramble(const RawMesh &mesh, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexIndex> order(mesh.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  // order[new] = old; invert for face remapping.
  std::vector<VertexIndex> new_index(order.size());
  RawMesh out;
  out.vertices.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = static_cast<VertexIndex>(k);
    out.vertices.push_back(mesh.vertices[order[k]]);
  }
  out.faces.reserve(mesh.faces.size());
  for (const Face &f : mesh.faces) {
    const Face g{new_index[f[0]], new_index[f[1]], new_index[f[2]]};
    const int r = static_cast<int>(rng() % 3);
    out.faces.push_back({g[r], g[(r + 1) % 3], g[(r + 2) % 3]});
  }
  std::shuffle(out.faces.begin(), out.faces.end(), rng);
  return out;
}

std::vector<NamedMesh> ProceduralCorpus() {
  std::vector<NamedMesh> corpus;
  const auto add = [&corpus](std::string name, RawMesh mesh) {
    corpus.push_back({std::move(name), std::move(mesh)});
  };
  add("tetrahedron", MakeTetrahedron());
  add("octahedron", MakeOctahedron());
  add("golden", MakeGoldenMesh());
  for (int level = 0; level <= 3; ++level) {
    add("icosphere_" + std::to_string(level), MakeIcosphere(level));
  }
  for (int n : {5, 12, 40, 200}) {
    add("fan_" + std::to_string(n), MakeFan(n, true));
  }
  for (int n : {12, 300}) {
    add("fan_hub_last_" + std::to_string(n), MakeFan(n, false));
  }
  for (int n : {4, 30, 250, 1000}) {
    add("strip_" + std::to_string(n), MakeStrip(n));
  }
  for (auto [nx, ny] : {std::pair{2, 2}, {5, 4}, {10, 10}, {16, 16}, {25, 20},
                        {40, 25}, {50, 40}}) {
    add("grid_" + std::to_string(nx) + "x" + std::to_string(ny),
        MakeGrid(nx, ny));
  }
  for (auto [slices, stacks] : {std::pair{8, 4}, {16, 8}, {24, 12}, {32, 16},
                                {48, 24}, {64, 32}}) {
    add("uvsphere_" + std::to_string(slices) + "x" + std::to_string(stacks),
        MakeUvSphere(slices, stacks));
  }
  for (auto [slices, bands] : {std::pair{12, 3}, {32, 8}}) {
    add("dome_" + std::to_string(slices) + "x" + std::to_string(bands),
        MakeDome(slices, bands));
  }
  for (auto [major, minor] : {std::pair{8, 4}, {16, 8}, {30, 12}, {40, 20},
                              {50, 40}}) {
    add("torus_" + std::to_string(major) + "x" + std::to_string(minor),
        MakeTorus(major, minor));
  }
  for (auto [slices, rings] : {std::pair{8, 3}, {20, 10}, {40, 30}}) {
    add("cylinder_" + std::to_string(slices) + "x" + std::to_string(rings),
        MakeCylinder(slices, rings));
  }
  for (int slices : {6, 50, 150}) {
    add("cone_" + std::to_string(slices), MakeCone(slices));
  }
  for (auto [slices, rings] : {std::pair{12, 2}, {30, 8}, {60, 20}}) {
    add("annulus_" + std::to_string(slices) + "x" + std::to_string(rings),
        MakeAnnulus(slices, rings));
  }
  uint64_t seed = 1;
  for (const char *name : {"grid_16x16", "torus_30x12", "uvsphere_24x12",
                           "icosphere_3", "fan_40", "cylinder_20x10",
                           "dome_32x8"}) {
    const auto it =
        std::find_if(corpus.begin(), corpus.end(),
                     [name](const NamedMesh &m) { return m.name == name; });
    RawMesh scrambled = Scramble(it->mesh, seed++);
    add(std::string(name) + "_scrambled", std::move(scrambled));
  }
  return corpus;
}

}  // namespace edgetok
