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
#include "edgetok/obj_io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "edgetok/errors.h"

namespace edgetok {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

// Splits |line| on blanks.
std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

double ParseReal(std::string_view field, std::size_t line_no) {
  // from_chars rejects a leading '+', which some exporters emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("malformed number '" + std::string(field) + "'", line_no);
  }
  return value;
}

long ParseIndex(std::string_view field, std::size_t line_no) {
  const std::string_view head = field.substr(0, field.find('/'));
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(head.data(), head.data() + head.size(), value);
  if (head.empty() || ec != std::errc() || ptr != head.data() + head.size()) {
    throw ParseError("malformed face index '" + std::string(field) + "'",
                     line_no);
  }
  return value;
}

}  // namespace

RawMesh ParseObj(std::string_view text) {
  RawMesh mesh;
  // 0-based indices; range-checked once all vertices are known.
  std::vector<std::pair<long, std::size_t>> pending;
  std::vector<long> polygon;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = SplitFields(line);
    if (fields.empty() || fields[0].front() == '#') continue;

    if (fields[0] == "v") {
      if (fields.size() < 4) {
        throw ParseError("vertex record needs 3 coordinates", line_no);
      }
      mesh.vertices.push_back({ParseReal(fields[1], line_no),
                               ParseReal(fields[2], line_no),
                               ParseReal(fields[3], line_no)});
    } else if (fields[0] == "f") {
      if (fields.size() < 4) {
        throw ParseError("face record needs at least 3 vertices", line_no);
      }
      polygon.clear();
      for (std::size_t i = 1; i < fields.size(); ++i) {
        long index = ParseIndex(fields[i], line_no);
        if (index == 0) throw ParseError("face index 0 is invalid", line_no);
        index = index > 0 ? index - 1
                          : static_cast<long>(mesh.vertices.size()) + index;
        if (index < 0) {
          throw ParseError("relative face index before first vertex",
                           line_no);
        }
        polygon.push_back(index);
      }
      for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
        for (long v : {polygon[0], polygon[i], polygon[i + 1]}) {
          pending.emplace_back(v, line_no);
        }
      }
    }
  }

  mesh.faces.reserve(pending.size() / 3);
  for (std::size_t i = 0; i < pending.size(); i += 3) {
    Face face;
    for (int k = 0; k < 3; ++k) {
      const auto [index, where] = pending[i + k];
      if (index >= static_cast<long>(mesh.vertices.size())) {
        throw ParseError("face index " + std::to_string(index + 1) +
                             " out of range (" +
                             std::to_string(mesh.vertices.size()) +
                             " vertices)",
                         where);
      }
      face[k] = static_cast<VertexIndex>(index);
    }
    mesh.faces.push_back(face);
  }
  return mesh;
}

RawMesh ReadObjFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ParseObj(buffer.str());
}

namespace {

void WriteText(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

void AppendFaces(const std::vector<Face> &faces, std::string *out) {
  char line[64];
  for (const Face &f : faces) {
    const int n =
        std::snprintf(line, sizeof(line), "f %d %d %d\n", f[0] + 1, f[1] + 1,
                      f[2] + 1);
    out->append(line, n);
  }
}

}  // namespace

std::string WriteObj(const QuantizedMesh &mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 24);
  char line[128];
  for (const GridPoint &q : mesh.vertices) {
    const int n = std::snprintf(line, sizeof(line), "v %.9g %.9g %.9g\n",
                                DequantizeValue(q[0], mesh.resolution),
                                DequantizeValue(q[1], mesh.resolution),
                                DequantizeValue(q[2], mesh.resolution));
    out.append(line, n);
  }
  AppendFaces(mesh.faces, &out);
  return out;
}

void WriteObjFile(const std::filesystem::path &path,
                  const QuantizedMesh &mesh) {
  WriteText(path, WriteObj(mesh));
}

std::string WriteObj(const RawMesh &mesh) {
  std::string out;
  char line[128];
  for (const Vec3d &p : mesh.vertices) {
    const int n = std::snprintf(line, sizeof(line), "v %.17g %.17g %.17g\n",
                                p[0], p[1], p[2]);
    out.append(line, n);
  }
  AppendFaces(mesh.faces, &out);
  return out;
}

void WriteObjFile(const std::filesystem::path &path, const RawMesh &mesh) {
  WriteText(path, WriteObj(mesh));
}

}  // namespace edgetok
