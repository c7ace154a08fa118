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
#ifndef EDGETOK_OBJ_IO_H_
#define EDGETOK_OBJ_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "edgetok/mesh.h"

namespace edgetok {

// Reads the `v` and `f` records of Wavefront OBJ text. Everything after a `/`
// in a face entry is ignored, negative indices count back from the last
// vertex read so far, and polygons are fan-triangulated from their first
// corner. Throws ParseError.
RawMesh ParseObj(std::string_view text);

RawMesh ReadObjFile(const std::filesystem::path &path);

// Writes dequantized vertices (9 significant digits) and 1-based faces.
std::string WriteObj(const QuantizedMesh &mesh);

void WriteObjFile(const std::filesystem::path &path, const QuantizedMesh &mesh);

// Raw coordinates at full double precision.
std::string WriteObj(const RawMesh &mesh);
void WriteObjFile(const std::filesystem::path &path, const RawMesh &mesh);

}  // namespace edgetok

#endif  // EDGETOK_OBJ_IO_H_
