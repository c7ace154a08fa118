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
#include "edgetok/augment.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "edgetok/errors.h"

namespace edgetok {

void ValidateAugmentOptions(const AugmentOptions &options) {
  if (!(options.scale_min > 0.0 && options.scale_min <= options.scale_max &&
        options.scale_max <= 1.0)) {
    throw Error("scale range must satisfy 0 < min <= max <= 1");
  }
  if (!(options.max_rotation_degrees >= 0.0)) {
    throw Error("rotation bound must be non-negative");
  }
}

AugmentedMesh Augment(const RawMesh &mesh, const AugmentOptions &options,
                      uint64_t stream) {
  ValidateAugmentOptions(options);

  // SplitMix-style mixing keeps neighbouring streams uncorrelated.
  uint64_t z = options.seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  std::mt19937_64 rng(z ^ (z >> 31));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  AugmentedMesh out;
  out.rotation_degrees =
      options.max_rotation_degrees * (2.0 * unit(rng) - 1.0);
  out.scale = options.scale_min + (options.scale_max - options.scale_min) *
                                      unit(rng);

  // Zero draws leave the coordinates bit-identical to plain normalization.
  RawMesh rotated = mesh;
  if (out.rotation_degrees != 0.0) {
    const double angle = out.rotation_degrees * std::acos(-1.0) / 180.0;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (Vec3d &p : rotated.vertices) {
      p = {c * p[0] + s * p[2], p[1], -s * p[0] + c * p[2]};
    }
  }

  out.mesh = Normalize(rotated).first;
  if (out.scale != 1.0) {
    for (Vec3d &p : out.mesh.vertices) {
      for (double &x : p) {
        x = std::clamp(0.5 + out.scale * (x - 0.5), 0.0, 1.0);
      }
    }
  }
  return out;
}

QuantizedMesh PrepareAugmented(const RawMesh &mesh,
                               const AugmentOptions &options, uint64_t stream,
                               int32_t resolution) {
  return Clean(Quantize(Augment(mesh, options, stream).mesh, resolution));
}

}  // namespace edgetok
