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
#ifndef EDGETOK_AUGMENT_H_
#define EDGETOK_AUGMENT_H_

#include <cstdint>

#include "edgetok/mesh.h"

namespace edgetok {

struct AugmentOptions {
  // Uniform scale drawn from [scale_min, scale_max]; 1 disables scaling.
  double scale_min = 1.0;
  double scale_max = 1.0;
  // Rotation about the vertical (Y) axis drawn from [-max, max] degrees.
  double max_rotation_degrees = 0.0;
  uint64_t seed = 0;
};

struct AugmentedMesh {
  RawMesh mesh;  // inside [0, 1]^3
  double scale = 1.0;
  double rotation_degrees = 0.0;
};

// Rotates about Y, fits the result to the unit cube, then shrinks it about
// the cube center by the drawn scale without fitting again, so the longest
// axis spans exactly |scale|. |stream| selects an independent draw for the
// same seed (e.g. the file index). Throws Error on an invalid range.
// Throws Error on an empty or out-of-range scale interval or a negative
// rotation bound.
void ValidateAugmentOptions(const AugmentOptions &options);

AugmentedMesh Augment(const RawMesh &mesh, const AugmentOptions &options,
                      uint64_t stream);

// Augment followed by Quantize and Clean.
QuantizedMesh PrepareAugmented(const RawMesh &mesh,
                               const AugmentOptions &options, uint64_t stream,
                               int32_t resolution);

}  // namespace edgetok

#endif  // EDGETOK_AUGMENT_H_
