// Copyright 2026 The stsynth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sts/core/image.hpp"
#include "sts/core/quad.hpp"

namespace sts {

constexpr int kPatchSize = 256;

/// Per-instance binary ink mask at the parent image's dimensions.
struct StrokeMask {
    ImageU8 bitmap;  // single channel, values 0/1
    int instance_id = -1;

    bool empty_mask() const {
        for (size_t i = 0; i < bitmap.size(); ++i)
            if (bitmap.data()[i]) return false;
        return true;
    }
    size_t area() const {
        size_t n = 0;
        for (size_t i = 0; i < bitmap.size(); ++i)
            if (bitmap.data()[i]) ++n;
        return n;
    }
};

/// Five-channel 256x256 text patch: RGB, pixel alpha, and box-level mask.
struct TextPatch {
    ImageU8 rgb;       // 3 channels
    ImageF alpha;      // 1 channel, rasterizer coverage in [0, 1]
    ImageU8 bbox_mask; // 1 channel, 0/1, axis-aligned bounding box of alpha
    std::string text;
    std::optional<QuadBox> rect;  // reference square in background coordinates
};

struct SceneInstance {
    QuadBox quad;
    StrokeMask mask;
    bool valid = false;
    std::optional<std::string> text;
};

/// One dataset quadruplet: original image, erased background, and the
/// per-instance boxes/masks/validity flags.
struct SceneRecord {
    std::string id;
    std::string source;
    ImageU8 original;  // RGB
    ImageU8 erased;    // RGB, same dimensions
    std::vector<SceneInstance> instances;
};

struct SynthInstance {
    QuadBox quad;
    StrokeMask mask;
    std::string text;
};

/// One generated sample: composite plus detection-ready annotations.
struct SynthRecord {
    ImageU8 image;  // RGB
    std::vector<SynthInstance> instances;
    uint64_t seed = 0;
    std::string provenance;  // background image identifier
    bool empty_synthesis = false;
};

}  // namespace sts
