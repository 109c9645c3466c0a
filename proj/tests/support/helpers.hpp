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

#include <string>
#include <vector>

#include "sts/core/image.hpp"
#include "sts/core/quad.hpp"
#include "sts/util/rng.hpp"

namespace sts::test {

inline std::string asset_dir() { return STS_TEST_ASSET_DIR; }
inline std::string fixture_dir() { return STS_TEST_FIXTURE_DIR; }

inline ImageF random_map(Rng& rng, int w, int h, int ch = 1, float lo = 0.0f,
                         float hi = 1.0f) {
    ImageF img(w, h, ch);
    for (size_t i = 0; i < img.size(); ++i)
        img.data()[i] = static_cast<float>(rng.uniform(lo, hi));
    return img;
}

inline ImageU8 random_rgb(Rng& rng, int w, int h) {
    ImageU8 img(w, h, 3);
    for (size_t i = 0; i < img.size(); ++i)
        img.data()[i] = static_cast<uint8_t>(rng.uniform_int(0, 255));
    return img;
}

inline QuadBox jittered_square(Rng& rng, double cx, double cy, double half,
                               double jitter) {
    QuadBox q = axis_aligned_quad(cx - half, cy - half, cx + half, cy + half);
    for (auto& v : q.p) {
        v.x += rng.uniform(-jitter, jitter);
        v.y += rng.uniform(-jitter, jitter);
    }
    return q;
}

/// Binary-mask IoU of two float maps thresholded at 0.5.
inline double mask_iou(const ImageF& a, const ImageF& b) {
    size_t inter = 0, uni = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        bool pa = a.data()[i] > 0.5f, pb = b.data()[i] > 0.5f;
        inter += pa && pb;
        uni += pa || pb;
    }
    return uni ? static_cast<double>(inter) / uni : 1.0;
}

}  // namespace sts::test
