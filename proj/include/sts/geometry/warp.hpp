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

#include <cmath>

#include "sts/core/homography.hpp"
#include "sts/core/image.hpp"

namespace sts {

/// Per-output-pixel source coordinates (2 channels: x, y). Out-of-bounds
/// positions keep their finite values; validity is the in-rectangle test
/// against the source image at sample time.
struct SampleGrid {
    ImageF coords;

    static SampleGrid from_homography(const Homography& h, int out_w, int out_h) {
        SampleGrid g;
        g.coords = ImageF(out_w, out_h, 2);
        for (int y = 0; y < out_h; ++y)
            for (int x = 0; x < out_w; ++x) {
                Vec2 s = h.apply({double(x), double(y)});
                g.coords.at(x, y, 0) = static_cast<float>(s.x);
                g.coords.at(x, y, 1) = static_cast<float>(s.y);
            }
        return g;
    }
};

/// Bilinear read at a continuous position; zero outside [0, w-1] x [0, h-1].
inline float bilinear_at(const ImageF& img, double sx, double sy, int c) {
    const int w = img.width(), h = img.height();
    if (sx < 0.0 || sy < 0.0 || sx > w - 1 || sy > h - 1) return 0.0f;
    int x0 = static_cast<int>(std::floor(sx));
    int y0 = static_cast<int>(std::floor(sy));
    int x1 = std::min(x0 + 1, w - 1);
    int y1 = std::min(y0 + 1, h - 1);
    double fx = sx - x0, fy = sy - y0;
    double v00 = img.at(x0, y0, c), v10 = img.at(x1, y0, c);
    double v01 = img.at(x0, y1, c), v11 = img.at(x1, y1, c);
    double v0 = v00 + (v10 - v00) * fx;
    double v1 = v01 + (v11 - v01) * fx;
    return static_cast<float>(v0 + (v1 - v0) * fy);
}

/// Inverse-mapped bilinear warp: every output pixel samples the source at
/// its h-mapped position; out-of-bounds samples are zero in all channels.
inline ImageF warp_sample(const ImageF& patch, const Homography& h, int out_w,
                          int out_h) {
    ImageF out(out_w, out_h, patch.channels());
    for (int y = 0; y < out_h; ++y)
        for (int x = 0; x < out_w; ++x) {
            Vec2 s = h.apply({double(x), double(y)});
            for (int c = 0; c < patch.channels(); ++c)
                out.at(x, y, c) = bilinear_at(patch, s.x, s.y, c);
        }
    return out;
}

/// Warps by the forward transform `a` (source -> destination frame).
inline ImageF warp_forward(const ImageF& patch, const Homography& a, int out_w,
                           int out_h) {
    return warp_sample(patch, a.inverse(), out_w, out_h);
}

/// Alpha compositing: text over background, per channel.
inline ImageF compose_over(const ImageF& text_rgb, const ImageF& alpha,
                           const ImageF& background) {
    if (!text_rgb.same_shape(background))
        throw ShapeError("compose_over: text and background shapes differ");
    if (alpha.width() != text_rgb.width() || alpha.height() != text_rgb.height())
        throw ShapeError("compose_over: alpha dimensions differ");
    ImageF out(background.width(), background.height(), background.channels());
    for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x) {
            float a = alpha.at(x, y);
            for (int c = 0; c < out.channels(); ++c)
                out.at(x, y, c) =
                    text_rgb.at(x, y, c) * a + background.at(x, y, c) * (1.0f - a);
        }
    return out;
}

}  // namespace sts
