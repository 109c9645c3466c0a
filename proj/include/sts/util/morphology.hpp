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

#include <vector>

#include "sts/core/image.hpp"

namespace sts {

namespace detail {

// Separable sliding max/min for the square structuring element.
inline ImageU8 window_extreme(const ImageU8& src, int radius, bool take_max,
                              uint8_t oob) {
    const int w = src.width(), h = src.height();
    ImageU8 tmp(w, h, 1), out(w, h, 1);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            uint8_t v = take_max ? 0 : 1;
            for (int i = -radius; i <= radius; ++i) {
                int xi = x + i;
                uint8_t s = (xi < 0 || xi >= w) ? oob : src.at(xi, y);
                v = take_max ? std::max(v, s) : std::min(v, s);
            }
            tmp.at(x, y) = v;
        }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            uint8_t v = take_max ? 0 : 1;
            for (int i = -radius; i <= radius; ++i) {
                int yi = y + i;
                uint8_t s = (yi < 0 || yi >= h) ? oob : tmp.at(x, yi);
                v = take_max ? std::max(v, s) : std::min(v, s);
            }
            out.at(x, y) = v;
        }
    return out;
}

}  // namespace detail

/// Binary dilation with a square structuring element of Chebyshev radius r.
inline ImageU8 dilate(const ImageU8& mask, int radius) {
    if (radius <= 0) return mask;
    return detail::window_extreme(mask, radius, /*take_max=*/true, /*oob=*/0);
}

/// Binary erosion; out-of-bounds neighbors count as set so the border is
/// not eaten away.
inline ImageU8 erode(const ImageU8& mask, int radius) {
    if (radius <= 0) return mask;
    return detail::window_extreme(mask, radius, /*take_max=*/false, /*oob=*/1);
}

/// Closing (dilate then erode). Extensive for this border convention, but
/// the result is OR-ed with the input anyway so callers can rely on it.
inline ImageU8 close_holes(const ImageU8& mask, int radius) {
    if (radius <= 0) return mask;
    ImageU8 out = erode(dilate(mask, radius), radius);
    for (size_t i = 0; i < out.size(); ++i)
        out.data()[i] = out.data()[i] | mask.data()[i];
    return out;
}

struct Component {
    std::vector<int> pixels;  // linear indices y * width + x
    size_t area() const { return pixels.size(); }
};

/// 4-connected components of the nonzero support, labeled in scan order.
inline std::vector<Component> connected_components(const ImageU8& mask) {
    const int w = mask.width(), h = mask.height();
    std::vector<int> label(static_cast<size_t>(w) * h, -1);
    std::vector<Component> comps;
    std::vector<int> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int idx = y * w + x;
            if (!mask.data()[idx] || label[idx] >= 0) continue;
            int id = static_cast<int>(comps.size());
            comps.emplace_back();
            stack.assign(1, idx);
            label[idx] = id;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                comps[id].pixels.push_back(cur);
                int cx = cur % w, cy = cur / w;
                const int nx[4] = {cx - 1, cx + 1, cx, cx};
                const int ny[4] = {cy, cy, cy - 1, cy + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h)
                        continue;
                    int n = ny[k] * w + nx[k];
                    if (mask.data()[n] && label[n] < 0) {
                        label[n] = id;
                        stack.push_back(n);
                    }
                }
            }
        }
    }
    return comps;
}

}  // namespace sts
