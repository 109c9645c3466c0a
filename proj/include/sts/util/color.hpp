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

#include <algorithm>
#include <array>
#include <cmath>

#include "sts/core/image.hpp"

namespace sts {

/// ITU-R BT.601 luma of an RGB triple in [0, 1].
inline float luma601(float r, float g, float b) {
    return 0.299f * r + 0.587f * g + 0.114f * b;
}

/// Grayscale (BT.601) conversion of an RGB image in [0, 1].
inline ImageF grayscale(const ImageF& rgb) {
    ImageF out(rgb.width(), rgb.height(), 1);
    for (int y = 0; y < rgb.height(); ++y)
        for (int x = 0; x < rgb.width(); ++x)
            out.at(x, y) =
                luma601(rgb.at(x, y, 0), rgb.at(x, y, 1), rgb.at(x, y, 2));
    return out;
}

struct Hsl {
    double h = 0.0;  // degrees in [0, 360)
    double s = 0.0;
    double l = 0.0;
};

inline Hsl rgb_to_hsl(double r, double g, double b) {
    double mx = std::max({r, g, b}), mn = std::min({r, g, b});
    double l = 0.5 * (mx + mn);
    double d = mx - mn;
    Hsl out;
    out.l = l;
    if (d < 1e-12) return out;  // achromatic
    out.s = l > 0.5 ? d / (2.0 - mx - mn) : d / (mx + mn);
    double h;
    if (mx == r)
        h = (g - b) / d + (g < b ? 6.0 : 0.0);
    else if (mx == g)
        h = (b - r) / d + 2.0;
    else
        h = (r - g) / d + 4.0;
    out.h = h * 60.0;
    return out;
}

inline std::array<double, 3> hsl_to_rgb(const Hsl& in) {
    double h = in.h / 360.0;
    h -= std::floor(h);
    double s = std::clamp(in.s, 0.0, 1.0);
    double l = std::clamp(in.l, 0.0, 1.0);
    if (s < 1e-12) return {l, l, l};
    auto hue = [](double p, double q, double t) {
        if (t < 0) t += 1;
        if (t > 1) t -= 1;
        if (t < 1.0 / 6) return p + (q - p) * 6.0 * t;
        if (t < 1.0 / 2) return q;
        if (t < 2.0 / 3) return p + (q - p) * (2.0 / 3 - t) * 6.0;
        return p;
    };
    double q = l < 0.5 ? l * (1 + s) : l + s - l * s;
    double p = 2 * l - q;
    return {hue(p, q, h + 1.0 / 3), hue(p, q, h), hue(p, q, h - 1.0 / 3)};
}

}  // namespace sts
