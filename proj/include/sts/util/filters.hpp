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
#include <vector>

#include "sts/core/image.hpp"

namespace sts {

/// 3x3 Sobel gradient magnitude of a single-channel image, borders
/// replicated. Not normalized.
inline ImageF sobel_magnitude(const ImageF& gray) {
    const int w = gray.width(), h = gray.height();
    ImageF out(w, h, 1);
    auto px = [&](int x, int y) {
        x = std::clamp(x, 0, w - 1);
        y = std::clamp(y, 0, h - 1);
        return gray.at(x, y);
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float gx = -px(x - 1, y - 1) + px(x + 1, y - 1)
                       - 2 * px(x - 1, y) + 2 * px(x + 1, y)
                       - px(x - 1, y + 1) + px(x + 1, y + 1);
            float gy = -px(x - 1, y - 1) - 2 * px(x, y - 1) - px(x + 1, y - 1)
                       + px(x - 1, y + 1) + 2 * px(x, y + 1) + px(x + 1, y + 1);
            out.at(x, y) = std::sqrt(gx * gx + gy * gy);
        }
    }
    return out;
}

/// Sobel x/y gradients (same kernels as sobel_magnitude).
inline void sobel_gradients(const ImageF& gray, ImageF& gx_out, ImageF& gy_out) {
    const int w = gray.width(), h = gray.height();
    gx_out = ImageF(w, h, 1);
    gy_out = ImageF(w, h, 1);
    auto px = [&](int x, int y) {
        x = std::clamp(x, 0, w - 1);
        y = std::clamp(y, 0, h - 1);
        return gray.at(x, y);
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            gx_out.at(x, y) = -px(x - 1, y - 1) + px(x + 1, y - 1)
                              - 2 * px(x - 1, y) + 2 * px(x + 1, y)
                              - px(x - 1, y + 1) + px(x + 1, y + 1);
            gy_out.at(x, y) = -px(x - 1, y - 1) - 2 * px(x, y - 1)
                              - px(x + 1, y - 1) + px(x - 1, y + 1)
                              + 2 * px(x, y + 1) + px(x + 1, y + 1);
        }
    }
}

/// Divides by the image-wide maximum; an all-zero map stays zero.
inline ImageF normalize_by_max(const ImageF& src) {
    float mx = 0.0f;
    for (size_t i = 0; i < src.size(); ++i)
        mx = std::max(mx, src.data()[i]);
    ImageF out(src.width(), src.height(), src.channels());
    if (mx <= 0.0f) return out;
    for (size_t i = 0; i < src.size(); ++i)
        out.data()[i] = src.data()[i] / mx;
    return out;
}

/// Box mean over a (2r+1)^2 window via a summed-area table; truncated at
/// image borders (mean over the in-bounds part of the window).
inline ImageF box_mean(const ImageF& src, int radius) {
    const int w = src.width(), h = src.height();
    std::vector<double> sat(static_cast<size_t>(w + 1) * (h + 1), 0.0);
    auto S = [&](int x, int y) -> double& {
        return sat[static_cast<size_t>(y) * (w + 1) + x];
    };
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x)
            S(x, y) = src.at(x - 1, y - 1) + S(x - 1, y) + S(x, y - 1) -
                      S(x - 1, y - 1);
    ImageF out(w, h, 1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int x0 = std::max(0, x - radius), x1 = std::min(w - 1, x + radius);
            int y0 = std::max(0, y - radius), y1 = std::min(h - 1, y + radius);
            double sum = S(x1 + 1, y1 + 1) - S(x0, y1 + 1) - S(x1 + 1, y0) +
                         S(x0, y0);
            out.at(x, y) =
                static_cast<float>(sum / ((x1 - x0 + 1) * (y1 - y0 + 1)));
        }
    }
    return out;
}

/// Normalized 1-D Gaussian taps with radius ceil(3*sigma).
inline std::vector<float> gaussian_kernel(double sigma) {
    int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<float> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        double v = std::exp(-0.5 * (i * i) / (sigma * sigma));
        k[i + radius] = static_cast<float>(v);
        sum += v;
    }
    for (float& v : k) v = static_cast<float>(v / sum);
    return k;
}

/// Separable Gaussian blur, borders replicated, all channels.
inline ImageF gaussian_blur(const ImageF& src, double sigma) {
    if (sigma <= 0.0) return src;
    std::vector<float> k = gaussian_kernel(sigma);
    int radius = static_cast<int>(k.size() / 2);
    const int w = src.width(), h = src.height(), ch = src.channels();
    ImageF tmp(w, h, ch), out(w, h, ch);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                float acc = 0.0f;
                for (int i = -radius; i <= radius; ++i)
                    acc += k[i + radius] * src.at(std::clamp(x + i, 0, w - 1), y, c);
                tmp.at(x, y, c) = acc;
            }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                float acc = 0.0f;
                for (int i = -radius; i <= radius; ++i)
                    acc += k[i + radius] * tmp.at(x, std::clamp(y + i, 0, h - 1), c);
                out.at(x, y, c) = acc;
            }
    return out;
}

}  // namespace sts
