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
#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sts/core/error.hpp"

namespace sts {

/// Dense interleaved raster with a runtime channel count.
///
/// Pixel coordinates follow the project-wide convention: origin at the
/// top-left, x rightward, y downward, and the continuous coordinate (x, y)
/// sits exactly on the center of pixel (x, y).
template <typename T>
class Image {
public:
    Image() = default;
    Image(int width, int height, int channels, T fill_value = T{})
        : width_(width), height_(height), channels_(channels),
          data_(static_cast<size_t>(width) * height * channels, fill_value) {
        assert(width >= 0 && height >= 0 && channels > 0);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    bool empty() const { return data_.empty(); }
    size_t size() const { return data_.size(); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    T& at(int x, int y, int c = 0) {
        assert(in_bounds(x, y) && c >= 0 && c < channels_);
        return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
    }
    const T& at(int x, int y, int c = 0) const {
        assert(in_bounds(x, y) && c >= 0 && c < channels_);
        return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
    }

    T& operator()(int x, int y, int c = 0) { return at(x, y, c); }
    const T& operator()(int x, int y, int c = 0) const { return at(x, y, c); }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::vector<T>& storage() { return data_; }
    const std::vector<T>& storage() const { return data_; }

    void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

    bool same_shape(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_ &&
               channels_ == other.channels_;
    }

    bool operator==(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_ &&
               channels_ == other.channels_ && data_ == other.data_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    int channels_ = 0;
    std::vector<T> data_;
};

using ImageU8 = Image<uint8_t>;
using ImageF = Image<float>;

/// Single-channel float map in [0, 1] over image pixels.
using Heatmap = ImageF;

inline void require_same_shape(const ImageF& a, const ImageF& b,
                               const char* where) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(where) + ": operand shapes differ");
}

/// 8-bit -> float in [0, 1].
inline ImageF to_float(const ImageU8& src) {
    ImageF out(src.width(), src.height(), src.channels());
    const uint8_t* s = src.data();
    float* d = out.data();
    for (size_t i = 0; i < src.size(); ++i) d[i] = s[i] * (1.0f / 255.0f);
    return out;
}

/// Float in [0, 1] -> 8-bit with round-half-away and clamping.
inline ImageU8 to_u8(const ImageF& src) {
    ImageU8 out(src.width(), src.height(), src.channels());
    const float* s = src.data();
    uint8_t* d = out.data();
    for (size_t i = 0; i < src.size(); ++i) {
        float v = std::clamp(s[i], 0.0f, 1.0f);
        d[i] = static_cast<uint8_t>(std::lround(v * 255.0f));
    }
    return out;
}

/// Extracts one channel as a single-channel image.
template <typename T>
Image<T> extract_channel(const Image<T>& src, int c) {
    Image<T> out(src.width(), src.height(), 1);
    for (int y = 0; y < src.height(); ++y)
        for (int x = 0; x < src.width(); ++x) out.at(x, y) = src.at(x, y, c);
    return out;
}

}  // namespace sts
