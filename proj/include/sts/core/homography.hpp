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

#include <array>
#include <cmath>

#include "sts/core/error.hpp"
#include "sts/core/quad.hpp"

namespace sts {

/// 3x3 projective transform. Always stored with m[2][2] == 1; construction
/// renormalizes and rejects singular matrices (|det| <= 1e-9).
struct Homography {
    // Row-major 3x3.
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Homography identity() { return Homography{}; }

    static Homography from_raw(const std::array<double, 9>& raw) {
        Homography h;
        double w = raw[8];
        if (std::abs(w) < 1e-12)
            throw SingularTransform("projective scale is zero");
        for (int i = 0; i < 9; ++i) h.m[i] = raw[i] / w;
        if (std::abs(h.det()) <= 1e-9)
            throw SingularTransform("matrix is not invertible");
        return h;
    }

    static Homography translation(double tx, double ty) {
        return from_raw({1, 0, tx, 0, 1, ty, 0, 0, 1});
    }

    static Homography scaling(double sx, double sy) {
        return from_raw({sx, 0, 0, 0, sy, 0, 0, 0, 1});
    }

    /// Similarity: uniform scale about the origin followed by translation.
    static Homography similarity(double s, double tx, double ty) {
        return from_raw({s, 0, tx, 0, s, ty, 0, 0, 1});
    }

    static Homography rotation(double radians, Vec2 center = {0, 0}) {
        double c = std::cos(radians), s = std::sin(radians);
        double tx = center.x - c * center.x + s * center.y;
        double ty = center.y - s * center.x - c * center.y;
        return from_raw({c, -s, tx, s, c, ty, 0, 0, 1});
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) -
               m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    Vec2 apply(Vec2 v) const {
        double w = m[6] * v.x + m[7] * v.y + m[8];
        return {(m[0] * v.x + m[1] * v.y + m[2]) / w,
                (m[3] * v.x + m[4] * v.y + m[5]) / w};
    }

    QuadBox map(const QuadBox& q) const {
        QuadBox out;
        for (int i = 0; i < 4; ++i) out.p[i] = apply(q.p[i]);
        return out;
    }

    Homography inverse() const {
        double d = det();
        if (std::abs(d) <= 1e-12)
            throw SingularTransform("cannot invert a singular matrix");
        std::array<double, 9> a;
        a[0] = (m[4] * m[8] - m[5] * m[7]) / d;
        a[1] = (m[2] * m[7] - m[1] * m[8]) / d;
        a[2] = (m[1] * m[5] - m[2] * m[4]) / d;
        a[3] = (m[5] * m[6] - m[3] * m[8]) / d;
        a[4] = (m[0] * m[8] - m[2] * m[6]) / d;
        a[5] = (m[2] * m[3] - m[0] * m[5]) / d;
        a[6] = (m[3] * m[7] - m[4] * m[6]) / d;
        a[7] = (m[1] * m[6] - m[0] * m[7]) / d;
        a[8] = (m[0] * m[4] - m[1] * m[3]) / d;
        return from_raw(a);
    }
};

/// Matrix product a*b, renormalized. The composite maps x through b first.
inline Homography compose(const Homography& a, const Homography& b) {
    std::array<double, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a.m[i * 3 + k] * b.m[k * 3 + j];
            r[i * 3 + j] = s;
        }
    return Homography::from_raw(r);
}

}  // namespace sts
