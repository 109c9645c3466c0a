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
#include "sts/core/homography.hpp"
#include "sts/core/quad.hpp"

namespace sts {

namespace detail {

// Projective frame: matrix taking the canonical basis e1,e2,e3 and the unit
// point e1+e2+e3 to the four quad corners. Built by scaling the first three
// corner columns so their sum hits the fourth corner (3x3 solve by Cramer).
inline std::array<double, 9> projective_frame(const QuadBox& q) {
    auto col = [&](int i) { return std::array<double, 3>{q[i].x, q[i].y, 1.0}; };
    std::array<double, 3> a = col(0), b = col(1), c = col(2), d = col(3);
    auto det3 = [](const std::array<double, 3>& u, const std::array<double, 3>& v,
                   const std::array<double, 3>& w) {
        return u[0] * (v[1] * w[2] - v[2] * w[1]) -
               v[0] * (u[1] * w[2] - u[2] * w[1]) +
               w[0] * (u[1] * v[2] - u[2] * v[1]);
    };
    double d0 = det3(a, b, c);
    if (std::abs(d0) < 1e-9) throw DegenerateQuad("three corners are collinear");
    double l1 = det3(d, b, c) / d0;
    double l2 = det3(a, d, c) / d0;
    double l3 = det3(a, b, d) / d0;
    if (std::abs(l1) < 1e-9 || std::abs(l2) < 1e-9 || std::abs(l3) < 1e-9)
        throw DegenerateQuad("fourth corner lies on a diagonal");
    return {l1 * a[0], l2 * b[0], l3 * c[0],
            l1 * a[1], l2 * b[1], l3 * c[1],
            l1 * a[2], l2 * b[2], l3 * c[2]};
}

inline std::array<double, 9> invert3(const std::array<double, 9>& m) {
    double d = m[0] * (m[4] * m[8] - m[5] * m[7]) -
               m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    if (std::abs(d) < 1e-12) throw DegenerateQuad("frame matrix is singular");
    return {(m[4] * m[8] - m[5] * m[7]) / d, (m[2] * m[7] - m[1] * m[8]) / d,
            (m[1] * m[5] - m[2] * m[4]) / d, (m[5] * m[6] - m[3] * m[8]) / d,
            (m[0] * m[8] - m[2] * m[6]) / d, (m[2] * m[3] - m[0] * m[5]) / d,
            (m[3] * m[7] - m[4] * m[6]) / d, (m[1] * m[6] - m[0] * m[7]) / d,
            (m[0] * m[4] - m[1] * m[3]) / d};
}

}  // namespace detail

/// Exact four-point homography mapping src corners onto dst corners.
/// Corner residual is bounded by 1e-6 px for sane inputs.
inline Homography quad_to_homography(const QuadBox& src, const QuadBox& dst) {
    std::array<double, 9> fs = detail::projective_frame(src);
    std::array<double, 9> fd = detail::projective_frame(dst);
    std::array<double, 9> inv = detail::invert3(fs);
    std::array<double, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += fd[i * 3 + k] * inv[k * 3 + j];
            r[i * 3 + j] = s;
        }
    return Homography::from_raw(r);
}

/// Axis-aligned square centered on the quad centroid with side
/// scale * max(width extent, height extent). Not clipped to any image.
inline QuadBox make_rect(const QuadBox& quad, double scale) {
    if (scale <= 1.0) throw ConfigError("rect scale must exceed 1");
    if (!quad.valid()) throw DegenerateQuad("cannot build rect from this quad");
    double x0, y0, x1, y1;
    quad.bounds(x0, y0, x1, y1);
    double side = scale * std::max(x1 - x0, y1 - y0);
    if (side <= 0.0) throw DegenerateQuad("quad has zero extent");
    Vec2 c = quad.centroid();
    return axis_aligned_quad(c.x - side / 2, c.y - side / 2, c.x + side / 2,
                             c.y + side / 2);
}

/// Ground-truth fine transform: maps the processed (horizontal) quad back
/// onto the original quad, both expressed in 256x256 patch coordinates.
inline Homography gt_matrix(const QuadBox& p_pt_quad,
                            const QuadBox& p_before_quad) {
    return quad_to_homography(p_pt_quad, p_before_quad);
}

}  // namespace sts
