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
#include <limits>

namespace sts {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
};

/// Four-corner text box, corners clockwise from the top-left of reading
/// order. "Clockwise" is in image coordinates (y grows downward), which
/// makes the signed shoelace area positive for well-formed boxes.
struct QuadBox {
    std::array<Vec2, 4> p{};

    Vec2& operator[](size_t i) { return p[i]; }
    const Vec2& operator[](size_t i) const { return p[i]; }

    double signed_area() const {
        double a = 0.0;
        for (int i = 0; i < 4; ++i) {
            const Vec2& u = p[i];
            const Vec2& v = p[(i + 1) & 3];
            a += u.x * v.y - v.x * u.y;
        }
        return 0.5 * a;
    }

    /// Mean of the four corners.
    Vec2 centroid() const {
        return {(p[0].x + p[1].x + p[2].x + p[3].x) * 0.25,
                (p[0].y + p[1].y + p[2].y + p[3].y) * 0.25};
    }

    /// Mean of the top and bottom edge lengths.
    double width() const {
        return 0.5 * ((p[1] - p[0]).norm() + (p[2] - p[3]).norm());
    }
    /// Mean of the left and right edge lengths (the text height).
    double height() const {
        return 0.5 * ((p[3] - p[0]).norm() + (p[2] - p[1]).norm());
    }

    void bounds(double& x0, double& y0, double& x1, double& y1) const {
        x0 = y0 = std::numeric_limits<double>::infinity();
        x1 = y1 = -std::numeric_limits<double>::infinity();
        for (const Vec2& v : p) {
            x0 = std::min(x0, v.x);
            y0 = std::min(y0, v.y);
            x1 = std::max(x1, v.x);
            y1 = std::max(y1, v.y);
        }
    }

    bool finite() const {
        for (const Vec2& v : p)
            if (!std::isfinite(v.x) || !std::isfinite(v.y)) return false;
        return true;
    }

    /// Simple (non-self-intersecting) polygon test over the two pairs of
    /// non-adjacent edges.
    bool simple() const {
        auto segments_cross = [](Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
            auto orient = [](Vec2 o, Vec2 u, Vec2 v) {
                return (u - o).cross(v - o);
            };
            double d1 = orient(a, b, c), d2 = orient(a, b, d);
            double d3 = orient(c, d, a), d4 = orient(c, d, b);
            return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
        };
        return !segments_cross(p[0], p[1], p[2], p[3]) &&
               !segments_cross(p[1], p[2], p[3], p[0]);
    }

    bool valid() const { return finite() && simple() && signed_area() > 0.0; }
};

inline QuadBox axis_aligned_quad(double x0, double y0, double x1, double y1) {
    return QuadBox{{Vec2{x0, y0}, Vec2{x1, y0}, Vec2{x1, y1}, Vec2{x0, y1}}};
}

}  // namespace sts
