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
#include <cmath>
#include <vector>

#include "sts/core/quad.hpp"

namespace sts {

/// Even-odd point-in-polygon test; boundary points count as inside.
inline bool point_in_polygon(Vec2 pt, const Vec2* poly, int n) {
    bool inside = false;
    for (int i = 0, j = n - 1; i < n; j = i++) {
        Vec2 a = poly[j], b = poly[i];
        // On-segment check first so boundaries are inclusive.
        double cross = (b - a).cross(pt - a);
        if (std::abs(cross) < 1e-9 && (pt - a).dot(pt - b) <= 1e-9) return true;
        if ((a.y > pt.y) != (b.y > pt.y)) {
            double xint = a.x + (pt.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (pt.x < xint) inside = !inside;
        }
    }
    return inside;
}

inline bool point_in_quad(Vec2 pt, const QuadBox& q) {
    return point_in_polygon(pt, q.p.data(), 4);
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = ab.dot(ab);
    double t = len2 > 0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (p - (a + ab * t)).norm();
}

/// Distance from a point to the quad (0 if inside).
inline double point_quad_distance(Vec2 pt, const QuadBox& q) {
    if (point_in_quad(pt, q)) return 0.0;
    double d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i)
        d = std::min(d, point_segment_distance(pt, q.p[i], q.p[(i + 1) & 3]));
    return d;
}

/// Polygon area (absolute value of the shoelace sum).
inline double polygon_area(const std::vector<Vec2>& poly) {
    double a = 0.0;
    int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        Vec2 u = poly[i], v = poly[(i + 1) % n];
        a += u.x * v.y - v.x * u.y;
    }
    return std::abs(a) * 0.5;
}

/// Sutherland-Hodgman clip of `subject` against convex `clip`.
inline std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject,
                                     const std::vector<Vec2>& clip) {
    std::vector<Vec2> out = subject;
    int n = static_cast<int>(clip.size());
    // Orient the clip polygon consistently.
    double a = 0.0;
    for (int i = 0; i < n; ++i)
        a += clip[i].x * clip[(i + 1) % n].y - clip[(i + 1) % n].x * clip[i].y;
    double sign = a >= 0 ? 1.0 : -1.0;
    for (int i = 0; i < n && !out.empty(); ++i) {
        Vec2 ca = clip[i], cb = clip[(i + 1) % n];
        std::vector<Vec2> in;
        in.swap(out);
        int m = static_cast<int>(in.size());
        for (int j = 0; j < m; ++j) {
            Vec2 p = in[j], q = in[(j + 1) % m];
            double dp = sign * (cb - ca).cross(p - ca);
            double dq = sign * (cb - ca).cross(q - ca);
            if (dp >= 0) out.push_back(p);
            if ((dp >= 0) != (dq >= 0)) {
                double t = dp / (dp - dq);
                out.push_back(p + (q - p) * t);
            }
        }
    }
    return out;
}

inline std::vector<Vec2> quad_to_polygon(const QuadBox& q) {
    return {q.p[0], q.p[1], q.p[2], q.p[3]};
}

inline double quad_intersection_area(const QuadBox& a, const QuadBox& b) {
    return polygon_area(clip_convex(quad_to_polygon(a), quad_to_polygon(b)));
}

inline double quad_iou(const QuadBox& a, const QuadBox& b) {
    double inter = quad_intersection_area(a, b);
    double uni = std::abs(a.signed_area()) + std::abs(b.signed_area()) - inter;
    return uni > 0 ? inter / uni : 0.0;
}

/// Andrew monotone-chain convex hull; returns counterclockwise vertices in
/// the y-down frame.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    int n = static_cast<int>(pts.size());
    if (n < 3) return pts;
    std::vector<Vec2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 &&
               (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, t = k + 1; i >= 0; --i) {
        while (k >= t &&
               (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

struct MinAreaRect {
    Vec2 center;
    double width = 0.0;   // extent along `angle`
    double height = 0.0;  // extent perpendicular to `angle`
    double angle = 0.0;   // radians, in (-pi/2, pi/2]

    QuadBox to_quad() const {
        double c = std::cos(angle), s = std::sin(angle);
        Vec2 ux{c, s}, uy{-s, c};
        Vec2 hw = ux * (width * 0.5), hh = uy * (height * 0.5);
        QuadBox q;
        q.p[0] = center - hw - hh;
        q.p[1] = center + hw - hh;
        q.p[2] = center + hw + hh;
        q.p[3] = center - hw + hh;
        return q;
    }
};

/// Rotating-calipers minimum-area bounding rectangle of a point set.
inline MinAreaRect min_area_rect(const std::vector<Vec2>& pts) {
    MinAreaRect best;
    std::vector<Vec2> hull = convex_hull(pts);
    int n = static_cast<int>(hull.size());
    if (n == 0) return best;
    if (n == 1) return {hull[0], 0, 0, 0};
    double best_area = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        Vec2 e = hull[(i + 1) % n] - hull[i];
        double len = e.norm();
        if (len < 1e-12) continue;
        Vec2 ux = e * (1.0 / len), uy{-ux.y, ux.x};
        double minu = 1e300, maxu = -1e300, minv = 1e300, maxv = -1e300;
        for (const Vec2& p : hull) {
            double u = p.dot(ux), v = p.dot(uy);
            minu = std::min(minu, u); maxu = std::max(maxu, u);
            minv = std::min(minv, v); maxv = std::max(maxv, v);
        }
        double area = (maxu - minu) * (maxv - minv);
        if (area < best_area) {
            best_area = area;
            best.width = maxu - minu;
            best.height = maxv - minv;
            double cu = 0.5 * (minu + maxu), cv = 0.5 * (minv + maxv);
            best.center = ux * cu + uy * cv;
            double ang = std::atan2(ux.y, ux.x);
            while (ang <= -M_PI / 2) ang += M_PI;
            while (ang > M_PI / 2) ang -= M_PI;
            best.angle = ang;
        }
    }
    return best;
}

}  // namespace sts
