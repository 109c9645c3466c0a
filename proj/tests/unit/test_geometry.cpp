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

#include <catch2/catch_amalgamated.hpp>

#include "sts/geometry/transform.hpp"
#include "sts/geometry/warp.hpp"
#include "support/dlt_oracle.hpp"
#include "support/helpers.hpp"

using namespace sts;

TEST_CASE("quad_to_homography: identity and pure scale") {
    QuadBox unit = axis_aligned_quad(0, 0, 1, 1);
    Homography id = quad_to_homography(unit, unit);
    for (int i = 0; i < 9; ++i)
        CHECK(id.m[i] == Catch::Approx(Homography::identity().m[i]).margin(1e-12));

    QuadBox twice = axis_aligned_quad(0, 0, 2, 2);
    Homography s = quad_to_homography(unit, twice);
    CHECK(s.m[0] == Catch::Approx(2.0));
    CHECK(s.m[4] == Catch::Approx(2.0));
    CHECK(std::abs(s.m[1]) < 1e-12);
    CHECK(std::abs(s.m[3]) < 1e-12);
}

TEST_CASE("quad_to_homography matches the independent DLT oracle") {
    Rng rng(11);
    for (int it = 0; it < 100; ++it) {
        QuadBox src = test::jittered_square(rng, 40, 40, 25, 8);
        QuadBox dst = test::jittered_square(rng, 60, 50, 30, 10);
        if (!src.valid() || !dst.valid()) continue;
        Homography h = quad_to_homography(src, dst);
        Homography o = test::dlt_oracle(src, dst);
        for (int i = 0; i < 9; ++i)
            CHECK(h.m[i] == Catch::Approx(o.m[i]).margin(1e-6));
        for (int i = 0; i < 4; ++i) {
            Vec2 mapped = h.apply(src[i]);
            CHECK(std::abs(mapped.x - dst[i].x) < 1e-6);
            CHECK(std::abs(mapped.y - dst[i].y) < 1e-6);
        }
    }
}

TEST_CASE("quad_to_homography rejects collinear corners") {
    QuadBox degenerate{{Vec2{0, 0}, Vec2{1, 0}, Vec2{2, 0}, Vec2{3, 0}}};
    CHECK_THROWS_AS(quad_to_homography(degenerate, axis_aligned_quad(0, 0, 1, 1)),
                    DegenerateQuad);
}

TEST_CASE("warp_sample: identity reproduces the input exactly") {
    Rng rng(5);
    ImageF img = test::random_map(rng, 12, 9, 3);
    ImageF out = warp_sample(img, Homography::identity(), 12, 9);
    REQUIRE(out.same_shape(img));
    for (size_t i = 0; i < img.size(); ++i)
        CHECK(out.data()[i] == img.data()[i]);
}

TEST_CASE("warp_sample: half-pixel translation interpolates a ramp") {
    ImageF ramp(2, 1, 1);
    ramp.at(0, 0) = 0.0f;
    ramp.at(1, 0) = 1.0f;
    // Output pixel 0 samples source at x = 0.5.
    Homography shift = Homography::translation(0.5, 0);
    ImageF out = warp_sample(ramp, shift, 2, 1);
    CHECK(out.at(0, 0) == Catch::Approx(0.5f));
}

TEST_CASE("warp_sample: constant images are preserved in-bounds") {
    ImageF flat(16, 16, 2, 0.37f);
    Homography h = quad_to_homography(axis_aligned_quad(0, 0, 15, 15),
                                      axis_aligned_quad(1.3, 0.7, 13.8, 14.2));
    ImageF out = warp_sample(flat, h, 16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) {
            Vec2 s = h.apply({double(x), double(y)});
            if (s.x >= 0 && s.y >= 0 && s.x <= 15 && s.y <= 15)
                CHECK(out.at(x, y, 0) == Catch::Approx(0.37f).margin(1e-6));
        }
}

TEST_CASE("warp_sample: rotation round trip keeps a Gaussian blob") {
    const int n = 64;
    ImageF blob(n, n, 1);
    auto gauss = [&](double x, double y) {
        double dx = x - 31.5, dy = y - 31.5;
        return std::exp(-(dx * dx + dy * dy) / (2.0 * 81.0));
    };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            blob.at(x, y) = static_cast<float>(gauss(x, y));

    Vec2 c{31.5, 31.5};
    ImageF fwd = warp_sample(blob, Homography::rotation(M_PI / 4, c), n, n);
    ImageF back = warp_sample(fwd, Homography::rotation(-M_PI / 4, c), n, n);
    double err2 = 0.0, ref2 = 0.0;
    // Skip the outer band that leaves the frame during rotation.
    for (int y = 8; y < n - 8; ++y)
        for (int x = 8; x < n - 8; ++x) {
            double d = back.at(x, y) - blob.at(x, y);
            err2 += d * d;
            ref2 += blob.at(x, y) * blob.at(x, y);
        }
    CHECK(std::sqrt(err2 / ref2) < 0.02);
}

TEST_CASE("compose_over follows the convex-combination contract") {
    ImageF text(4, 4, 3, 1.0f), bg(4, 4, 3, 0.0f);
    ImageF a0(4, 4, 1, 0.0f), a1(4, 4, 1, 1.0f), aq(4, 4, 1, 0.25f);

    ImageF keep = compose_over(text, a0, bg);
    CHECK(keep == bg);
    ImageF swap = compose_over(text, a1, bg);
    CHECK(swap == text);
    ImageF mix = compose_over(text, aq, bg);
    for (size_t i = 0; i < mix.size(); ++i)
        CHECK(mix.data()[i] == Catch::Approx(0.25f));

    Rng rng(9);
    ImageF rt = test::random_map(rng, 6, 5, 3);
    ImageF rb = test::random_map(rng, 6, 5, 3);
    ImageF ra = test::random_map(rng, 6, 5, 1);
    ImageF out = compose_over(rt, ra, rb);
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 6; ++x)
            for (int c = 0; c < 3; ++c) {
                float lo = std::min(rt.at(x, y, c), rb.at(x, y, c));
                float hi = std::max(rt.at(x, y, c), rb.at(x, y, c));
                CHECK(out.at(x, y, c) >= lo - 1e-6f);
                CHECK(out.at(x, y, c) <= hi + 1e-6f);
            }

    CHECK_THROWS_AS(compose_over(text, ImageF(3, 3, 1), bg), ShapeError);
}

TEST_CASE("make_rect produces centered squares") {
    QuadBox unit = axis_aligned_quad(0, 0, 1, 1);
    QuadBox r = make_rect(unit, 2.0);
    CHECK(r.width() == Catch::Approx(2.0));
    CHECK(r.height() == Catch::Approx(2.0));
    CHECK(r.centroid().x == Catch::Approx(0.5));
    CHECK(r.centroid().y == Catch::Approx(0.5));

    QuadBox wide = axis_aligned_quad(10, 10, 14, 11);
    QuadBox r2 = make_rect(wide, 1.5);
    CHECK(r2.width() == Catch::Approx(6.0));
    CHECK(r2.height() == Catch::Approx(6.0));

    // Rotated quad: side tracks the axis-aligned extent, center the centroid.
    QuadBox rot;
    double ang = 0.5;
    Vec2 c{20, 20};
    QuadBox base = axis_aligned_quad(-3, -1, 3, 1);
    for (int i = 0; i < 4; ++i) {
        double x = base[i].x, y = base[i].y;
        rot.p[i] = {c.x + x * std::cos(ang) - y * std::sin(ang),
                    c.y + x * std::sin(ang) + y * std::cos(ang)};
    }
    double x0, y0, x1, y1;
    rot.bounds(x0, y0, x1, y1);
    QuadBox r3 = make_rect(rot, 1.4);
    CHECK(r3.width() == Catch::Approx(1.4 * std::max(x1 - x0, y1 - y0)));
    CHECK(r3.centroid().x == Catch::Approx(rot.centroid().x));
    CHECK(r3.centroid().y == Catch::Approx(rot.centroid().y));

    QuadBox degenerate{{Vec2{0, 0}, Vec2{0, 0}, Vec2{0, 0}, Vec2{0, 0}}};
    CHECK_THROWS_AS(make_rect(degenerate, 1.4), DegenerateQuad);
}

TEST_CASE("gt_matrix maps the processed quad onto the original one") {
    QuadBox same = axis_aligned_quad(60, 100, 190, 150);
    Homography id = gt_matrix(same, same);
    for (int i = 0; i < 9; ++i)
        CHECK(id.m[i] == Catch::Approx(Homography::identity().m[i]).margin(1e-9));

    // Pure horizontal aspect jitter by 1.2 about the quad center.
    QuadBox orig = axis_aligned_quad(64, 100, 192, 150);
    Vec2 c = orig.centroid();
    QuadBox jit = orig;
    for (auto& v : jit.p) v.x = c.x + (v.x - c.x) * 1.2;
    Homography an = gt_matrix(jit, orig);
    CHECK(an.m[0] == Catch::Approx(1.0 / 1.2));
    Homography oracle = test::dlt_oracle(jit, orig);
    for (int i = 0; i < 9; ++i)
        CHECK(an.m[i] == Catch::Approx(oracle.m[i]).margin(1e-8));
    for (int i = 0; i < 4; ++i) {
        Vec2 mapped = an.apply(jit[i]);
        CHECK(std::abs(mapped.x - orig[i].x) < 1e-6);
        CHECK(std::abs(mapped.y - orig[i].y) < 1e-6);
    }
}
