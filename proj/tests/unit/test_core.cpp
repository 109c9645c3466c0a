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

#include "sts/core/homography.hpp"
#include "sts/core/validate.hpp"
#include "sts/util/polygon.hpp"
#include "support/helpers.hpp"

using namespace sts;

namespace {

SceneRecord well_formed_record() {
    SceneRecord rec;
    rec.id = "r0";
    rec.original = ImageU8(32, 24, 3, 128);
    rec.erased = ImageU8(32, 24, 3, 128);
    SceneInstance inst;
    inst.quad = axis_aligned_quad(4, 4, 16, 10);
    inst.mask.bitmap = ImageU8(32, 24, 1, 0);
    for (int y = 5; y <= 9; ++y)
        for (int x = 5; x <= 15; ++x) inst.mask.bitmap.at(x, y) = 1;
    inst.mask.instance_id = 0;
    inst.valid = true;
    inst.text = "abc";
    rec.instances.push_back(inst);
    return rec;
}

}  // namespace

TEST_CASE("validate_scene_record accepts a well-formed record") {
    SceneRecord rec = well_formed_record();
    CHECK(validate_scene_record(rec).empty());
    // Idempotent and side-effect free.
    CHECK(validate_scene_record(rec).empty());
}

TEST_CASE("validate_scene_record reports dimension mismatch") {
    SceneRecord rec = well_formed_record();
    rec.erased = ImageU8(22, 24, 3, 128);
    auto v = validate_scene_record(rec);
    REQUIRE_FALSE(v.empty());
    bool found = false;
    for (const auto& x : v)
        if (x.field == "erased") found = true;
    CHECK(found);
}

TEST_CASE("validate_scene_record reports an empty mask on a valid instance") {
    SceneRecord rec = well_formed_record();
    rec.instances[0].mask.bitmap.fill(0);
    auto v = validate_scene_record(rec);
    REQUIRE(v.size() == 1);
    CHECK(v[0].field == "mask");
    CHECK(v[0].instance == 0);
}

TEST_CASE("validate_scene_record flags mask pixels far outside the quad") {
    SceneRecord rec = well_formed_record();
    rec.instances[0].mask.bitmap.at(30, 20) = 1;
    auto v = validate_scene_record(rec);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].instance == 0);
}

TEST_CASE("quad invariants") {
    QuadBox ok = axis_aligned_quad(0, 0, 4, 2);
    CHECK(ok.valid());
    CHECK(ok.signed_area() == Catch::Approx(8.0));
    CHECK(ok.width() == Catch::Approx(4.0));
    CHECK(ok.height() == Catch::Approx(2.0));

    QuadBox bowtie{{Vec2{0, 0}, Vec2{4, 2}, Vec2{4, 0}, Vec2{0, 2}}};
    CHECK_FALSE(bowtie.simple());
    CHECK_FALSE(bowtie.valid());
}

TEST_CASE("homography stays normalized and composes with its inverse") {
    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
        std::array<double, 9> raw;
        for (double& v : raw) v = rng.uniform(-2.0, 2.0);
        raw[6] *= 0.01;
        raw[7] *= 0.01;
        raw[8] = rng.uniform(0.5, 2.0);
        Homography h;
        try {
            h = Homography::from_raw(raw);
        } catch (const SingularTransform&) {
            continue;
        }
        CHECK(h.m[8] == Catch::Approx(1.0));
        Homography round = compose(h, h.inverse());
        for (int i = 0; i < 9; ++i)
            CHECK(std::abs(round.m[i] - Homography::identity().m[i]) < 1e-6);
    }
}

TEST_CASE("compose is associative and matches the group structure") {
    Homography t1 = Homography::translation(3, -2);
    Homography t2 = Homography::translation(-1, 5);
    Homography s = Homography::scaling(2, 0.5);

    Homography sum = compose(t1, t2);
    CHECK(sum.m[2] == Catch::Approx(2.0));
    CHECK(sum.m[5] == Catch::Approx(3.0));

    Homography left = compose(compose(t1, s), t2);
    Homography right = compose(t1, compose(s, t2));
    for (int i = 0; i < 9; ++i)
        CHECK(left.m[i] == Catch::Approx(right.m[i]).margin(1e-9));

    CHECK_THROWS_AS(Homography::from_raw({1, 0, 0, 2, 0, 0, 0, 0, 1}),
                    SingularTransform);
}

TEST_CASE("polygon utilities: iou and min-area rect") {
    QuadBox a = axis_aligned_quad(0, 0, 10, 10);
    QuadBox b = axis_aligned_quad(5, 0, 15, 10);
    CHECK(quad_intersection_area(a, b) == Catch::Approx(50.0));
    CHECK(quad_iou(a, b) == Catch::Approx(50.0 / 150.0));
    QuadBox c = axis_aligned_quad(20, 20, 30, 30);
    CHECK(quad_intersection_area(a, c) == Catch::Approx(0.0));

    std::vector<Vec2> pts;
    Rng rng(3);
    // Rotated 8x2 box point cloud.
    double ang = 0.35;
    for (int i = 0; i < 200; ++i) {
        double u = rng.uniform(-4.0, 4.0), v = rng.uniform(-1.0, 1.0);
        pts.push_back({u * std::cos(ang) - v * std::sin(ang) + 10,
                       u * std::sin(ang) + v * std::cos(ang) + 5});
    }
    MinAreaRect r = min_area_rect(pts);
    double span = std::max(r.width, r.height);
    CHECK(span <= 8.1);
    CHECK(span >= 6.0);
    double got = std::abs(r.angle);
    CHECK(std::min(got, std::abs(got - M_PI / 2)) < 0.2);
}
