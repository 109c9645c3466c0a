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

#include <string>
#include <vector>

#include "sts/core/types.hpp"
#include "sts/util/polygon.hpp"

namespace sts {

/// One failed invariant. Violations are data, not faults.
struct Violation {
    std::string field;
    int instance = -1;  // -1 when record-level
    std::string message;
};

/// Checks every type invariant of a SceneRecord. Pure and idempotent;
/// returns an empty list iff the record is well formed.
inline std::vector<Violation> validate_scene_record(const SceneRecord& rec) {
    std::vector<Violation> out;
    auto add = [&](const std::string& field, int idx, const std::string& msg) {
        out.push_back({field, idx, msg});
    };

    if (rec.original.empty()) add("original", -1, "image is empty");
    if (rec.original.channels() != 3) add("original", -1, "expected 3 channels");
    if (rec.erased.channels() != 3) add("erased", -1, "expected 3 channels");
    if (rec.original.width() != rec.erased.width() ||
        rec.original.height() != rec.erased.height())
        add("erased", -1, "dimension mismatch with original");

    for (size_t i = 0; i < rec.instances.size(); ++i) {
        const SceneInstance& inst = rec.instances[i];
        int idx = static_cast<int>(i);
        if (!inst.quad.finite()) {
            add("quad", idx, "non-finite corner");
            continue;
        }
        if (!inst.quad.simple()) add("quad", idx, "self-intersecting polygon");
        if (inst.quad.signed_area() <= 0.0) add("quad", idx, "non-positive area");

        const ImageU8& bm = inst.mask.bitmap;
        if (bm.width() != rec.original.width() ||
            bm.height() != rec.original.height()) {
            add("mask", idx, "mask dimensions differ from image");
            continue;
        }
        bool any = false;
        bool outside = false;
        for (int y = 0; y < bm.height() && !outside; ++y) {
            for (int x = 0; x < bm.width(); ++x) {
                if (!bm.at(x, y)) continue;
                any = true;
                if (point_quad_distance({double(x), double(y)}, inst.quad) > 3.0) {
                    outside = true;
                    break;
                }
            }
        }
        if (inst.valid && !any) add("mask", idx, "empty mask on valid instance");
        if (outside) add("mask", idx, "mask pixel more than 3 px outside quad");
    }
    return out;
}

}  // namespace sts
