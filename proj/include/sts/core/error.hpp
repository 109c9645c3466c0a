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

#include <stdexcept>
#include <string>

namespace sts {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define STS_DEFINE_ERROR(Name)                                                 \
    struct Name : Error {                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

STS_DEFINE_ERROR(ShapeError);
STS_DEFINE_ERROR(EmptyInstance);
STS_DEFINE_ERROR(DegenerateBBox);
STS_DEFINE_ERROR(NoFiniteDistance);
STS_DEFINE_ERROR(DegenerateQuad);
STS_DEFINE_ERROR(SingularTransform);
STS_DEFINE_ERROR(EmptyRegion);
STS_DEFINE_ERROR(InvalidInstance);
STS_DEFINE_ERROR(NoValidInstances);
STS_DEFINE_ERROR(GlyphError);
STS_DEFINE_ERROR(OverflowError);
STS_DEFINE_ERROR(ConfigError);
STS_DEFINE_ERROR(IoError);
STS_DEFINE_ERROR(ParseError);
STS_DEFINE_ERROR(PlacementRejected);

#undef STS_DEFINE_ERROR

}  // namespace sts
