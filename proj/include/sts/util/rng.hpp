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

#include <cstdint>
#include <random>
#include <string_view>

namespace sts {

/// Deterministic random source. The engine (std::mt19937_64) has a
/// standard-specified output sequence and all value mappings are done by
/// hand here, so streams are bit-identical across platforms and standard
/// library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed), seed_mix_(splitmix64(seed)) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (hi <= lo) return lo;
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        // Rejection sampling to avoid modulo bias.
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<int64_t>(v % span);
    }

    size_t index(size_t n) {
        return n == 0 ? 0 : static_cast<size_t>(uniform_int(0, int64_t(n) - 1));
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Stream-splitting: an independent generator for a tagged subtask.
    Rng derive(uint64_t tag) const {
        return Rng(splitmix64(seed_mix_ ^ splitmix64(tag)));
    }
    Rng derive(std::string_view tag) const { return derive(fnv1a(tag)); }

    static uint64_t splitmix64(uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static uint64_t fnv1a(std::string_view s) {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    std::mt19937_64 eng_;
    uint64_t seed_mix_ = 0;
};

}  // namespace sts
