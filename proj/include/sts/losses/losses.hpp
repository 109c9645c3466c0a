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

#include <cmath>
#include <span>
#include <vector>

#include "sts/core/error.hpp"
#include "sts/core/homography.hpp"
#include "sts/core/image.hpp"

namespace sts {

/// Loss-term weights. Defaults are the published values.
struct LossWeights {
    double lambda0 = 10.0;  // segmentation BCE weight
    double lambda1 = 50.0;  // geometry smooth-L1 weight
    double lambda2 = 10.0;  // geometry region weight
    double lambda3 = 5.0;   // color L1 weight
};

constexpr double kBceClamp = 1e-7;

/// Mean binary cross-entropy. Predictions are clamped to
/// [kBceClamp, 1 - kBceClamp] before the logs.
inline double bce(std::span<const float> pred, std::span<const float> target) {
    if (pred.size() != target.size() || pred.empty())
        throw ShapeError("bce: size mismatch or empty input");
    double acc = 0.0;
    for (size_t i = 0; i < pred.size(); ++i) {
        double s = std::clamp(static_cast<double>(pred[i]), kBceClamp,
                              1.0 - kBceClamp);
        double t = target[i];
        acc += -(t * std::log(s) + (1.0 - t) * std::log(1.0 - s));
    }
    return acc / static_cast<double>(pred.size());
}

/// Global dice loss 1 - 2*sum(s*t) / (sum(s) + sum(t)). Two all-zero inputs
/// score 0 (matching emptiness is a perfect prediction).
inline double dice(std::span<const float> pred, std::span<const float> target) {
    if (pred.size() != target.size() || pred.empty())
        throw ShapeError("dice: size mismatch or empty input");
    double inter = 0.0, sum = 0.0;
    for (size_t i = 0; i < pred.size(); ++i) {
        inter += static_cast<double>(pred[i]) * target[i];
        sum += static_cast<double>(pred[i]) + target[i];
    }
    if (sum == 0.0) return 0.0;
    return 1.0 - 2.0 * inter / sum;
}

/// Analytic dice gradient with respect to the prediction.
inline std::vector<double> dice_grad(std::span<const float> pred,
                                     std::span<const float> target) {
    if (pred.size() != target.size() || pred.empty())
        throw ShapeError("dice_grad: size mismatch or empty input");
    double inter = 0.0, sum = 0.0;
    for (size_t i = 0; i < pred.size(); ++i) {
        inter += static_cast<double>(pred[i]) * target[i];
        sum += static_cast<double>(pred[i]) + target[i];
    }
    std::vector<double> g(pred.size(), 0.0);
    if (sum == 0.0) return g;
    for (size_t i = 0; i < pred.size(); ++i)
        g[i] = -2.0 * (target[i] * sum - inter) / (sum * sum);
    return g;
}

inline double tlpnet_loss(std::span<const float> pred,
                          std::span<const float> gt,
                          const LossWeights& w = {}) {
    return w.lambda0 * bce(pred, gt) + dice(pred, gt);
}

/// Summed smooth-L1 (0.5 x^2 inside the unit interval, |x| - 0.5 outside).
inline double smooth_l1(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) {
        double a = std::abs(v);
        acc += a < 1.0 ? 0.5 * v * v : a - 0.5;
    }
    return acc;
}

inline std::vector<double> smooth_l1_grad(std::span<const double> x) {
    std::vector<double> g(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        g[i] = std::abs(x[i]) < 1.0 ? x[i] : (x[i] > 0 ? 1.0 : -1.0);
    return g;
}

/// Smooth-L1 over the 8 free homography parameters (m[2][2] excluded).
inline double homography_l1(const Homography& pred, const Homography& gt) {
    std::array<double, 8> d;
    for (int i = 0; i < 8; ++i) d[i] = pred.m[i] - gt.m[i];
    return smooth_l1(d);
}

/// Region loss: dice at the stroke-mask level plus dice at the box-mask
/// level.
inline double region_loss(std::span<const float> pred_alpha,
                          std::span<const float> gt_alpha,
                          std::span<const float> pred_bm,
                          std::span<const float> gt_bm) {
    return dice(pred_alpha, gt_alpha) + dice(pred_bm, gt_bm);
}

/// Hinge discriminator loss: mean ReLU(1 - real) + mean ReLU(1 + fake).
inline double hinge_d(std::span<const double> real_scores,
                      std::span<const double> fake_scores) {
    auto mean_relu = [](std::span<const double> s, double sign) {
        if (s.empty()) return 0.0;
        double acc = 0.0;
        for (double v : s) acc += std::max(0.0, 1.0 + sign * v);
        return acc / static_cast<double>(s.size());
    };
    return mean_relu(real_scores, -1.0) + mean_relu(fake_scores, +1.0);
}

inline double mean_of(std::span<const double> s) {
    if (s.empty()) return 0.0;
    double acc = 0.0;
    for (double v : s) acc += v;
    return acc / static_cast<double>(s.size());
}

/// Geometry generator loss: lambda1 * L1 + lambda2 * L_region - E[D(fake)].
inline double gtm_gen_loss(double l1, double region,
                           std::span<const double> fake_scores,
                           const LossWeights& w = {}) {
    return w.lambda1 * l1 + w.lambda2 * region - mean_of(fake_scores);
}

/// Color generator loss: lambda3 * mean |out - source| - E[D(fake)].
inline double chm_gen_loss(const ImageF& out, const ImageF& source,
                           std::span<const double> fake_scores,
                           const LossWeights& w = {}) {
    if (!out.same_shape(source))
        throw ShapeError("chm_gen_loss: image shapes differ");
    double acc = 0.0;
    for (size_t i = 0; i < out.size(); ++i)
        acc += std::abs(static_cast<double>(out.data()[i]) - source.data()[i]);
    double mae = out.size() ? acc / static_cast<double>(out.size()) : 0.0;
    return w.lambda3 * mae - mean_of(fake_scores);
}

}  // namespace sts
