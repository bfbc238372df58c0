/*
 * Copyright 2026 The tfa Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "core/rng.hpp"

#include <cmath>
#include <numbers>

namespace tfa {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

cplx SplitMix64::next_gaussian() {
    // 1 - u in (0, 1] keeps the logarithm finite.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return cplx(r * std::cos(t), r * std::sin(t));
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> labels) {
    std::uint64_t h = mix64(base);
    for (std::uint64_t v : labels) h = mix64(h ^ v);
    return h;
}

Signal random_unit_signal(std::int64_t n, SplitMix64& rng) {
    Signal f = Signal::zeros(n);
    for (auto& z : f.v) z = rng.next_gaussian();
    const double nf = norm(f);
    if (nf == 0.0) {
        // Probability zero; fall back to a deterministic unit vector.
        f = Signal::delta(n, 0);
        return f;
    }
    return scaled(f, 1.0 / nf);
}

}  // namespace tfa
