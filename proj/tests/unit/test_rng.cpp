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

#include <cmath>
#include <cstdint>

#include <doctest.h>

#include "core/rng.hpp"

namespace {

TEST_CASE("SplitMix64 reproduces the published reference stream") {
    tfa::SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
    CHECK(rng.next() == 0xF88BB8A8724C81ECULL);

    tfa::SplitMix64 r42(42);
    CHECK(r42.next() == 0xBDD732262FEB6E95ULL);
    CHECK(r42.next() == 0x28EFE333B266F103ULL);
    CHECK(r42.next() == 0x47526757130F9F52ULL);

    tfa::SplitMix64 rb(0x123456789ABCDEF0ULL);
    CHECK(rb.next() == 0x161922C645CE50E8ULL);
    CHECK(rb.next() == 0xAD760CAFA1697B60ULL);
}

TEST_CASE("identically seeded generators stay in lockstep") {
    tfa::SplitMix64 a(987654321);
    tfa::SplitMix64 b(987654321);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("next_double lies in the half open unit interval") {
    tfa::SplitMix64 rng(7);
    tfa::SplitMix64 r42(42);
    CHECK(r42.next_double() == doctest::Approx(0.7415648787718233).epsilon(1e-15));
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("next_gaussian produces finite values with plausible moments") {
    tfa::SplitMix64 rng(2024);
    double sum_re = 0.0;
    double sum_sq = 0.0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        const tfa::cplx z = rng.next_gaussian();
        CHECK(std::isfinite(z.real()));
        CHECK(std::isfinite(z.imag()));
        sum_re += z.real();
        sum_sq += std::norm(z);
    }
    CHECK(std::abs(sum_re / trials) < 0.05);
    // E|z|^2 = 2 for a standard complex Gaussian with unit variance parts.
    CHECK(sum_sq / trials == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("mix64 matches the generator's scrambling step") {
    CHECK(tfa::mix64(0) == 0xE220A8397B1DCDAFULL);
    tfa::SplitMix64 rng(123);
    CHECK(tfa::mix64(123) == rng.next());
}

TEST_CASE("derive_seed depends on every label and on their order") {
    CHECK(tfa::derive_seed(42, {12, 3, 0}) == 0xFE028C43B648918BULL);
    CHECK(tfa::derive_seed(42, {12, 0, 3}) == 0x98BF3DCCE30E372AULL);
    CHECK(tfa::derive_seed(42, {12, 3, 0}) != tfa::derive_seed(42, {12, 3, 1}));
    CHECK(tfa::derive_seed(42, {12, 3, 0}) != tfa::derive_seed(43, {12, 3, 0}));
    CHECK(tfa::derive_seed(42, {12, 3, 0}) == tfa::derive_seed(42, {12, 3, 0}));
}

TEST_CASE("random_unit_signal has unit norm and is seed determined") {
    for (std::int64_t n : {1, 2, 7, 32}) {
        tfa::SplitMix64 a(55);
        tfa::SplitMix64 b(55);
        const tfa::Signal f = tfa::random_unit_signal(n, a);
        const tfa::Signal g = tfa::random_unit_signal(n, b);
        CHECK(f.n == n);
        CHECK(tfa::norm(f) == doctest::Approx(1.0).epsilon(1e-12));
        for (std::int64_t l = 0; l < n; ++l) CHECK(f.v[l] == g.v[l]);
    }
}

}  // namespace
