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
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <doctest.h>

#include "core/abelian.hpp"
#include "core/rng.hpp"
#include "core/signal.hpp"
#include "core/stft.hpp"

namespace {

using tfa::cplx;
using tfa::FiniteAbelianGroup;
using tfa::GroupSignal;

TEST_CASE("group construction, flattening, and arithmetic") {
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({2, 4});
    CHECK(g.order == 8);
    CHECK(g.flatten({0, 0}) == 0);
    CHECK(g.flatten({0, 3}) == 3);
    CHECK(g.flatten({1, 0}) == 4);
    CHECK(g.flatten({1, 3}) == 7);
    CHECK(g.flatten({3, 5}) == g.flatten({1, 1}));
    CHECK(g.unflatten(6) == std::vector<std::int64_t>{1, 2});
    for (std::int64_t x = 0; x < g.order; ++x) {
        CHECK(g.flatten(g.unflatten(x)) == x);
        CHECK(g.add(x, g.neg(x)) == 0);
    }
    CHECK(g.add(g.flatten({1, 3}), g.flatten({1, 2})) == g.flatten({0, 1}));

    CHECK_THROWS_AS(FiniteAbelianGroup::make({}), tfa::InvalidArgument);
    CHECK_THROWS_AS(FiniteAbelianGroup::make({2, 0}), tfa::InvalidArgument);
    CHECK_THROWS_AS(FiniteAbelianGroup::make({4096, 2}), tfa::InvalidArgument);
}

TEST_CASE("parse_factors accepts products and rejects malformed text") {
    CHECK(tfa::parse_factors("2x4") == std::vector<std::int64_t>{2, 4});
    CHECK(tfa::parse_factors("12") == std::vector<std::int64_t>{12});
    CHECK(tfa::parse_factors("2x2x3") == std::vector<std::int64_t>{2, 2, 3});
    CHECK_THROWS_AS(tfa::parse_factors(""), tfa::ParseError);
    CHECK_THROWS_AS(tfa::parse_factors("2x"), tfa::ParseError);
    CHECK_THROWS_AS(tfa::parse_factors("x2"), tfa::ParseError);
    CHECK_THROWS_AS(tfa::parse_factors("2xx3"), tfa::ParseError);
    CHECK_THROWS_AS(tfa::parse_factors("2x-3"), tfa::ParseError);
    CHECK_THROWS_AS(tfa::parse_factors("two"), tfa::ParseError);
    CHECK_THROWS_AS(tfa::parse_factors("2x9999999"), tfa::ParseError);
}

TEST_CASE("characters are exact roots of unity and bilinear") {
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({2, 2});
    CHECK(tfa::character(g, 3, 3) == cplx{1.0, 0.0});
    CHECK(tfa::character(g, 2, 2) == cplx{-1.0, 0.0});
    CHECK(tfa::character(g, 3, 2) == cplx{-1.0, 0.0});
    CHECK(tfa::character(g, 0, 3) == cplx{1.0, 0.0});

    const FiniteAbelianGroup h = FiniteAbelianGroup::make({2, 3, 4});
    for (std::int64_t k = 0; k < h.order; ++k) {
        for (std::int64_t l1 = 0; l1 < h.order; ++l1) {
            for (std::int64_t l2 = 0; l2 < h.order; ++l2) {
                const cplx lhs = tfa::character(h, k, h.add(l1, l2));
                const cplx rhs = tfa::character(h, k, l1) * tfa::character(h, k, l2);
                CHECK(std::abs(lhs - rhs) < 1e-14);
                const cplx sym = tfa::character(h, l1, k);
                CHECK(std::abs(tfa::character(h, k, l1) - sym) < 1e-15);
            }
        }
    }
    CHECK_THROWS_AS(tfa::character(g, 4, 0), tfa::InvalidArgument);
    CHECK_THROWS_AS(tfa::character(g, 0, -1), tfa::InvalidArgument);
}

TEST_CASE("single factor groups reproduce the cyclic transform") {
    const std::int64_t n = 6;
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({n});
    tfa::SplitMix64 rng(404);
    const tfa::Signal f = tfa::random_unit_signal(n, rng);
    const tfa::Signal w = tfa::random_unit_signal(n, rng);
    const GroupSignal gf(g, f.v);
    const GroupSignal gw(g, w.v);

    for (std::int64_t k = 0; k < n; ++k) {
        for (std::int64_t l = 0; l < n; ++l) {
            CHECK(std::abs(tfa::character(g, k, l) - tfa::unit_phase(k * l, n)) == 0.0);
        }
    }

    const tfa::AbelianTable at = tfa::stft_abelian(gf, gw);
    const tfa::STFTTable ct = tfa::stft(f, w);
    double mx = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        for (std::int64_t k = 0; k < n; ++k) {
            mx = std::max(mx, std::abs(at.at(j, k) - ct.at(j, k)));
        }
    }
    CHECK(mx < 1e-13);
}

TEST_CASE("delta pair on the Klein group concentrates on one row") {
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({2, 2});
    const GroupSignal d = GroupSignal::delta(g, 0);
    const tfa::AbelianTable t = tfa::stft_abelian(d, d);
    for (std::int64_t k = 0; k < 4; ++k) CHECK(std::abs(t.at(0, k) - cplx{0.5, 0.0}) == 0.0);
    for (std::int64_t j = 1; j < 4; ++j) {
        for (std::int64_t k = 0; k < 4; ++k) CHECK(std::abs(t.at(j, k)) == 0.0);
    }

    const auto supp = tfa::abelian_support(t);
    REQUIRE(supp.size() == 4);
    for (std::int64_t k = 0; k < 4; ++k) {
        CHECK(supp[static_cast<std::size_t>(k)] == std::pair<std::int64_t, std::int64_t>{0, k});
    }
    CHECK(tfa::abelian_support(tfa::AbelianTable(g)).empty());
    CHECK_THROWS_AS(tfa::abelian_support(t, 0.0), tfa::InvalidArgument);

    const tfa::UncertaintyReport r = tfa::abelian_weak_uncertainty_check(d, d);
    CHECK(r.kind == tfa::CheckKind::kAbelianWeak);
    CHECK(r.n == 4);
    CHECK(r.bound == 4);
    CHECK(r.holds);
    CHECK(r.equality);
    CHECK(r.energy_residual < 1e-14);
    CHECK(r.peak_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("abelian transform satisfies the energy identity") {
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({2, 3, 2});
    tfa::SplitMix64 rng(505);
    const GroupSignal f = tfa::random_unit_group_signal(g, rng);
    const GroupSignal w = tfa::random_unit_group_signal(g, rng);
    const tfa::AbelianTable t = tfa::stft_abelian(f, w);
    CHECK(t.frobenius_sq() == doctest::Approx(norm_sq(f) * norm_sq(w)).epsilon(1e-12));
    const double bound = tfa::norm(f) * tfa::norm(w) / std::sqrt(static_cast<double>(g.order));
    CHECK(t.max_abs() <= bound * (1.0 + 1e-12));
}

TEST_CASE("subgroup indicator pair passes the recentred closure check") {
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({2, 4});
    // Indicator of Z_2 x {0}: flats 0 and 4.
    GroupSignal h = GroupSignal::zeros(g);
    h.v[0] = 1.0;
    h.v[4] = 1.0;
    const tfa::UncertaintyReport r = tfa::abelian_weak_uncertainty_check(h, h);
    CHECK(r.equality);
    CHECK(r.support_size == 8);

    const auto coset = tfa::abelian_coset_check(h, h);
    REQUIRE(coset.has_value());
    CHECK(coset->offset == std::pair<std::int64_t, std::int64_t>{0, 0});
    CHECK(coset->subgroup.size() == 8);
    // The support is {0, 4} x {0, 1, 2, 3}: translates of the subgroup
    // Z_2 x {0} paired with characters trivial on it.
    std::vector<std::pair<std::int64_t, std::int64_t>> want;
    for (std::int64_t j : {0, 4}) {
        for (std::int64_t k = 0; k < 4; ++k) want.emplace_back(j, k);
    }
    CHECK(coset->subgroup == want);
}

TEST_CASE("abelian_coset_check rejects oversized supports") {
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({3, 3});
    tfa::SplitMix64 rng(606);
    const GroupSignal f = tfa::random_unit_group_signal(g, rng);
    const GroupSignal w = tfa::random_unit_group_signal(g, rng);
    CHECK_THROWS_AS(tfa::abelian_coset_check(f, w), tfa::NotExtremal);
}

TEST_CASE("abelian ensembles find no violations and are deterministic") {
    for (const auto& factors :
         {std::vector<std::int64_t>{2, 2}, {4}, {2, 3}, {2, 2, 2}}) {
        const FiniteAbelianGroup g = FiniteAbelianGroup::make(factors);
        const tfa::TrialSummary s = tfa::run_abelian_trials(g, 15, 42);
        CHECK(s.kind == tfa::CheckKind::kAbelianWeak);
        CHECK(s.n == g.order);
        CHECK(s.trials == 15);
        CHECK(s.violations == 0);
        CHECK(s.min_support >= g.order);
        const tfa::TrialSummary t = tfa::run_abelian_trials(g, 15, 42);
        CHECK(s.support_sizes == t.support_sizes);
    }
}

TEST_CASE("group signals validate their dimensions") {
    const FiniteAbelianGroup g = FiniteAbelianGroup::make({2, 2});
    CHECK_THROWS_AS(GroupSignal(g, std::vector<cplx>(3)), tfa::InvalidArgument);
    CHECK(norm_sq(GroupSignal::delta(g, 2)) == doctest::Approx(1.0));
    tfa::SplitMix64 rng(17);
    CHECK(tfa::norm(tfa::random_unit_group_signal(g, rng)) == doctest::Approx(1.0));
}

}  // namespace
