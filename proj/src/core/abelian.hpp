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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/common.hpp"
#include "core/rng.hpp"
#include "core/signal.hpp"
#include "core/uncertainty.hpp"

namespace tfa {

/// A product of cyclic groups Z_{n1} x ... x Z_{nr}. Elements are addressed
/// by their flat index in lexicographic tuple order, first factor most
/// significant. The dual group is identified with the group itself through
/// the product character pairing.
struct FiniteAbelianGroup {
    std::vector<std::int64_t> factors;
    std::int64_t order;

    static FiniteAbelianGroup make(std::vector<std::int64_t> factors);

    std::vector<std::int64_t> unflatten(std::int64_t flat) const;
    std::int64_t flatten(const std::vector<std::int64_t>& tuple) const;  // reduces coordinates

    std::int64_t add(std::int64_t x, std::int64_t y) const;
    std::int64_t neg(std::int64_t x) const;

    bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
};

/// "n1xn2x...xnr" -> factor list; e.g. "2x4".
std::vector<std::int64_t> parse_factors(const std::string& text);

/// A complex-valued function on a finite Abelian group, stored in flat
/// element order.
struct GroupSignal {
    FiniteAbelianGroup group;
    std::vector<cplx> v;

    explicit GroupSignal(FiniteAbelianGroup g);
    GroupSignal(FiniteAbelianGroup g, std::vector<cplx> values);

    static GroupSignal zeros(const FiniteAbelianGroup& g) { return GroupSignal(g); }
    static GroupSignal delta(const FiniteAbelianGroup& g, std::int64_t flat);

    cplx at(std::int64_t flat) const { return v[static_cast<std::size_t>(flat)]; }
};

double norm_sq(const GroupSignal& f);
double norm(const GroupSignal& f);

/// exp(2*pi*i * sum_i k_i * l_i / n_i) for flat indices k, l. Bilinear in
/// the exponent; the exact integer arithmetic runs over a common
/// denominator, so character values at order-dividing arguments are exact.
cplx character(const FiniteAbelianGroup& g, std::int64_t k, std::int64_t l);

/// |A| x |A| table over group x dual, row-major in (j, k) flat indices.
struct AbelianTable {
    FiniteAbelianGroup group;
    std::vector<cplx> e;

    explicit AbelianTable(FiniteAbelianGroup g);

    cplx at(std::int64_t j, std::int64_t k) const {
        return e[static_cast<std::size_t>(j * group.order + k)];
    }
    cplx& at(std::int64_t j, std::int64_t k) {
        return e[static_cast<std::size_t>(j * group.order + k)];
    }
    double max_abs() const;
    double frobenius_sq() const;
};

/// table(j, k) = |A|^{-1/2} sum_l f(l) conj(character(k, l)) conj(g(l - j)).
AbelianTable stft_abelian(const GroupSignal& f, const GroupSignal& g);

/// Flat (j, k) pairs with |entry| > tau * max, sorted; empty for zero table.
std::vector<std::pair<std::int64_t, std::int64_t>> abelian_support(const AbelianTable& t,
                                                                   double tau = kDefaultTau);

/// Support-size bound |supp| >= |A| for the group transform. No witness is
/// attached (the support lives on A x A, not on Z_n x Z_n).
UncertaintyReport abelian_weak_uncertainty_check(const GroupSignal& f, const GroupSignal& g,
                                                 double tau = kDefaultTau);

/// A coset decomposition of an equality-case support: the subgroup obtained
/// by recentring at the least support point, plus that point as offset.
struct AbelianCoset {
    std::vector<std::pair<std::int64_t, std::int64_t>> subgroup;  // sorted flat pairs
    std::pair<std::int64_t, std::int64_t> offset;
};

/// For |supp| = |A| exactly: recentres the support and verifies closure
/// under the componentwise group law by brute force. Returns nullopt when
/// closure fails; throws NotExtremal when the support exceeds |A|.
std::optional<AbelianCoset> abelian_coset_check(const GroupSignal& f, const GroupSignal& g,
                                                double tau = kDefaultTau);

GroupSignal random_unit_group_signal(const FiniteAbelianGroup& g, SplitMix64& rng);

/// Seeded Gaussian pairs against the group bound, with the same redraw rule
/// as the cyclic ensembles. Every equality case must pass the recentred
/// closure check; a failure counts as a violation.
TrialSummary run_abelian_trials(const FiniteAbelianGroup& g, std::int64_t trials,
                                std::uint64_t seed, double tau = kDefaultTau);

}  // namespace tfa
