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
#include "core/extremal.hpp"
#include "core/group.hpp"
#include "core/signal.hpp"
#include "core/stft.hpp"

namespace tfa {

enum class CheckKind {
    kWeak,         // |supp V_g f| >= n
    kDonohoStark,  // |supp f| * |supp fhat| >= n
    kTao,          // |supp f| + |supp fhat| >= n + 1, n prime
    kAbelianWeak,  // |supp V_g f| >= |A| on a product of cyclic groups
};

/// Outcome of one support-size bound check.
struct UncertaintyReport {
    CheckKind kind = CheckKind::kWeak;
    std::int64_t n = 0;             // modulus (group order)
    std::int64_t support_size = 0;  // the quantity compared against bound
    std::int64_t bound = 0;
    bool holds = false;     // support_size >= bound
    bool equality = false;  // support_size == bound

    // The support realizing support_size: the table support for the weak
    // check, the product supp(f) x supp(fhat) for the product bound. Omitted
    // for the sum bound and whenever the product set would be large.
    std::optional<SupportSet> witness;

    // Numerical certificates backing the weak check's counting argument
    // (zero for the other kinds): the support must carry all of the energy,
    // and no entry may exceed the Cauchy-Schwarz peak.
    double energy_residual = 0.0;  // |sum_supp |V|^2 - ||f||^2||g||^2| / (||f||^2||g||^2)
    double peak_ratio = 0.0;       // n * max|V|^2 / (||f||^2||g||^2), at most 1 up to roundoff
};

/// Support-size bound for the windowed transform. Rejects zero inputs.
UncertaintyReport weak_uncertainty_check(const Signal& f, const Signal& g,
                                         double tau = kDefaultTau);

/// Product bound |supp f| * |supp fhat| >= n. Rejects the zero signal.
UncertaintyReport donoho_stark_check(const Signal& f, double tau = kDefaultTau);

/// Sum bound |supp f| + |supp fhat| >= n + 1 for prime n. Rejects composite
/// moduli and the zero signal.
UncertaintyReport tao_check(const Signal& f, double tau = kDefaultTau);

/// For a pair whose transform support has the minimum size n: identifies the
/// support as a coset of an order-n subgroup and checks that the window's
/// auto-transform support is that subgroup itself. Returns nullopt if either
/// structure fails; no minimum-support pair should ever do so. Throws
/// NotExtremal when the support is larger than n.
std::optional<std::pair<SubgroupSpec, PhasePoint>> coset_structure_check(
    const Signal& f, const Signal& g, double tau = kDefaultTau);

/// Aggregate of a deterministic seeded ensemble run.
struct TrialSummary {
    CheckKind kind = CheckKind::kWeak;
    std::int64_t n = 0;
    std::int64_t trials = 0;
    std::int64_t violations = 0;      // reports with holds == false
    std::int64_t equality_count = 0;  // reports with equality == true
    std::int64_t min_support = 0;
    std::int64_t max_support = 0;
    std::vector<std::int64_t> support_sizes;  // per trial, in trial order
};

/// Seeded Gaussian pairs, redrawn while any table entry sits within a factor
/// 10 of the support threshold (boundary draws would make thresholding
/// flaky). Trials are indexed deterministically from the seed alone.
TrialSummary run_weak_uncertainty_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed,
                                         double tau = kDefaultTau);

/// Seeded Gaussian signals against the product bound.
TrialSummary run_donoho_stark_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed,
                                     double tau = kDefaultTau);

/// Seeded Gaussian signals against the sum bound; n must be prime.
TrialSummary run_tao_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed,
                            double tau = kDefaultTau);

/// One transform-support equality case found by a scan, with the recovered
/// coset parameters.
struct EqualityCase {
    Signal f;
    Signal g;
    std::int64_t b;
    std::int64_t p;
    PhasePoint mu;
};

struct ScanReport {
    std::int64_t n = 0;
    std::int64_t trials = 0;  // nonzero pairs enumerated
    std::int64_t violations = 0;
    std::vector<EqualityCase> equality_cases;
};

/// Enumerates every nonzero pair over the alphabet (one letter per
/// coordinate), asserting the support bound on each; every equality case
/// must additionally pass coset_structure_check and classify_extremal, and
/// is recorded. Failures of either kind count as violations. The state space
/// |alphabet|^(2n) is capped to keep runs enumerable.
ScanReport exhaustive_small_scan(std::int64_t n, const std::vector<cplx>& alphabet,
                                 double tau = kDefaultTau);

/// Alphabets addressable from the command line: "binary" {0,1},
/// "pm1" {0,1,-1}, "gauss" {0,1,-1,i,-i}.
std::vector<cplx> named_alphabet(const std::string& name);

bool is_prime(std::int64_t n);

}  // namespace tfa
