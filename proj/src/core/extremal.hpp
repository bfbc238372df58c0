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
#include <utility>

#include "core/common.hpp"
#include "core/group.hpp"
#include "core/signal.hpp"
#include "core/stft.hpp"

namespace tfa {

/// Parameters of a window/signal pair whose short-time Fourier transform has
/// support of the minimum possible size n:
///
///   g = c1 * shift(lambda) chirp(p, a) indicator(aZ_n),   a = n / b,
///   f = c2 * shift(mu) g,
///
/// with supp of the transform equal to mu + subgroup(b, p). The same pair is
/// produced by several parameter choices; the classifier returns a canonical
/// one (lambda derived from the window's support and phases, mu the
/// lexicographically least support point).
struct ExtremalSpec {
    std::int64_t n;
    std::int64_t b;
    std::int64_t p;
    std::int64_t a;  // n / b
    PhasePoint lambda;
    PhasePoint mu;
    cplx c1;
    cplx c2;

    /// Validates b | n, nonzero amplitudes; reduces p mod b and the shifts
    /// mod n.
    static ExtremalSpec make(std::int64_t n, std::int64_t b, std::int64_t p, PhasePoint lambda,
                             PhasePoint mu, cplx c1, cplx c2);

    SubgroupSpec subgroup() const { return SubgroupSpec::make(n, b, p); }
};

/// The pair (f, g) described by spec.
std::pair<Signal, Signal> make_extremal_pair(const ExtremalSpec& spec);

/// mu + subgroup(b, p): the exact support of the transform of the pair.
SupportSet predicted_support(const ExtremalSpec& spec);

struct VerifyResult {
    bool extremal;  // support size equals the modulus
    SupportSet support;
};

/// Computes the transform of (f, g) and reports whether its support at
/// threshold tau has the minimum possible size. Rejects zero signals.
VerifyResult verify_extremal(const Signal& f, const Signal& g, double tau = kDefaultTau);

/// Intermediate quantities of the classification, kept for diagnostics.
struct ClassificationTrace {
    std::int64_t j0;  // window support offset mod a
    std::int64_t k1;  // modulation recovered from the dechirped window table
    std::int64_t j1;  // always 0; retained as a consistency witness
    Signal gamma;     // dechirped, recentred window
};

struct Classification {
    ExtremalSpec spec;
    ClassificationTrace trace;
    double window_residual;  // ||g - c1 * model|| / ||g||
    double pair_residual;    // ||f - c2 * shift(mu) g|| / ||f||
};

/// Recovers an ExtremalSpec from a pair whose transform has minimal support.
/// Returns nullopt when the support is strictly larger than n (the pair is
/// not extremal). Throws NumericallyAmbiguous when the support statistics sit
/// too close to the threshold to decide, and InvalidArgument on zero input.
///
/// The recovered spec satisfies make_extremal_pair(spec) == (f, g) up to the
/// reported residuals, with b, p exact and mu unique modulo the subgroup.
std::optional<Classification> classify_extremal(const Signal& f, const Signal& g,
                                                double tau = kDefaultTau);

/// Inverts a table produced by stft(f, f): returns a signal whose auto
/// transform reproduces the table, up to one global phase. The zero table
/// yields the zero signal. Throws InconsistentTable when the table is not an
/// auto transform (certified by recomputing).
Signal reconstruct_from_auto_stft(const STFTTable& t, double tau = kDefaultTau);

}  // namespace tfa
