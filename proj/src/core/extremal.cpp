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

#include "core/extremal.hpp"

#include <cmath>
#include <numbers>

namespace tfa {

namespace {

// Tolerance separating "structurally zero / structurally flat" from noise in
// the classifier's internal consistency checks. Well above accumulated
// rounding at the supported moduli, well below any structural deviation,
// which is O(1) relative.
constexpr double kClassifyTol = 1e-10;

// Nearest integer with a guard band: the fractional part must be small, or
// the phase does not encode an integer at all.
std::int64_t round_to_int(double x, const char* what) {
    const double r = std::nearbyint(x);
    if (std::abs(x - r) > 0.01) {
        throw NumericallyAmbiguous(std::string(what) + ": value " + fmt_double(x) +
                                   " is not close to an integer");
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

ExtremalSpec ExtremalSpec::make(std::int64_t n, std::int64_t b, std::int64_t p, PhasePoint lambda,
                                PhasePoint mu, cplx c1, cplx c2) {
    SubgroupSpec sub = SubgroupSpec::make(n, b, p);  // validates n, b | n; reduces p
    if (lambda.n != n || mu.n != n) throw DomainMismatch("ExtremalSpec: shift modulus mismatch");
    if (c1 == cplx(0.0, 0.0) || c2 == cplx(0.0, 0.0)) {
        throw InvalidArgument("ExtremalSpec: amplitudes must be nonzero");
    }
    return ExtremalSpec{n, sub.b, sub.p, sub.a, lambda, mu, c1, c2};
}

std::pair<Signal, Signal> make_extremal_pair(const ExtremalSpec& spec) {
    const Signal base = Signal::indicator(spec.n, cyclic_subgroup(spec.n, spec.a));
    const Signal g = scaled(tf_shift(chirp(spec.p, spec.a, base), spec.lambda), spec.c1);
    const Signal f = scaled(tf_shift(g, spec.mu), spec.c2);
    return {f, g};
}

SupportSet predicted_support(const ExtremalSpec& spec) {
    return subgroup_points(spec.subgroup()).translated(spec.mu);
}

VerifyResult verify_extremal(const Signal& f, const Signal& g, double tau) {
    if (norm(f) == 0.0 || norm(g) == 0.0) {
        throw InvalidArgument("verify_extremal: zero signal");
    }
    const STFTTable t = stft(f, g);
    SupportSet s = support_of(t, tau);
    const bool extremal = s.size() == f.n;
    return VerifyResult{extremal, std::move(s)};
}

std::optional<Classification> classify_extremal(const Signal& f, const Signal& g, double tau) {
    if (f.n != g.n) throw DomainMismatch("classify_extremal: signal moduli differ");
    const std::int64_t n = f.n;
    if (norm(f) == 0.0 || norm(g) == 0.0) {
        throw InvalidArgument("classify_extremal: zero signal");
    }

    const SupportSet s = support_of(stft(f, g), tau);
    if (s.size() > n) return std::nullopt;
    if (s.size() < n) {
        throw NumericallyAmbiguous("classify_extremal: support smaller than the modulus");
    }

    // The window's auto transform must be supported exactly on a subgroup.
    const SupportSet sg = support_of(stft(g, g), tau);
    auto window_coset = as_subgroup_coset(sg);
    if (!window_coset || !(window_coset->second == PhasePoint(n, 0, 0))) {
        throw NumericallyAmbiguous("classify_extremal: window table support is not a subgroup");
    }
    const SubgroupSpec sub = window_coset->first;

    auto pair_coset = as_subgroup_coset(s);
    if (!pair_coset || pair_coset->first != sub) {
        throw NumericallyAmbiguous(
            "classify_extremal: pair support is not a coset of the window subgroup");
    }
    const PhasePoint mu = pair_coset->second;

    // The window is supported on a coset of the cyclic subgroup generated by
    // a; every support index has the same residue.
    const std::vector<std::int64_t> gsupp = signal_support(g, tau);
    const std::int64_t j0 = gsupp.front() % sub.a;
    for (std::int64_t l : gsupp) {
        if (l % sub.a != j0) {
            throw NumericallyAmbiguous("classify_extremal: window support is not a coset");
        }
    }

    // Dechirp and recentre; the result's auto transform is flat on
    // subgroup(b, 0) with a pure modulation phase, and zero off it.
    const Signal gamma = chirp(-sub.p, sub.a, translate(g, -j0));
    const STFTTable gt = stft(gamma, gamma);
    const double flat = norm_sq(gamma) / std::sqrt(static_cast<double>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        for (std::int64_t k = 0; k < n; ++k) {
            const double m = std::abs(gt.at(j, k));
            const bool on = (j % sub.a == 0) && (k % sub.b == 0);
            if (on ? std::abs(m - flat) > kClassifyTol * flat : m > kClassifyTol * flat) {
                throw NumericallyAmbiguous(
                    "classify_extremal: dechirped window table is not flat on the subgroup");
            }
        }
    }

    const double two_pi = 2.0 * std::numbers::pi;
    std::int64_t k1 = 0;
    if (sub.b > 1) {
        const double theta = std::arg(gt.at(sub.a, 0));
        k1 = imod(round_to_int(-theta * static_cast<double>(sub.b) / two_pi, "modulation index"),
                  sub.b);
    }
    std::int64_t j1 = 0;
    if (sub.a > 1) {
        const double phi = std::arg(gt.at(0, sub.b % n));
        j1 = imod(round_to_int(-phi * static_cast<double>(sub.a) / two_pi, "translation index"),
                  sub.a);
        if (j1 != 0) {
            throw NumericallyAmbiguous("classify_extremal: nonzero translation index");
        }
    }

    // Least-squares fit of g against the canonical window model.
    const Signal base = Signal::indicator(n, cyclic_subgroup(n, sub.a));
    const PhasePoint lambda(n, j0, -k1);
    const Signal model = tf_shift(chirp(sub.p, sub.a, base), lambda);
    const cplx c1 = inner(g, model) / norm_sq(model);
    if (std::abs(c1) == 0.0) {
        throw NumericallyAmbiguous("classify_extremal: window does not project onto the model");
    }
    const double window_residual = norm(g - scaled(model, c1)) / norm(g);

    const cplx c2 = inner(f, tf_shift(g, mu)) / norm_sq(g);
    if (std::abs(c2) == 0.0) {
        throw NumericallyAmbiguous("classify_extremal: signal does not project onto the window");
    }
    const double pair_residual = norm(f - scaled(tf_shift(g, mu), c2)) / norm(f);

    if (window_residual > 1e-6 || pair_residual > 1e-6) {
        throw NumericallyAmbiguous("classify_extremal: residuals inconsistent with the family");
    }

    Classification out{
        ExtremalSpec::make(n, sub.b, sub.p, lambda, mu, c1, c2),
        ClassificationTrace{j0, k1, j1, gamma},
        window_residual,
        pair_residual,
    };
    return out;
}

Signal reconstruct_from_auto_stft(const STFTTable& t, double tau) {
    if (!(tau > 0.0)) throw InvalidArgument("reconstruct_from_auto_stft: tau must be positive");
    const std::int64_t n = t.n;
    if (t.max_abs() == 0.0) return Signal::zeros(n);

    // Inverting the frequency sum of row j gives f(l) * conj(f(l - j));
    // row 0 exposes |f|^2.
    std::vector<Signal> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        Signal row = Signal::zeros(n);
        for (std::int64_t k = 0; k < n; ++k) row.v[static_cast<std::size_t>(k)] = t.at(j, k);
        rows.push_back(idft(row));
    }

    std::int64_t pivot = 0;
    double best = rows[0].at(0).real();
    for (std::int64_t l = 1; l < n; ++l) {
        const double m = rows[0].at(l).real();
        if (m > best) {
            best = m;
            pivot = l;
        }
    }
    if (!(best > 0.0)) {
        throw InconsistentTable("reconstruct_from_auto_stft: no positive diagonal mass");
    }

    // Global phase fixed by making f(pivot) real positive.
    Signal f = Signal::zeros(n);
    const double fp = std::sqrt(best);
    f.v[static_cast<std::size_t>(pivot)] = fp;
    for (std::int64_t l = 0; l < n; ++l) {
        if (l == pivot) continue;
        f.v[static_cast<std::size_t>(l)] = rows[static_cast<std::size_t>(imod(l - pivot, n))].at(l) / fp;
    }

    // Certify against the input before returning.
    const STFTTable back = stft(f, f);
    double err = 0.0;
    for (std::size_t i = 0; i < back.e.size(); ++i) err = std::max(err, std::abs(back.e[i] - t.e[i]));
    const double scale = std::max(t.max_abs(), back.max_abs());
    if (err > 1e-8 * scale) {
        throw InconsistentTable("reconstruct_from_auto_stft: table is not an auto transform");
    }
    return f;
}

}  // namespace tfa
