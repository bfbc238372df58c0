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

#include "core/uncertainty.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace tfa {

namespace {

constexpr std::int64_t kMaxRedraws = 16;
constexpr std::int64_t kMaxWitnessPoints = 1 << 16;
constexpr std::int64_t kMaxScanStates = 1 << 22;

// True when some entry modulus falls within a factor 10 of the support
// threshold tau * max; thresholding such a table is a coin flip.
bool near_support_threshold(const std::vector<cplx>& entries, double tau) {
    double m = 0.0;
    for (const cplx& z : entries) m = std::max(m, std::abs(z));
    if (m == 0.0) return false;
    const double lo = 0.1 * tau * m;
    const double hi = 10.0 * tau * m;
    for (const cplx& z : entries) {
        const double a = std::abs(z);
        if (a >= lo && a <= hi) return true;
    }
    return false;
}

Signal draw_unit_signal(std::int64_t n, std::uint64_t seed,
                        std::initializer_list<std::uint64_t> labels) {
    SplitMix64 rng(derive_seed(seed, labels));
    return random_unit_signal(n, rng);
}

void require_nonzero(const Signal& f, const char* who) {
    if (norm(f) == 0.0) throw InvalidArgument(std::string(who) + ": zero signal");
}

void fold_into_summary(TrialSummary& s, const UncertaintyReport& r) {
    if (!r.holds) ++s.violations;
    if (r.equality) ++s.equality_count;
    if (s.support_sizes.empty()) {
        s.min_support = s.max_support = r.support_size;
    } else {
        s.min_support = std::min(s.min_support, r.support_size);
        s.max_support = std::max(s.max_support, r.support_size);
    }
    s.support_sizes.push_back(r.support_size);
}

}  // namespace

UncertaintyReport weak_uncertainty_check(const Signal& f, const Signal& g, double tau) {
    require_nonzero(f, "weak_uncertainty_check");
    require_nonzero(g, "weak_uncertainty_check");
    const STFTTable t = stft(f, g);
    SupportSet s = support_of(t, tau);

    const double total = norm_sq(f) * norm_sq(g);
    double on_support = 0.0;
    for (const PhasePoint& pt : s.points()) on_support += std::norm(t.at(pt.j, pt.k));
    const double peak = t.max_abs();

    UncertaintyReport r;
    r.kind = CheckKind::kWeak;
    r.n = f.n;
    r.support_size = s.size();
    r.bound = f.n;
    r.holds = r.support_size >= r.bound;
    r.equality = r.support_size == r.bound;
    r.energy_residual = std::abs(on_support - total) / total;
    r.peak_ratio = static_cast<double>(f.n) * peak * peak / total;
    r.witness = std::move(s);
    return r;
}

UncertaintyReport donoho_stark_check(const Signal& f, double tau) {
    require_nonzero(f, "donoho_stark_check");
    const std::vector<std::int64_t> st = signal_support(f, tau);
    const std::vector<std::int64_t> sf = signal_support(dft(f), tau);

    UncertaintyReport r;
    r.kind = CheckKind::kDonohoStark;
    r.n = f.n;
    r.support_size = static_cast<std::int64_t>(st.size()) * static_cast<std::int64_t>(sf.size());
    r.bound = f.n;
    r.holds = r.support_size >= r.bound;
    r.equality = r.support_size == r.bound;
    if (r.support_size <= kMaxWitnessPoints) {
        std::vector<PhasePoint> pts;
        pts.reserve(static_cast<std::size_t>(r.support_size));
        for (std::int64_t j : st)
            for (std::int64_t k : sf) pts.emplace_back(f.n, j, k);
        r.witness = SupportSet::from_points(f.n, std::move(pts));
    }
    return r;
}

UncertaintyReport tao_check(const Signal& f, double tau) {
    if (!is_prime(f.n)) {
        throw InvalidArgument("tao_check: modulus " + std::to_string(f.n) + " is not prime");
    }
    require_nonzero(f, "tao_check");
    const auto st = signal_support(f, tau);
    const auto sf = signal_support(dft(f), tau);

    UncertaintyReport r;
    r.kind = CheckKind::kTao;
    r.n = f.n;
    r.support_size = static_cast<std::int64_t>(st.size()) + static_cast<std::int64_t>(sf.size());
    r.bound = f.n + 1;
    r.holds = r.support_size >= r.bound;
    r.equality = r.support_size == r.bound;
    return r;
}

std::optional<std::pair<SubgroupSpec, PhasePoint>> coset_structure_check(const Signal& f,
                                                                         const Signal& g,
                                                                         double tau) {
    if (f.n != g.n) throw DomainMismatch("coset_structure_check: signal moduli differ");
    require_nonzero(f, "coset_structure_check");
    require_nonzero(g, "coset_structure_check");
    const std::int64_t n = f.n;

    const SupportSet s = support_of(stft(f, g), tau);
    if (s.size() > n) {
        throw NotExtremal("coset_structure_check: support size " + std::to_string(s.size()) +
                          " exceeds " + std::to_string(n));
    }
    if (s.size() < n) {
        throw NumericallyAmbiguous("coset_structure_check: support smaller than the modulus");
    }

    const SupportSet sg = support_of(stft(g, g), tau);
    auto window = as_subgroup_coset(sg);
    if (!window || !(window->second == PhasePoint(n, 0, 0))) return std::nullopt;

    auto coset = as_subgroup_coset(s);
    if (!coset || coset->first != window->first) return std::nullopt;
    return coset;
}

TrialSummary run_weak_uncertainty_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed,
                                         double tau) {
    if (n <= 0 || trials < 0) throw InvalidArgument("run_weak_uncertainty_trials: bad arguments");
    TrialSummary s;
    s.kind = CheckKind::kWeak;
    s.n = n;
    s.trials = trials;
    for (std::int64_t t = 0; t < trials; ++t) {
        Signal f = Signal::zeros(n);
        Signal g = Signal::zeros(n);
        for (std::int64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
            const auto ut = static_cast<std::uint64_t>(t);
            const auto ua = static_cast<std::uint64_t>(attempt);
            f = draw_unit_signal(n, seed, {static_cast<std::uint64_t>(n), 2 * ut, ua});
            g = draw_unit_signal(n, seed, {static_cast<std::uint64_t>(n), 2 * ut + 1, ua});
            if (!near_support_threshold(stft(f, g).e, tau)) break;
        }
        fold_into_summary(s, weak_uncertainty_check(f, g, tau));
    }
    return s;
}

namespace {

TrialSummary run_signal_trials(CheckKind kind, std::int64_t n, std::int64_t trials,
                               std::uint64_t seed, double tau) {
    TrialSummary s;
    s.kind = kind;
    s.n = n;
    s.trials = trials;
    for (std::int64_t t = 0; t < trials; ++t) {
        Signal f = Signal::zeros(n);
        for (std::int64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
            f = draw_unit_signal(n, seed,
                                 {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t),
                                  static_cast<std::uint64_t>(attempt)});
            if (!near_support_threshold(f.v, tau) && !near_support_threshold(dft(f).v, tau)) break;
        }
        fold_into_summary(s, kind == CheckKind::kDonohoStark ? donoho_stark_check(f, tau)
                                                             : tao_check(f, tau));
    }
    return s;
}

}  // namespace

TrialSummary run_donoho_stark_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed,
                                     double tau) {
    if (n <= 0 || trials < 0) throw InvalidArgument("run_donoho_stark_trials: bad arguments");
    return run_signal_trials(CheckKind::kDonohoStark, n, trials, seed, tau);
}

TrialSummary run_tao_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed, double tau) {
    if (trials < 0) throw InvalidArgument("run_tao_trials: bad arguments");
    if (!is_prime(n)) {
        throw InvalidArgument("run_tao_trials: modulus " + std::to_string(n) + " is not prime");
    }
    return run_signal_trials(CheckKind::kTao, n, trials, seed, tau);
}

ScanReport exhaustive_small_scan(std::int64_t n, const std::vector<cplx>& alphabet, double tau) {
    if (n < 1 || n > 6) throw InvalidArgument("exhaustive_small_scan: modulus must be in [1, 6]");
    if (alphabet.empty()) throw InvalidArgument("exhaustive_small_scan: empty alphabet");
    const auto asz = static_cast<std::int64_t>(alphabet.size());
    double states = 1.0;
    for (std::int64_t i = 0; i < 2 * n; ++i) states *= static_cast<double>(asz);
    if (states > static_cast<double>(kMaxScanStates)) {
        throw InvalidArgument("exhaustive_small_scan: state space too large to enumerate");
    }

    std::int64_t vectors = 1;
    for (std::int64_t i = 0; i < n; ++i) vectors *= asz;

    auto fill = [&](std::int64_t code, Signal& out) {
        bool nonzero = false;
        for (std::int64_t l = 0; l < n; ++l) {
            const cplx z = alphabet[static_cast<std::size_t>(code % asz)];
            out.v[static_cast<std::size_t>(l)] = z;
            nonzero |= z != cplx(0.0, 0.0);
            code /= asz;
        }
        return nonzero;
    };

    ScanReport report;
    report.n = n;
    Signal f = Signal::zeros(n);
    Signal g = Signal::zeros(n);
    for (std::int64_t cf = 0; cf < vectors; ++cf) {
        if (!fill(cf, f)) continue;
        for (std::int64_t cg = 0; cg < vectors; ++cg) {
            if (!fill(cg, g)) continue;
            ++report.trials;
            const SupportSet s = support_of(stft(f, g), tau);
            if (s.size() < n) {
                ++report.violations;
                continue;
            }
            if (s.size() > n) continue;

            // Equality case: the structural claims must all hold for it.
            bool ok = false;
            try {
                auto coset = coset_structure_check(f, g, tau);
                auto cls = classify_extremal(f, g, tau);
                ok = coset.has_value() && cls.has_value() &&
                     coset->first.b == cls->spec.b && coset->first.p == cls->spec.p;
                if (ok) {
                    report.equality_cases.push_back(
                        EqualityCase{f, g, cls->spec.b, cls->spec.p, cls->spec.mu});
                }
            } catch (const Error&) {
                ok = false;
            }
            if (!ok) ++report.violations;
        }
    }
    return report;
}

std::vector<cplx> named_alphabet(const std::string& name) {
    if (name == "binary") return {cplx(0, 0), cplx(1, 0)};
    if (name == "pm1") return {cplx(0, 0), cplx(1, 0), cplx(-1, 0)};
    if (name == "gauss") return {cplx(0, 0), cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
    throw InvalidArgument("named_alphabet: unknown alphabet \"" + name + "\"");
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace tfa
