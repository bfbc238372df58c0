// Copyright 2026 The tfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate. One pass/fail line per shipped guarantee; every section
// derives its expectation independently of the code under test (closed
// forms, brute-force oracles, re-run determinism). Exits nonzero if any
// line fails. Tolerances are pinned inline next to each check.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/abelian.hpp"
#include "core/extremal.hpp"
#include "core/group.hpp"
#include "core/rng.hpp"
#include "core/signal.hpp"
#include "core/stft.hpp"
#include "core/uncertainty.hpp"
#include "support/oracles.hpp"

namespace {

using tfa::cplx;
using tfa::PhasePoint;
using tfa::Signal;

std::uint64_t u64(std::int64_t v) { return static_cast<std::uint64_t>(v); }

double dist(const Signal& x, const Signal& y) { return tfa::norm(x - y); }

bool fail(const std::string& what) {
    std::cerr << "  " << what << "\n";
    return false;
}

// ---------------------------------------------------------------------------
// 1. Weak support bound on seeded Gaussian ensembles, orders 1..32.

bool weak_bound_on_ensembles() {
    for (std::int64_t n = 1; n <= 32; ++n) {
        const tfa::TrialSummary s = tfa::run_weak_uncertainty_trials(n, 200, 42);
        if (s.trials != 200 || s.violations != 0 || s.min_support < n) {
            return fail("weak ensemble n=" + std::to_string(n) +
                        " violations=" + std::to_string(s.violations) +
                        " min_support=" + std::to_string(s.min_support));
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 2 and 3 share one deterministic stream of random pair parameters: every
// order up to 24, every subgroup (b, p), twenty draws each.

tfa::ExtremalSpec random_spec(std::int64_t n, std::int64_t b, std::int64_t p, std::int64_t t) {
    tfa::SplitMix64 rng(tfa::derive_seed(2200, {u64(n), u64(b), u64(p), u64(t)}));
    const auto draw = [&rng, n] { return static_cast<std::int64_t>(rng.next() % u64(n)); };
    const std::int64_t lj = draw(), lk = draw(), mj = draw(), mk = draw();
    const auto coeff = [&rng] {
        cplx c;
        do {
            c = rng.next_gaussian();
        } while (std::abs(c) < 1e-3);
        return c;
    };
    const cplx c1 = coeff();
    const cplx c2 = coeff();
    return tfa::ExtremalSpec::make(n, b, p, PhasePoint(n, lj, lk), PhasePoint(n, mj, mk), c1, c2);
}

template <typename Fn>
bool for_each_spec(Fn&& fn) {
    for (std::int64_t n = 1; n <= 24; ++n) {
        for (std::int64_t b : tfa::divisors(n)) {
            for (std::int64_t p = 0; p < b; ++p) {
                for (std::int64_t t = 0; t < 20; ++t) {
                    if (!fn(random_spec(n, b, p, t))) {
                        return fail("pair n=" + std::to_string(n) + " b=" + std::to_string(b) +
                                    " p=" + std::to_string(p) + " draw=" + std::to_string(t));
                    }
                }
            }
        }
    }
    return true;
}

bool extremal_forward() {
    return for_each_spec([](const tfa::ExtremalSpec& spec) {
        const auto [f, g] = tfa::make_extremal_pair(spec);
        const tfa::STFTTable t = tfa::stft(f, g);
        const tfa::SupportSet got = tfa::support_of(t);
        if (!(got == tfa::predicted_support(spec))) return fail("support is not the coset");
        if (got.size() != spec.n) return fail("support size is not the order");
        const double amp = tfa::norm(f) * tfa::norm(g) / std::sqrt(static_cast<double>(spec.n));
        for (const PhasePoint& pt : got.points()) {
            if (std::abs(std::abs(t.at(pt.j, pt.k)) - amp) > 1e-10 * std::max(1.0, amp)) {
                return fail("support entry modulus is not flat");
            }
        }
        return true;
    });
}

bool classification_round_trip() {
    return for_each_spec([](const tfa::ExtremalSpec& spec) {
        const auto [f, g] = tfa::make_extremal_pair(spec);
        const auto got = tfa::classify_extremal(f, g);
        if (!got) return fail("pair not recognized as extremal");
        if (got->spec.b != spec.b || got->spec.p != spec.p) return fail("wrong subgroup recovered");
        const tfa::SupportSet sub = tfa::subgroup_points(spec.subgroup());
        if (!sub.contains(got->spec.mu - spec.mu)) return fail("offset not in the subgroup");
        const auto [f2, g2] = tfa::make_extremal_pair(got->spec);
        const cplx z = tfa::inner(f, f2) + tfa::inner(g, g2);
        const cplx phase = std::abs(z) > 0.0 ? z / std::abs(z) : cplx{1.0, 0.0};
        const double err = std::sqrt(tfa::norm_sq(f - tfa::scaled(f2, phase)) +
                                     tfa::norm_sq(g - tfa::scaled(g2, phase)));
        const double scale = std::sqrt(tfa::norm_sq(f) + tfa::norm_sq(g));
        if (err > 1e-10 * scale) return fail("reconstruction residual too large");
        return true;
    });
}

// ---------------------------------------------------------------------------
// 4. Operator identities on random signals, orders 1..24: shift commutation,
// energy, the pointwise bound, both covariance laws, and the chirp
// intertwining relation on subgroup-supported signals for every divisor.

bool identity_suite() {
    const double tol = 1e-12;
    for (std::int64_t n = 1; n <= 24; ++n) {
        for (std::int64_t t = 0; t < 50; ++t) {
            tfa::SplitMix64 rng(tfa::derive_seed(2400, {u64(n), u64(t)}));
            const Signal f = tfa::random_unit_signal(n, rng);
            const Signal g = tfa::random_unit_signal(n, rng);
            const auto draw = [&rng, n] { return static_cast<std::int64_t>(rng.next() % u64(n)); };
            const std::int64_t j = draw(), k = draw(), jp = draw(), kp = draw();
            const PhasePoint lam(n, j, k), mu(n, jp, kp);

            const Signal ex1 = tfa::translate(tfa::modulate(f, k), j);
            const Signal ex2 =
                tfa::scaled(tfa::modulate(tfa::translate(f, j), k), tfa::unit_phase(-j * k, n));
            if (dist(ex1, ex2) > tol) return fail("shift exchange n=" + std::to_string(n));

            const Signal co1 = tfa::tf_shift(tfa::tf_shift(f, mu), lam);
            const Signal co2 = tfa::scaled(tfa::tf_shift(tfa::tf_shift(f, lam), mu),
                                           tfa::unit_phase(k * jp - kp * j, n));
            if (dist(co1, co2) > tol) return fail("shift commutation n=" + std::to_string(n));

            const tfa::STFTTable base = tfa::stft(f, g);
            if (tfa::parseval_residual(base, f, g) > tol) {
                return fail("energy identity n=" + std::to_string(n));
            }
            if (base.max_abs() >
                tfa::norm(f) * tfa::norm(g) / std::sqrt(static_cast<double>(n)) + tol) {
                return fail("pointwise bound n=" + std::to_string(n));
            }

            const tfa::STFTTable shifted = tfa::stft(tfa::tf_shift(f, lam), g);
            const tfa::STFTTable moved = tfa::stft(tfa::tf_shift(f, lam), tfa::tf_shift(g, lam));
            for (std::int64_t j2 = 0; j2 < n; ++j2) {
                for (std::int64_t k2 = 0; k2 < n; ++k2) {
                    const cplx cov = tfa::unit_phase((k - k2) * j, n) * base.at(j2 - j, k2 - k);
                    if (std::abs(shifted.at(j2, k2) - cov) > tol) {
                        return fail("covariance n=" + std::to_string(n));
                    }
                    const cplx joint = tfa::unit_phase(k * j2 - k2 * j, n) * base.at(j2, k2);
                    if (std::abs(moved.at(j2, k2) - joint) > tol) {
                        return fail("joint covariance n=" + std::to_string(n));
                    }
                }
            }

            for (std::int64_t a : tfa::divisors(n)) {
                const std::int64_t b = n / a;
                Signal h(n);
                for (std::int64_t l = 0; l < n; l += a) {
                    h.v[static_cast<std::size_t>(l)] = rng.next_gaussian();
                }
                if (tfa::norm(h) == 0.0) h.v[0] = cplx{1.0, 0.0};
                h = tfa::scaled(h, 1.0 / tfa::norm(h));
                const std::int64_t p = static_cast<std::int64_t>(rng.next() % u64(b));
                const std::int64_t m = static_cast<std::int64_t>(rng.next() % u64(b));
                const std::int64_t q = static_cast<std::int64_t>(rng.next() % u64(a));
                const PhasePoint skew(n, m * a, q * b + m * p);
                const PhasePoint plain(n, m * a, q * b);
                const Signal lhs = tfa::tf_shift(tfa::chirp(p, a, h), skew);
                const Signal rhs = tfa::scaled(tfa::chirp(p, a, tfa::tf_shift(h, plain)),
                                               tfa::unit_phase(p * m * m * (1 + b), 2 * b));
                if (dist(lhs, rhs) > tol) {
                    return fail("intertwining n=" + std::to_string(n) + " a=" + std::to_string(a));
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 5. The subgroup indicator pair transforms to the indicated order-n
// subgroup with exact amplitude: V(chi, chi) = (b / sqrt(n)) chi_{H_{b,0}}.

bool subgroup_indicator_closed_form() {
    for (std::int64_t n = 1; n <= 36; ++n) {
        for (std::int64_t a : tfa::divisors(n)) {
            const std::int64_t b = n / a;
            const Signal chi = Signal::indicator(n, tfa::cyclic_subgroup(n, a));
            const tfa::STFTTable t = tfa::stft(chi, chi);
            const tfa::SupportSet sub = tfa::subgroup_points(tfa::SubgroupSpec::make(n, b, 0));
            const double amp = static_cast<double>(b) / std::sqrt(static_cast<double>(n));
            for (std::int64_t j = 0; j < n; ++j) {
                for (std::int64_t k = 0; k < n; ++k) {
                    const cplx want =
                        sub.contains(PhasePoint(n, j, k)) ? cplx{amp, 0.0} : cplx{0.0, 0.0};
                    if (std::abs(t.at(j, k) - want) > 1e-12 * static_cast<double>(b)) {
                        return fail("indicator table n=" + std::to_string(n) +
                                    " a=" + std::to_string(a));
                    }
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 6. Subgroup enumeration agrees with generator-closure brute force for
// orders up to 12, and its count equals the divisor sum up to 100.

bool subgroup_enumeration() {
    for (std::int64_t n = 1; n <= 12; ++n) {
        std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> got;
        for (const tfa::SubgroupSpec& s : tfa::enumerate_order_n_subgroups(n)) {
            std::vector<std::pair<std::int64_t, std::int64_t>> pts;
            const tfa::SupportSet sub = tfa::subgroup_points(s);
            for (const PhasePoint& pt : sub.points()) pts.emplace_back(pt.j, pt.k);
            std::sort(pts.begin(), pts.end());
            got.insert(std::move(pts));
        }
        if (got != oracles::brute_force_order_n_subgroups(n)) {
            return fail("enumeration differs from brute force at n=" + std::to_string(n));
        }
    }
    for (std::int64_t n = 1; n <= 100; ++n) {
        std::int64_t sigma = 0;
        for (std::int64_t d : tfa::divisors(n)) sigma += d;
        const auto list = tfa::enumerate_order_n_subgroups(n);
        if (static_cast<std::int64_t>(list.size()) != sigma) {
            return fail("count differs from the divisor sum at n=" + std::to_string(n));
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 7. Reconstruction from the auto transform inverts it up to a global phase.

bool auto_transform_inversion() {
    for (std::int64_t n = 1; n <= 32; ++n) {
        for (std::int64_t t = 0; t < 100; ++t) {
            tfa::SplitMix64 rng(tfa::derive_seed(2700, {u64(n), u64(t)}));
            const Signal f = tfa::random_unit_signal(n, rng);
            const Signal r = tfa::reconstruct_from_auto_stft(tfa::stft(f, f));
            const cplx z = tfa::inner(f, r);
            const cplx phase = std::abs(z) > 0.0 ? z / std::abs(z) : cplx{1.0, 0.0};
            if (dist(f, tfa::scaled(r, phase)) > 1e-10) {
                return fail("inversion n=" + std::to_string(n) + " draw=" + std::to_string(t));
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 8. Support product bound on the same ensembles, with equality across the
// whole shifted-indicator family; prime sum bound with its equality cases.

bool product_and_sum_bounds() {
    for (std::int64_t n = 1; n <= 32; ++n) {
        const tfa::TrialSummary s = tfa::run_donoho_stark_trials(n, 200, 42);
        if (s.trials != 200 || s.violations != 0) {
            return fail("product bound ensemble n=" + std::to_string(n));
        }
    }
    for (std::int64_t n = 1; n <= 36; ++n) {
        for (std::int64_t a : tfa::divisors(n)) {
            const Signal chi = Signal::indicator(n, tfa::cyclic_subgroup(n, a));
            for (std::int64_t j = 0; j < n; ++j) {
                for (std::int64_t k = 0; k < n; ++k) {
                    const auto rep = tfa::donoho_stark_check(tfa::tf_shift(chi, PhasePoint(n, j, k)));
                    if (!rep.holds || !rep.equality) {
                        return fail("shifted indicator equality n=" + std::to_string(n) +
                                    " a=" + std::to_string(a));
                    }
                }
            }
        }
    }
    for (std::int64_t n = 2; n <= 31; ++n) {
        if (!tfa::is_prime(n)) continue;
        const tfa::TrialSummary s = tfa::run_tao_trials(n, 200, 42);
        if (s.trials != 200 || s.violations != 0) {
            return fail("sum bound ensemble n=" + std::to_string(n));
        }
        for (std::int64_t j = 0; j < n; ++j) {
            const auto rep = tfa::tao_check(Signal::delta(n, j));
            if (!rep.holds || !rep.equality) return fail("delta equality n=" + std::to_string(n));
        }
        const auto rep = tfa::tao_check(Signal::ones(n));
        if (!rep.holds || !rep.equality) return fail("constant equality n=" + std::to_string(n));
    }
    return true;
}

// ---------------------------------------------------------------------------
// 9. Product-group bound on four groups (equality cases pass the recentred
// closure check inside the runner), and the single-factor transform equals
// the cyclic one.

bool product_group_bound() {
    const std::vector<std::vector<std::int64_t>> groups = {{2, 2}, {2, 4}, {3, 3}, {2, 2, 3}};
    for (const auto& factors : groups) {
        const tfa::FiniteAbelianGroup g = tfa::FiniteAbelianGroup::make(factors);
        const tfa::TrialSummary s = tfa::run_abelian_trials(g, 200, 42);
        if (s.trials != 200 || s.violations != 0) {
            return fail("product-group ensemble order=" + std::to_string(g.order));
        }
    }
    for (std::int64_t n : {1, 2, 3, 5, 8, 12}) {
        tfa::SplitMix64 rng(tfa::derive_seed(2900, {u64(n)}));
        const Signal f = tfa::random_unit_signal(n, rng);
        const Signal w = tfa::random_unit_signal(n, rng);
        const tfa::FiniteAbelianGroup g = tfa::FiniteAbelianGroup::make({n});
        const tfa::AbelianTable at = tfa::stft_abelian(tfa::GroupSignal(g, f.v),
                                                       tfa::GroupSignal(g, w.v));
        const tfa::STFTTable ct = tfa::stft(f, w);
        for (std::int64_t j = 0; j < n; ++j) {
            for (std::int64_t k = 0; k < n; ++k) {
                if (std::abs(at.at(j, k) - ct.at(j, k)) > 1e-13) {
                    return fail("single-factor reduction n=" + std::to_string(n));
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 10. Exhaustive scans over small alphabets: no violation anywhere, and the
// scan itself validates every equality case structurally.

bool exhaustive_scans() {
    const auto pm1 = tfa::named_alphabet("pm1");
    const auto gauss = tfa::named_alphabet("gauss");
    for (std::int64_t n : {2, 3}) {
        const tfa::ScanReport rep = tfa::exhaustive_small_scan(n, pm1);
        if (rep.trials <= 0 || rep.violations != 0 || rep.equality_cases.empty()) {
            return fail("scan n=" + std::to_string(n) + " over {0, 1, -1}");
        }
    }
    const tfa::ScanReport rep = tfa::exhaustive_small_scan(2, gauss);
    if (rep.trials <= 0 || rep.violations != 0 || rep.equality_cases.empty()) {
        return fail("scan n=2 over {0, 1, -1, i, -i}");
    }
    return true;
}

// ---------------------------------------------------------------------------
// 11. The command line tool is deterministic: two runs of a fixed-seed
// session in fresh directories produce byte-identical stdout and files.

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool cli_determinism() {
    namespace fs = std::filesystem;
    ::unsetenv("TFA_SEED");
    const fs::path base =
        fs::temp_directory_path() / ("tfa_acceptance_" + std::to_string(::getpid()));
    std::error_code ec;
    fs::remove_all(base, ec);
    const std::vector<std::string> names = {"subgroups.txt", "verify.txt", "extremal.txt",
                                            "stft.txt",      "classify.txt", "f.json",
                                            "g.json",        "table.csv"};
    std::vector<std::string> captured[2];
    for (int run = 0; run < 2; ++run) {
        const fs::path dir = base / ("run" + std::to_string(run));
        fs::create_directories(dir);
        const std::string d = dir.string();
        const struct {
            std::string args;
            const char* out;
        } cmds[] = {
            {"subgroups --n 12", "subgroups.txt"},
            {"verify --n 12 --trials 50 --seed 42", "verify.txt"},
            {"extremal --n 12 --b 4 --p 1 --mu 3,2 --out-f '" + d + "/f.json' --out-g '" + d +
                 "/g.json'",
             "extremal.txt"},
            {"stft --n 12 --f '" + d + "/f.json' --g '" + d + "/g.json' --out '" + d +
                 "/table.csv'",
             "stft.txt"},
            {"classify --f '" + d + "/f.json' --g '" + d + "/g.json'", "classify.txt"},
        };
        for (const auto& c : cmds) {
            const std::string cmd = std::string("'") + TFA_CLI_PATH + "' " + c.args + " > '" +
                                    (dir / c.out).string() + "' 2>/dev/null";
            if (std::system(cmd.c_str()) != 0) return fail("command failed: " + c.args);
        }
        for (const std::string& nm : names) captured[run].push_back(slurp(dir / nm));
    }
    fs::remove_all(base, ec);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (captured[0][i].empty()) return fail("empty capture: " + names[i]);
        if (captured[0][i] != captured[1][i]) return fail("runs differ: " + names[i]);
    }
    return true;
}

}  // namespace

int main() {
    const struct {
        const char* name;
        bool (*check)();
    } rows[] = {
        {"weak support bound on seeded Gaussian ensembles, orders 1..32", weak_bound_on_ensembles},
        {"extremal pairs transform onto flat subgroup cosets, orders 1..24", extremal_forward},
        {"classification round-trips every extremal pair", classification_round_trip},
        {"shift, energy, covariance and intertwining identities, orders 1..24", identity_suite},
        {"subgroup indicator transform matches its closed form, orders 1..36",
         subgroup_indicator_closed_form},
        {"subgroup enumeration matches brute force and the divisor-sum count",
         subgroup_enumeration},
        {"auto-transform reconstruction inverts up to a global phase, orders 1..32",
         auto_transform_inversion},
        {"support product bound and prime sum bound with equality families",
         product_and_sum_bounds},
        {"product-group bound and single-factor reduction", product_group_bound},
        {"exhaustive small-alphabet scans find no counterexample", exhaustive_scans},
        {"fixed-seed command line runs are byte-identical", cli_determinism},
    };

    int failures = 0;
    for (const auto& row : rows) {
        const bool ok = row.check();
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << row.name << std::endl;
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "all acceptance checks passed" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance check(s) failed" << std::endl;
    return 1;
}
