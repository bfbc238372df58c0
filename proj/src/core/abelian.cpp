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

#include "core/abelian.hpp"

#include <algorithm>
#include <cmath>

namespace tfa {

namespace {

void require_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                        const char* who) {
    if (!(a == b)) throw DomainMismatch(std::string(who) + ": group mismatch");
}

void require_nonzero(const GroupSignal& f, const char* who) {
    if (norm(f) == 0.0) throw InvalidArgument(std::string(who) + ": zero signal");
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::make(std::vector<std::int64_t> factors) {
    if (factors.empty()) throw InvalidArgument("FiniteAbelianGroup: at least one factor required");
    std::int64_t order = 1;
    for (std::int64_t f : factors) {
        if (f < 1) throw InvalidArgument("FiniteAbelianGroup: factors must be positive");
        if (order > kMaxTableModulus / f) {
            throw InvalidArgument("FiniteAbelianGroup: order exceeds table cap " +
                                  std::to_string(kMaxTableModulus));
        }
        order *= f;
    }
    return FiniteAbelianGroup{std::move(factors), order};
}

std::vector<std::int64_t> FiniteAbelianGroup::unflatten(std::int64_t flat) const {
    std::vector<std::int64_t> tuple(factors.size());
    std::int64_t rest = imod(flat, order);
    for (std::size_t i = factors.size(); i-- > 0;) {
        tuple[i] = rest % factors[i];
        rest /= factors[i];
    }
    return tuple;
}

std::int64_t FiniteAbelianGroup::flatten(const std::vector<std::int64_t>& tuple) const {
    if (tuple.size() != factors.size()) {
        throw DomainMismatch("FiniteAbelianGroup: tuple rank mismatch");
    }
    std::int64_t flat = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        flat = flat * factors[i] + imod(tuple[i], factors[i]);
    }
    return flat;
}

std::int64_t FiniteAbelianGroup::add(std::int64_t x, std::int64_t y) const {
    const auto tx = unflatten(x);
    const auto ty = unflatten(y);
    std::vector<std::int64_t> t(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) t[i] = tx[i] + ty[i];
    return flatten(t);
}

std::int64_t FiniteAbelianGroup::neg(std::int64_t x) const {
    auto t = unflatten(x);
    for (auto& c : t) c = -c;
    return flatten(t);
}

std::vector<std::int64_t> parse_factors(const std::string& text) {
    std::vector<std::int64_t> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find('x', pos);
        const std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.empty() || part.size() > 6 ||
            part.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("parse_factors: malformed factor list \"" + text + "\"");
        }
        factors.push_back(std::stoll(part));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return factors;
}

GroupSignal::GroupSignal(FiniteAbelianGroup g)
    : group(std::move(g)), v(static_cast<std::size_t>(group.order), cplx(0.0, 0.0)) {}

GroupSignal::GroupSignal(FiniteAbelianGroup g, std::vector<cplx> values)
    : group(std::move(g)), v(std::move(values)) {
    if (static_cast<std::int64_t>(v.size()) != group.order) {
        throw InvalidArgument("GroupSignal: value count does not match group order");
    }
}

GroupSignal GroupSignal::delta(const FiniteAbelianGroup& g, std::int64_t flat) {
    GroupSignal f(g);
    f.v[static_cast<std::size_t>(imod(flat, g.order))] = cplx(1.0, 0.0);
    return f;
}

double norm_sq(const GroupSignal& f) {
    double s = 0.0;
    for (const cplx& z : f.v) s += std::norm(z);
    return s;
}

double norm(const GroupSignal& f) { return std::sqrt(norm_sq(f)); }

cplx character(const FiniteAbelianGroup& g, std::int64_t k, std::int64_t l) {
    if (k < 0 || k >= g.order || l < 0 || l >= g.order) {
        throw InvalidArgument("character: flat index out of range");
    }
    const auto tk = g.unflatten(k);
    const auto tl = g.unflatten(l);
    // Common denominator |A|: sum k_i l_i / n_i = sum k_i l_i (|A| / n_i) / |A|.
    std::int64_t num = 0;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        const std::int64_t w = g.order / g.factors[i];
        num = imod(num + imod(tk[i] * tl[i], g.order) * w, g.order);
    }
    return unit_phase(num, g.order);
}

AbelianTable::AbelianTable(FiniteAbelianGroup g)
    : group(std::move(g)),
      e(static_cast<std::size_t>(group.order) * static_cast<std::size_t>(group.order),
        cplx(0.0, 0.0)) {}

double AbelianTable::max_abs() const {
    double m = 0.0;
    for (const cplx& z : e) m = std::max(m, std::abs(z));
    return m;
}

double AbelianTable::frobenius_sq() const {
    double s = 0.0;
    for (const cplx& z : e) s += std::norm(z);
    return s;
}

AbelianTable stft_abelian(const GroupSignal& f, const GroupSignal& g) {
    require_same_group(f.group, g.group, "stft_abelian");
    const FiniteAbelianGroup& grp = f.group;
    const std::int64_t order = grp.order;
    AbelianTable t(grp);

    const double scale = 1.0 / std::sqrt(static_cast<double>(order));
    std::vector<cplx> shifted(static_cast<std::size_t>(order));
    for (std::int64_t j = 0; j < order; ++j) {
        const std::int64_t nj = grp.neg(j);
        for (std::int64_t l = 0; l < order; ++l) {
            shifted[static_cast<std::size_t>(l)] = std::conj(g.at(grp.add(l, nj)));
        }
        for (std::int64_t k = 0; k < order; ++k) {
            cplx acc(0.0, 0.0);
            for (std::int64_t l = 0; l < order; ++l) {
                acc += f.at(l) * std::conj(character(grp, k, l)) *
                       shifted[static_cast<std::size_t>(l)];
            }
            t.at(j, k) = scale * acc;
        }
    }
    return t;
}

std::vector<std::pair<std::int64_t, std::int64_t>> abelian_support(const AbelianTable& t,
                                                                   double tau) {
    if (!(tau > 0.0)) throw InvalidArgument("abelian_support: tau must be positive");
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    const double m = t.max_abs();
    if (m == 0.0) return pts;
    const double cut = tau * m;
    for (std::int64_t j = 0; j < t.group.order; ++j) {
        for (std::int64_t k = 0; k < t.group.order; ++k) {
            if (std::abs(t.at(j, k)) > cut) pts.emplace_back(j, k);
        }
    }
    return pts;
}

UncertaintyReport abelian_weak_uncertainty_check(const GroupSignal& f, const GroupSignal& g,
                                                 double tau) {
    require_same_group(f.group, g.group, "abelian_weak_uncertainty_check");
    require_nonzero(f, "abelian_weak_uncertainty_check");
    require_nonzero(g, "abelian_weak_uncertainty_check");

    const AbelianTable t = stft_abelian(f, g);
    const auto supp = abelian_support(t, tau);
    const double total = norm_sq(f) * norm_sq(g);
    double on_support = 0.0;
    for (const auto& [j, k] : supp) on_support += std::norm(t.at(j, k));
    const double peak = t.max_abs();

    UncertaintyReport r;
    r.kind = CheckKind::kAbelianWeak;
    r.n = f.group.order;
    r.support_size = static_cast<std::int64_t>(supp.size());
    r.bound = f.group.order;
    r.holds = r.support_size >= r.bound;
    r.equality = r.support_size == r.bound;
    r.energy_residual = std::abs(on_support - total) / total;
    r.peak_ratio = static_cast<double>(r.n) * peak * peak / total;
    return r;
}

std::optional<AbelianCoset> abelian_coset_check(const GroupSignal& f, const GroupSignal& g,
                                                double tau) {
    require_same_group(f.group, g.group, "abelian_coset_check");
    require_nonzero(f, "abelian_coset_check");
    require_nonzero(g, "abelian_coset_check");
    const FiniteAbelianGroup& grp = f.group;

    auto supp = abelian_support(stft_abelian(f, g), tau);
    const auto size = static_cast<std::int64_t>(supp.size());
    if (size > grp.order) {
        throw NotExtremal("abelian_coset_check: support size " + std::to_string(size) +
                          " exceeds " + std::to_string(grp.order));
    }
    if (size < grp.order) {
        throw NumericallyAmbiguous("abelian_coset_check: support smaller than the group order");
    }

    const auto offset = supp.front();  // least pair; abelian_support emits sorted
    std::vector<std::pair<std::int64_t, std::int64_t>> centred;
    centred.reserve(supp.size());
    for (const auto& [j, k] : supp) {
        centred.emplace_back(grp.add(j, grp.neg(offset.first)),
                             grp.add(k, grp.neg(offset.second)));
    }
    std::sort(centred.begin(), centred.end());

    for (const auto& x : centred) {
        for (const auto& y : centred) {
            const std::pair<std::int64_t, std::int64_t> z{grp.add(x.first, y.first),
                                                          grp.add(x.second, y.second)};
            if (!std::binary_search(centred.begin(), centred.end(), z)) return std::nullopt;
        }
    }
    return AbelianCoset{std::move(centred), offset};
}

GroupSignal random_unit_group_signal(const FiniteAbelianGroup& g, SplitMix64& rng) {
    GroupSignal f(g);
    for (auto& z : f.v) z = rng.next_gaussian();
    const double nf = norm(f);
    if (nf == 0.0) return GroupSignal::delta(g, 0);
    for (auto& z : f.v) z /= nf;
    return f;
}

TrialSummary run_abelian_trials(const FiniteAbelianGroup& g, std::int64_t trials,
                                std::uint64_t seed, double tau) {
    if (trials < 0) throw InvalidArgument("run_abelian_trials: bad arguments");
    TrialSummary s;
    s.kind = CheckKind::kAbelianWeak;
    s.n = g.order;
    s.trials = trials;
    constexpr std::int64_t kMaxRedraws = 16;
    for (std::int64_t t = 0; t < trials; ++t) {
        GroupSignal f = GroupSignal::zeros(g);
        GroupSignal w = GroupSignal::zeros(g);
        for (std::int64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
            SplitMix64 rf(derive_seed(seed, {static_cast<std::uint64_t>(g.order),
                                             2 * static_cast<std::uint64_t>(t),
                                             static_cast<std::uint64_t>(attempt)}));
            SplitMix64 rg(derive_seed(seed, {static_cast<std::uint64_t>(g.order),
                                             2 * static_cast<std::uint64_t>(t) + 1,
                                             static_cast<std::uint64_t>(attempt)}));
            f = random_unit_group_signal(g, rf);
            w = random_unit_group_signal(g, rg);
            const AbelianTable tab = stft_abelian(f, w);
            double m = tab.max_abs();
            bool flaky = false;
            if (m > 0.0) {
                for (const cplx& z : tab.e) {
                    const double a = std::abs(z);
                    if (a >= 0.1 * tau * m && a <= 10.0 * tau * m) {
                        flaky = true;
                        break;
                    }
                }
            }
            if (!flaky) break;
        }
        UncertaintyReport r = abelian_weak_uncertainty_check(f, w, tau);
        if (r.equality) {
            // The structural claim must hold on every equality case.
            try {
                if (!abelian_coset_check(f, w, tau)) r.holds = false;
            } catch (const Error&) {
                r.holds = false;
            }
        }
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
    return s;
}

}  // namespace tfa
