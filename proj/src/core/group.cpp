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

#include "core/group.hpp"

#include <algorithm>
#include <numeric>

namespace tfa {

namespace {

void require_modulus(std::int64_t n) {
    if (n < 1) throw InvalidArgument("modulus must be a positive integer");
}

void require_same(std::int64_t n, std::int64_t m) {
    if (n != m) throw DomainMismatch("operands live on different cyclic groups");
}

}  // namespace

Zn::Zn(std::int64_t modulus, std::int64_t value) : n(modulus), v(0) {
    require_modulus(modulus);
    v = imod(value, modulus);
}

Zn Zn::operator+(const Zn& o) const {
    require_same(n, o.n);
    return Zn(n, v + o.v);
}

Zn Zn::operator-(const Zn& o) const {
    require_same(n, o.n);
    return Zn(n, v - o.v);
}

Zn Zn::operator*(const Zn& o) const {
    require_same(n, o.n);
    return Zn(n, imod(v * o.v, n));
}

Zn Zn::operator-() const { return Zn(n, -v); }

PhasePoint::PhasePoint(std::int64_t modulus, std::int64_t time, std::int64_t freq)
    : n(modulus), j(0), k(0) {
    require_modulus(modulus);
    j = imod(time, modulus);
    k = imod(freq, modulus);
}

PhasePoint PhasePoint::operator+(const PhasePoint& o) const {
    require_same(n, o.n);
    return {n, j + o.j, k + o.k};
}

PhasePoint PhasePoint::operator-(const PhasePoint& o) const {
    require_same(n, o.n);
    return {n, j - o.j, k - o.k};
}

PhasePoint PhasePoint::operator-() const { return {n, -j, -k}; }

SubgroupSpec SubgroupSpec::make(std::int64_t n, std::int64_t b, std::int64_t p) {
    require_modulus(n);
    if (b < 1 || n % b != 0) throw InvalidArgument("subgroup parameter b must divide n");
    return {n, b, imod(p, b), n / b};
}

SupportSet SupportSet::from_points(std::int64_t n, std::vector<PhasePoint> pts) {
    require_modulus(n);
    for (const auto& p : pts) require_same(n, p.n);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    SupportSet s(n);
    s.pts_ = std::move(pts);
    return s;
}

bool SupportSet::contains(const PhasePoint& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

const PhasePoint& SupportSet::least() const {
    if (pts_.empty()) throw InvalidArgument("least() on an empty set");
    return pts_.front();
}

SupportSet SupportSet::translated(const PhasePoint& mu) const {
    require_same(n_, mu.n);
    std::vector<PhasePoint> out;
    out.reserve(pts_.size());
    for (const auto& p : pts_) out.push_back(p + mu);
    return from_points(n_, std::move(out));
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_modulus(n);
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::int64_t> cyclic_subgroup(std::int64_t n, std::int64_t a) {
    require_modulus(n);
    if (a < 1 || n % a != 0) throw InvalidArgument("subgroup generator must divide the modulus");
    std::vector<std::int64_t> out;
    out.reserve(n / a);
    for (std::int64_t x = 0; x < n; x += a) out.push_back(x);
    return out;
}

SupportSet subgroup_points(const SubgroupSpec& spec) {
    std::vector<PhasePoint> pts;
    pts.reserve(spec.n);
    for (std::int64_t m = 0; m < spec.b; ++m) {
        for (std::int64_t c = 0; c < spec.a; ++c) {
            pts.emplace_back(spec.n, m * spec.a, c * spec.b + m * spec.p);
        }
    }
    return SupportSet::from_points(spec.n, std::move(pts));
}

std::vector<SubgroupSpec> enumerate_order_n_subgroups(std::int64_t n) {
    std::vector<SubgroupSpec> out;
    for (std::int64_t b : divisors(n)) {
        for (std::int64_t p = 0; p < b; ++p) out.push_back(SubgroupSpec::make(n, b, p));
    }
    return out;
}

std::optional<std::pair<SubgroupSpec, PhasePoint>> as_subgroup_coset(const SupportSet& s) {
    const std::int64_t n = s.modulus();
    if (s.size() != n) return std::nullopt;
    const PhasePoint origin = s.least();
    const SupportSet centred = s.translated(-origin);

    // A matching subgroup is pinned down by the first coordinates (which must
    // form the cyclic subgroup generated by a) and by the second coordinates
    // above the generator a (which determine p mod b).
    std::int64_t a = n;  // gcd over the set {n} u {first coordinates}
    for (const auto& pt : centred.points()) a = std::gcd(a, pt.j);
    const std::int64_t b = n / a;

    std::int64_t p = 0;
    if (b > 1) {
        bool found = false;
        for (const auto& pt : centred.points()) {
            if (pt.j == a % n) {
                p = imod(pt.k, b);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }

    const SubgroupSpec spec = SubgroupSpec::make(n, b, p);
    if (centred == subgroup_points(spec)) return std::make_pair(spec, origin);
    return std::nullopt;
}

}  // namespace tfa
