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

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/common.hpp"

namespace tfa {

/// A residue of the cyclic group of order n, always kept in [0, n).
struct Zn {
    std::int64_t n;
    std::int64_t v;

    Zn(std::int64_t modulus, std::int64_t value);

    Zn operator+(const Zn& o) const;
    Zn operator-(const Zn& o) const;
    Zn operator*(const Zn& o) const;
    Zn operator-() const;
    bool operator==(const Zn& o) const { return n == o.n && v == o.v; }
};

/// A point (j, k) of Z_n x Z_n: a time shift paired with a frequency shift.
/// Ordering is lexicographic in (j, k).
struct PhasePoint {
    std::int64_t n;
    std::int64_t j;
    std::int64_t k;

    PhasePoint(std::int64_t modulus, std::int64_t time, std::int64_t freq);

    PhasePoint operator+(const PhasePoint& o) const;
    PhasePoint operator-(const PhasePoint& o) const;
    PhasePoint operator-() const;
    bool operator==(const PhasePoint& o) const = default;
    std::strong_ordering operator<=>(const PhasePoint& o) const {
        if (auto c = j <=> o.j; c != 0) return c;
        return k <=> o.k;
    }
};

/// Parameters (b, p) of an order-n subgroup of Z_n x Z_n: the lattice
/// generated by (a, p) and (0, b), where a = n/b and 0 <= p < b. Every
/// order-n subgroup is of this form for exactly one such pair.
struct SubgroupSpec {
    std::int64_t n;
    std::int64_t b;  // divisor of n
    std::int64_t p;  // in [0, b)
    std::int64_t a;  // n / b

    /// Validates b | n and reduces p mod b.
    static SubgroupSpec make(std::int64_t n, std::int64_t b, std::int64_t p);

    bool operator==(const SubgroupSpec& o) const = default;
};

/// A finite subset of Z_n x Z_n, stored sorted and duplicate-free.
class SupportSet {
public:
    SupportSet() : n_(1) {}
    explicit SupportSet(std::int64_t n) : n_(n) {}

    /// Builds a set from arbitrary points; sorts and deduplicates.
    static SupportSet from_points(std::int64_t n, std::vector<PhasePoint> pts);

    std::int64_t modulus() const { return n_; }
    std::int64_t size() const { return static_cast<std::int64_t>(pts_.size()); }
    bool empty() const { return pts_.empty(); }
    const std::vector<PhasePoint>& points() const { return pts_; }

    bool contains(const PhasePoint& p) const;
    /// Smallest point in lexicographic (j, k) order. Requires a nonempty set.
    const PhasePoint& least() const;

    SupportSet translated(const PhasePoint& mu) const;

    bool operator==(const SupportSet& o) const { return n_ == o.n_ && pts_ == o.pts_; }

private:
    std::int64_t n_;
    std::vector<PhasePoint> pts_;
};

/// All positive divisors of n, strictly increasing.
std::vector<std::int64_t> divisors(std::int64_t n);

/// The subgroup of Z_n generated by a divisor a: {0, a, 2a, ...}, n/a elements.
std::vector<std::int64_t> cyclic_subgroup(std::int64_t n, std::int64_t a);

/// The n points of the order-n subgroup described by spec.
SupportSet subgroup_points(const SubgroupSpec& spec);

/// One spec per order-n subgroup of Z_n x Z_n; count equals the sum of the
/// divisors of n. Ordered by (b, p).
std::vector<SubgroupSpec> enumerate_order_n_subgroups(std::int64_t n);

/// If s is a coset of an order-n subgroup, returns that subgroup's spec and
/// the lexicographically least point of s as the canonical offset. Returns
/// nullopt otherwise (in particular whenever |s| != n).
std::optional<std::pair<SubgroupSpec, PhasePoint>> as_subgroup_coset(const SupportSet& s);

}  // namespace tfa
