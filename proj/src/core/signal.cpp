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

#include "core/signal.hpp"

#include <algorithm>
#include <cmath>

namespace tfa {

namespace {

void require_same(std::int64_t n, std::int64_t m) {
    if (n != m) throw DomainMismatch("signals live on different cyclic groups");
}

void require_divisor(std::int64_t n, std::int64_t a) {
    if (a < 1 || n % a != 0) throw InvalidArgument("parameter a must divide the modulus");
}

// Euclidean mass of f off the subgroup generated by a, relative to ||f||.
double off_subgroup_mass(const Signal& f, std::int64_t a) {
    double off = 0.0;
    for (std::int64_t l = 0; l < f.n; ++l) {
        if (l % a != 0) off += std::norm(f.v[l]);
    }
    const double total = norm_sq(f);
    return total == 0.0 ? 0.0 : std::sqrt(off / total);
}

void require_supported_in_subgroup(const Signal& f, std::int64_t a) {
    if (off_subgroup_mass(f, a) > 1e-12) {
        throw InvalidArgument("signal has mass off the subgroup generated by a");
    }
}

// exp(i*pi * p*m^2*(1+b) / b). The integer exponent is reduced mod 2b before
// touching floating point; substituting m -> m + b shifts it by a multiple of
// 2b, so the phase is well defined on residues.
cplx quadratic_phase(std::int64_t p, std::int64_t m, std::int64_t b) {
    const std::int64_t q = 2 * b;
    const std::int64_t num = imod(p, q) * imod(m * m, q) % q * ((1 + b) % q) % q;
    return unit_phase(num, q);
}

}  // namespace

Signal::Signal(std::int64_t modulus) : n(modulus), v() {
    if (modulus < 1) throw InvalidArgument("signal modulus must be a positive integer");
    v.assign(static_cast<std::size_t>(modulus), cplx{0.0, 0.0});
}

Signal::Signal(std::int64_t modulus, std::vector<cplx> values) : n(modulus), v(std::move(values)) {
    if (modulus < 1) throw InvalidArgument("signal modulus must be a positive integer");
    if (static_cast<std::int64_t>(v.size()) != modulus) {
        throw InvalidArgument("signal value count must equal the modulus");
    }
}

Signal Signal::delta(std::int64_t n, std::int64_t pos) {
    Signal f(n);
    f.v[imod(pos, n)] = 1.0;
    return f;
}

Signal Signal::ones(std::int64_t n) {
    Signal f(n);
    std::fill(f.v.begin(), f.v.end(), cplx{1.0, 0.0});
    return f;
}

Signal Signal::indicator(std::int64_t n, const std::vector<std::int64_t>& support) {
    Signal f(n);
    for (std::int64_t l : support) f.v[imod(l, n)] = 1.0;
    return f;
}

double norm_sq(const Signal& f) {
    double s = 0.0;
    for (const cplx& z : f.v) s += std::norm(z);
    return s;
}

double norm(const Signal& f) { return std::sqrt(norm_sq(f)); }

cplx inner(const Signal& f, const Signal& g) {
    require_same(f.n, g.n);
    cplx s{0.0, 0.0};
    for (std::int64_t l = 0; l < f.n; ++l) s += f.v[l] * std::conj(g.v[l]);
    return s;
}

Signal scaled(const Signal& f, cplx c) {
    Signal out = f;
    for (cplx& z : out.v) z *= c;
    return out;
}

Signal operator+(const Signal& f, const Signal& g) {
    require_same(f.n, g.n);
    Signal out = f;
    for (std::int64_t l = 0; l < f.n; ++l) out.v[l] += g.v[l];
    return out;
}

Signal operator-(const Signal& f, const Signal& g) {
    require_same(f.n, g.n);
    Signal out = f;
    for (std::int64_t l = 0; l < f.n; ++l) out.v[l] -= g.v[l];
    return out;
}

std::vector<std::int64_t> signal_support(const Signal& f, double tau) {
    if (tau <= 0.0) throw InvalidArgument("support threshold must be positive");
    double mx = 0.0;
    for (const cplx& z : f.v) mx = std::max(mx, std::abs(z));
    std::vector<std::int64_t> out;
    if (mx == 0.0) return out;
    for (std::int64_t l = 0; l < f.n; ++l) {
        if (std::abs(f.v[l]) > tau * mx) out.push_back(l);
    }
    return out;
}

Signal translate(const Signal& f, std::int64_t j) {
    Signal out(f.n);
    for (std::int64_t l = 0; l < f.n; ++l) out.v[l] = f.v[imod(l - j, f.n)];
    return out;
}

Signal modulate(const Signal& f, std::int64_t k) {
    Signal out(f.n);
    for (std::int64_t l = 0; l < f.n; ++l) out.v[l] = unit_phase(k * l, f.n) * f.v[l];
    return out;
}

Signal tf_shift(const Signal& f, const PhasePoint& lambda) {
    require_same(f.n, lambda.n);
    return modulate(translate(f, lambda.j), lambda.k);
}

Signal dft(const Signal& f) {
    const std::int64_t n = f.n;
    std::vector<cplx> w(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) w[r] = unit_phase(-r, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Signal out(n);
    for (std::int64_t k = 0; k < n; ++k) {
        cplx s{0.0, 0.0};
        for (std::int64_t l = 0; l < n; ++l) s += w[(k * l) % n] * f.v[l];
        out.v[k] = scale * s;
    }
    return out;
}

Signal idft(const Signal& f) {
    const std::int64_t n = f.n;
    std::vector<cplx> w(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) w[r] = unit_phase(r, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Signal out(n);
    for (std::int64_t k = 0; k < n; ++k) {
        cplx s{0.0, 0.0};
        for (std::int64_t l = 0; l < n; ++l) s += w[(k * l) % n] * f.v[l];
        out.v[k] = scale * s;
    }
    return out;
}

Signal chirp(std::int64_t p, std::int64_t a, const Signal& f) {
    require_divisor(f.n, a);
    require_supported_in_subgroup(f, a);
    const std::int64_t b = f.n / a;
    Signal out(f.n);
    for (std::int64_t m = 0; m < b; ++m) {
        out.v[m * a] = quadratic_phase(p, m, b) * f.v[m * a];
    }
    return out;
}

Signal compress_from_subgroup(const Signal& f, std::int64_t a) {
    require_divisor(f.n, a);
    require_supported_in_subgroup(f, a);
    const std::int64_t b = f.n / a;
    Signal out(b);
    for (std::int64_t m = 0; m < b; ++m) out.v[m] = f.v[m * a];
    return out;
}

Signal expand_to_subgroup(const Signal& fb, std::int64_t a) {
    if (a < 1) throw InvalidArgument("parameter a must be a positive integer");
    Signal out(fb.n * a);
    for (std::int64_t m = 0; m < fb.n; ++m) out.v[m * a] = fb.v[m];
    return out;
}

Signal metaplectic_conjugate(std::int64_t p, std::int64_t a, const Signal& fb) {
    if (a < 1) throw InvalidArgument("parameter a must be a positive integer");
    const std::int64_t b = fb.n;
    Signal out(b);
    for (std::int64_t m = 0; m < b; ++m) out.v[m] = quadratic_phase(p, m, b) * fb.v[m];
    return out;
}

}  // namespace tfa
