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
#include <vector>

#include "core/common.hpp"
#include "core/group.hpp"

namespace tfa {

/// A complex-valued function on Z_n.
struct Signal {
    std::int64_t n;
    std::vector<cplx> v;

    explicit Signal(std::int64_t modulus);
    Signal(std::int64_t modulus, std::vector<cplx> values);

    static Signal zeros(std::int64_t n) { return Signal(n); }
    static Signal delta(std::int64_t n, std::int64_t pos);
    static Signal ones(std::int64_t n);
    /// Indicator of the listed residues (reduced mod n).
    static Signal indicator(std::int64_t n, const std::vector<std::int64_t>& support);

    cplx at(std::int64_t l) const { return v[imod(l, n)]; }
};

double norm_sq(const Signal& f);
double norm(const Signal& f);
/// Sum of f * conj(g); linear in the first argument.
cplx inner(const Signal& f, const Signal& g);
Signal scaled(const Signal& f, cplx c);
Signal operator+(const Signal& f, const Signal& g);
Signal operator-(const Signal& f, const Signal& g);

/// Indices l with |f(l)| > tau * max |f|; empty for the zero signal.
std::vector<std::int64_t> signal_support(const Signal& f, double tau = kDefaultTau);

/// Cyclic right shift: output(l) = f(l - j).
Signal translate(const Signal& f, std::int64_t j);

/// Pointwise multiplication by the character l -> exp(2*pi*i*k*l/n).
Signal modulate(const Signal& f, std::int64_t k);

/// Time-frequency shift: modulate(translate(f, j), k).
Signal tf_shift(const Signal& f, const PhasePoint& lambda);

/// Unitary Fourier transform: out(k) = n^{-1/2} sum_l exp(-2*pi*i*k*l/n) f(l).
Signal dft(const Signal& f);

/// Inverse of dft.
Signal idft(const Signal& f);

/// Quadratic phase multiplier on signals supported in the subgroup generated
/// by the divisor a: for l = m*a the value is multiplied by
/// exp(i*pi*p*m^2*(1+b)/b) where b = n/a. The phase is computed from the
/// integer p*m^2*(1+b) reduced mod 2b, which also makes it independent of the
/// residue representative of m. Signals with mass off the subgroup above
/// 1e-12 * ||f|| are rejected: the multiplier is only n-periodic on that
/// subspace.
Signal chirp(std::int64_t p, std::int64_t a, const Signal& f);

/// Reads a signal supported in the subgroup generated by a down to Z_{n/a}:
/// out(m) = f(m*a). Rejects off-subgroup mass like chirp does.
Signal compress_from_subgroup(const Signal& f, std::int64_t a);

/// Places a signal on Z_b onto the subgroup generated by a inside Z_{a*b}.
Signal expand_to_subgroup(const Signal& fb, std::int64_t a);

/// The compression of chirp to Z_b: pointwise phases exp(i*pi*p*m^2*(1+b)/b)
/// acting on a signal of modulus b. Equals
/// compress_from_subgroup(chirp(p, a, expand_to_subgroup(f, a)), a).
Signal metaplectic_conjugate(std::int64_t p, std::int64_t a, const Signal& fb);

}  // namespace tfa
