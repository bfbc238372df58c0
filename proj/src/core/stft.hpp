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
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/group.hpp"
#include "core/signal.hpp"

namespace tfa {

/// Dense n x n table of short-time Fourier coefficients, entry (j, k) being
/// the coefficient at time shift j and frequency shift k.
struct STFTTable {
    std::int64_t n;
    std::vector<cplx> e;  // row-major in (j, k)

    explicit STFTTable(std::int64_t modulus);

    cplx at(std::int64_t j, std::int64_t k) const { return e[imod(j, n) * n + imod(k, n)]; }
    cplx& at(std::int64_t j, std::int64_t k) { return e[imod(j, n) * n + imod(k, n)]; }

    double max_abs() const;
    double frobenius_sq() const;
};

/// Short-time Fourier transform of f with window g:
/// table(j, k) = n^{-1/2} sum_l exp(-2*pi*i*k*l/n) f(l) conj(g(l - j)).
/// Reference implementation by direct summation.
STFTTable stft(const Signal& f, const Signal& g);

/// Same transform computed row-by-row as the Fourier transform of
/// f * conj(translate(g, j)). Must agree with stft to 1e-12.
STFTTable stft_fast(const Signal& f, const Signal& g);

/// Entries with |value| > tau * max |value|; empty for the zero table.
SupportSet support_of(const STFTTable& t, double tau = kDefaultTau);

/// | ||table||_F^2 - ||f||^2 ||g||^2 | relative to ||f||^2 ||g||^2
/// (zero when both signals vanish).
double parseval_residual(const STFTTable& t, const Signal& f, const Signal& g);

/// CSV with header "j,k,re,im", rows in lexicographic (j, k) order, floats
/// with 17 significant digits.
std::string table_to_csv(const STFTTable& t);

}  // namespace tfa
