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

#include "core/stft.hpp"

#include <cmath>
#include <cstdio>

namespace tfa {

namespace {

void require_table_args(const Signal& f, const Signal& g) {
    if (f.n != g.n) {
        throw DomainMismatch("stft: signal moduli differ (" + std::to_string(f.n) + " vs " +
                             std::to_string(g.n) + ")");
    }
    if (f.n > kMaxTableModulus) {
        throw InvalidArgument("stft: modulus " + std::to_string(f.n) + " exceeds table cap " +
                              std::to_string(kMaxTableModulus));
    }
}

}  // namespace

STFTTable::STFTTable(std::int64_t modulus) : n(modulus), e() {
    if (n <= 0) throw InvalidArgument("STFTTable: modulus must be positive");
    if (n > kMaxTableModulus) {
        throw InvalidArgument("STFTTable: modulus " + std::to_string(n) + " exceeds table cap " +
                              std::to_string(kMaxTableModulus));
    }
    e.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), cplx(0.0, 0.0));
}

double STFTTable::max_abs() const {
    double m = 0.0;
    for (const cplx& z : e) m = std::max(m, std::abs(z));
    return m;
}

double STFTTable::frobenius_sq() const {
    double s = 0.0;
    for (const cplx& z : e) s += std::norm(z);
    return s;
}

STFTTable stft(const Signal& f, const Signal& g) {
    require_table_args(f, g);
    const std::int64_t n = f.n;
    STFTTable t(n);

    std::vector<cplx> w(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) w[static_cast<std::size_t>(r)] = unit_phase(-r, n);

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        for (std::int64_t k = 0; k < n; ++k) {
            cplx acc(0.0, 0.0);
            for (std::int64_t l = 0; l < n; ++l) {
                acc += w[static_cast<std::size_t>((k * l) % n)] * f.at(l) * std::conj(g.at(l - j));
            }
            t.at(j, k) = scale * acc;
        }
    }
    return t;
}

STFTTable stft_fast(const Signal& f, const Signal& g) {
    require_table_args(f, g);
    const std::int64_t n = f.n;
    STFTTable t(n);
    for (std::int64_t j = 0; j < n; ++j) {
        Signal row = Signal::zeros(n);
        for (std::int64_t l = 0; l < n; ++l) row.v[static_cast<std::size_t>(l)] = f.at(l) * std::conj(g.at(l - j));
        const Signal hat = dft(row);
        for (std::int64_t k = 0; k < n; ++k) t.at(j, k) = hat.at(k);
    }
    return t;
}

SupportSet support_of(const STFTTable& t, double tau) {
    if (!(tau > 0.0)) throw InvalidArgument("support_of: tau must be positive");
    const double m = t.max_abs();
    std::vector<PhasePoint> pts;
    if (m > 0.0) {
        const double cut = tau * m;
        for (std::int64_t j = 0; j < t.n; ++j) {
            for (std::int64_t k = 0; k < t.n; ++k) {
                if (std::abs(t.at(j, k)) > cut) pts.emplace_back(t.n, j, k);
            }
        }
    }
    return SupportSet::from_points(t.n, pts);
}

double parseval_residual(const STFTTable& t, const Signal& f, const Signal& g) {
    if (f.n != t.n || g.n != t.n) throw DomainMismatch("parseval_residual: modulus mismatch");
    const double target = norm_sq(f) * norm_sq(g);
    if (target == 0.0) return 0.0;
    return std::abs(t.frobenius_sq() - target) / target;
}

std::string table_to_csv(const STFTTable& t) {
    std::string out = "j,k,re,im\n";
    for (std::int64_t j = 0; j < t.n; ++j) {
        for (std::int64_t k = 0; k < t.n; ++k) {
            const cplx z = t.at(j, k);
            out += std::to_string(j);
            out += ',';
            out += std::to_string(k);
            out += ',';
            out += fmt_double(z.real());
            out += ',';
            out += fmt_double(z.imag());
            out += '\n';
        }
    }
    return out;
}

}  // namespace tfa
