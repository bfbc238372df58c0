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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tfa {

using cplx = std::complex<double>;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter is out of range or structurally invalid (e.g. a non-divisor).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Two values live on different groups / have different moduli.
struct DomainMismatch : Error {
    using Error::Error;
};

/// The input pair is not a minimal-support pair (support strictly larger than N).
struct NotExtremal : Error {
    using Error::Error;
};

/// A structural decision (phase rounding, coset match, alignment) fell outside
/// the certification tolerance and cannot be trusted.
struct NumericallyAmbiguous : Error {
    using Error::Error;
};

/// A table handed to an inversion routine is not consistent with any signal.
struct InconsistentTable : Error {
    using Error::Error;
};

/// Malformed JSON / CSV / flag input.
struct ParseError : Error {
    using Error::Error;
};

/// Default relative magnitude threshold separating support from numerical zero.
inline constexpr double kDefaultTau = 1e-8;

/// Largest modulus accepted by table-building operations. The library computes
/// dense N x N tables by direct summation; this bound keeps memory and runtime
/// at desk scale.
inline constexpr std::int64_t kMaxTableModulus = 4096;

/// Positive residue of x modulo m (m > 0).
constexpr std::int64_t imod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

/// exp(2*pi*i * num/den) with the fraction reduced in exact integer
/// arithmetic before any floating-point evaluation, so that unimodular
/// factors with small rational angles are as accurate as the libm sin/cos.
cplx unit_phase(std::int64_t num, std::int64_t den);

/// Shortest text form of x carrying 17 significant digits ("%.17g"); this is
/// the pinned float format for every JSON and CSV surface of the library.
std::string fmt_double(double x);

}  // namespace tfa
