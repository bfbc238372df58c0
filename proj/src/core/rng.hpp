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

#include "core/signal.hpp"

namespace tfa {

/// SplitMix64. Chosen over std::mt19937_64 so that streams are identical
/// across standard library implementations; determinism of every seeded
/// run is part of the tool's contract.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, 1).
    double next_double();

    /// Standard complex Gaussian (Box-Muller; unit variance per entry).
    cplx next_gaussian();

  private:
    std::uint64_t state_;
};

/// One SplitMix64 scrambling step; used to fold trial indices into seeds.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic per-trial seed derived from a base seed and a list of
/// labels (modulus, trial index, attempt, ...).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> labels);

/// Complex Gaussian vector on Z_n normalized to ||f|| = 1.
Signal random_unit_signal(std::int64_t n, SplitMix64& rng);

}  // namespace tfa
