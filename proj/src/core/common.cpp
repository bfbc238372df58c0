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

#include "core/common.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace tfa {

cplx unit_phase(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InvalidArgument("unit_phase: denominator must be positive");
    const std::int64_t r = imod(num, den);
    // Quarter turns are returned exactly so that phases landing on +-1 and
    // +-i stay exact through products of root-of-unity factors.
    if (r == 0) return {1.0, 0.0};
    if (4 * r == den) return {0.0, 1.0};
    if (2 * r == den) return {-1.0, 0.0};
    if (4 * r == 3 * den) return {0.0, -1.0};
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(r) / static_cast<double>(den));
    return {std::cos(t), std::sin(t)};
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace tfa
