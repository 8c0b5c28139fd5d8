// Copyright 2026 The weylchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weylchan/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weylchan {

WeylIndex::WeylIndex(int d_, int k_, int l_) : d(d_), k(k_), l(l_) {
    if (d < 2) throw std::invalid_argument("WeylIndex: dimension must be at least 2");
    if (k < 0 || k >= d || l < 0 || l >= d) throw std::invalid_argument("WeylIndex: subscript out of range");
}

WeylIndex WeylIndex::from_flat(int d, int a) {
    if (d < 2) throw std::invalid_argument("WeylIndex: dimension must be at least 2");
    if (a < 0 || a >= d * d) throw std::invalid_argument("WeylIndex: flat index out of range");
    return WeylIndex(d, a / d, a % d);
}

Complex omega_power(int d, long long exponent) {
    long long m = exponent % d;
    if (m < 0) m += d;
    if (m == 0) return Complex(1.0, 0.0);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / d);
}

ComplexMatrix weyl(const WeylIndex& idx) {
    const int d = idx.d;
    ComplexMatrix u(d, d);
    for (int m = 0; m < d; ++m) {
        u(m, (m + idx.l) % d) = omega_power(d, static_cast<long long>(idx.k) * m);
    }
    return u;
}

std::vector<ComplexMatrix> weyl_diagonal_family(int d) {
    if (d < 2) throw std::invalid_argument("weyl_diagonal_family: dimension must be at least 2");
    std::vector<ComplexMatrix> family;
    family.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) family.push_back(weyl(WeylIndex(d, i, 0)));
    return family;
}

}  // namespace weylchan
