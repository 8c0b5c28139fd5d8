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

#ifndef WEYLCHAN_WEYL_HPP
#define WEYLCHAN_WEYL_HPP

#include <vector>

#include "weylchan/complex_matrix.hpp"

namespace weylchan {

/// Double index (k, l) of a Weyl operator in dimension d, with the flat
/// single index a = d*k + l.
struct WeylIndex {
    int d;
    int k;
    int l;

    WeylIndex(int d_, int k_, int l_);
    static WeylIndex from_flat(int d, int a);
    int flat() const { return d * k + l; }
};

/// d-th root of unity raised to an integer power, with the exponent reduced
/// mod d before any trigonometry so large indices cannot drift.
Complex omega_power(int d, long long exponent);

/// The unitary U_{kl} = sum_m omega^{k m} |m><m+l mod d|.
ComplexMatrix weyl(const WeylIndex& idx);

/// The d diagonal Weyl unitaries diag(1, omega^i, ..., omega^{i(d-1)}) for
/// i = 0..d-1 (flat indices 0, d, 2d, ...).
std::vector<ComplexMatrix> weyl_diagonal_family(int d);

}  // namespace weylchan

#endif  // WEYLCHAN_WEYL_HPP
