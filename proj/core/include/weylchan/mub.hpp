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

#ifndef WEYLCHAN_MUB_HPP
#define WEYLCHAN_MUB_HPP

#include <vector>

#include "weylchan/density.hpp"

namespace weylchan {

/// A list of orthonormal bases of C^d that are pairwise mutually unbiased.
/// bases[0] is always the computational basis. `complete_family` marks the
/// d+1 maximal sets (primes here); composite dimensions carry only the
/// computational plus Fourier pair and are flagged partial.
struct MubFamily {
    int d;
    bool complete_family;
    std::vector<std::vector<StateVector>> bases;

    int count() const { return static_cast<int>(bases.size()); }
};

/// Construct the family: three standard qubit bases for d = 2, the
/// quadratic-phase construction (d + 1 bases) for odd primes, and the
/// computational + Fourier partial family otherwise.
MubFamily mub_family(int d);

struct MubCheck {
    bool ok;
    double worst_deviation;
};

/// Orthonormality within 1e-12 and cross-basis |overlap|^2 = 1/d within
/// 1e-10; reports the largest deviation seen.
MubCheck verify_mub(const MubFamily& fam);

/// An unordered pair of vectors (i < j) drawn from one basis of a family.
struct MubPair {
    int basis;
    int i;
    int j;
};

/// All same-basis pairs in basis-major, index-lexicographic order;
/// optionally dropping the computational basis.
std::vector<MubPair> mub_pairs(const MubFamily& fam, bool exclude_computational);

DensityMatrix mub_state(const MubFamily& fam, int basis, int index);

}  // namespace weylchan

#endif  // WEYLCHAN_MUB_HPP
