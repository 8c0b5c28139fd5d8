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

#ifndef WEYLCHAN_SPECTRAL_HPP
#define WEYLCHAN_SPECTRAL_HPP

#include <vector>

#include "weylchan/complex_matrix.hpp"

namespace weylchan {

/// Real spectrum of a Hermitian matrix, sorted descending. `tolerance` is the
/// threshold used when classifying eigenvalues as negative.
struct Spectrum {
    std::vector<double> eigenvalues;
    double tolerance = 1e-10;

    double min() const;
    double max() const;
    double sum() const;
    /// True if no eigenvalue lies below -tolerance.
    bool nonnegative() const;
};

struct Eigensystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Full eigensystem of a Hermitian matrix by cyclic Jacobi with complex
/// rotations. Small dense inputs only; this is the project-wide numerical
/// oracle, so it favors robustness over speed. Throws if the input deviates
/// from Hermitian by more than `herm_tol` (absolute, entrywise).
Eigensystem hermitian_eigensystem(const ComplexMatrix& h, double herm_tol = 1e-10);

Spectrum hermitian_eigs(const ComplexMatrix& h, double herm_tol = 1e-10);

/// Sum of singular values. Hermitian inputs take the |eigenvalue| route;
/// general square inputs go through the spectrum of a^dagger a.
double trace_norm(const ComplexMatrix& a);

/// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Gauss-Jordan inverse with partial pivoting. Throws on singular input.
ComplexMatrix inverse(const ComplexMatrix& m);

}  // namespace weylchan

#endif  // WEYLCHAN_SPECTRAL_HPP
