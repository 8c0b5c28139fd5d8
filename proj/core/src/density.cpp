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

#include "weylchan/density.hpp"

#include <cmath>
#include <stdexcept>

#include "weylchan/spectral.hpp"

namespace weylchan {

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : dim_(m.rows()), mat_(m) {
    if (!m.is_square()) throw std::invalid_argument("DensityMatrix: matrix not square");
    if (m.hermiticity_error() > 1e-12) throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    if (hermitian_eigs(m, 1e-12).min() < -1e-10)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    const int d = static_cast<int>(psi.size());
    if (d < 1) throw std::invalid_argument("DensityMatrix::pure: empty state");
    double n2 = 0.0;
    for (const auto& c : psi) n2 += std::norm(c);
    if (n2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero state");
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m(i, j) = psi[static_cast<std::size_t>(i)] * std::conj(psi[static_cast<std::size_t>(j)]) / n2;
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim) * Complex(1.0 / dim, 0.0);
    return DensityMatrix(m);
}

double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
    return 0.5 * trace_norm(r1.matrix() - r2.matrix());
}

}  // namespace weylchan
