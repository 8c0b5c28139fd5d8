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

#ifndef WEYLCHAN_DENSITY_HPP
#define WEYLCHAN_DENSITY_HPP

#include <vector>

#include "weylchan/complex_matrix.hpp"

namespace weylchan {

using StateVector = std::vector<Complex>;

/// Validated density matrix: Hermitian within 1e-12 entrywise, unit trace
/// within 1e-12, minimum eigenvalue no lower than -1e-10.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    /// Rank-one projector |psi><psi| from a (not necessarily normalized)
    /// state vector.
    static DensityMatrix pure(const StateVector& psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return dim_; }
    const ComplexMatrix& matrix() const { return mat_; }
    Complex operator()(int i, int j) const { return mat_(i, j); }

private:
    int dim_ = 0;
    ComplexMatrix mat_;
};

/// Half the trace norm of r1 - r2; lies in [0, 1].
double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2);

}  // namespace weylchan

#endif  // WEYLCHAN_DENSITY_HPP
