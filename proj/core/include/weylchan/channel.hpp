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

#ifndef WEYLCHAN_CHANNEL_HPP
#define WEYLCHAN_CHANNEL_HPP

#include <vector>

#include "weylchan/complex_matrix.hpp"
#include "weylchan/density.hpp"

namespace weylchan {

/// Parameters of the diagonal-Weyl channel family: dimension d and the
/// perturbation strength alpha in [0, 1]. alpha = 0 is the unperturbed
/// (Markovian) channel.
struct ChannelParams {
    int d;
    double alpha;

    ChannelParams(int d_, double alpha_);
};

/// Ordered Kraus operators together with the computed completeness status
/// (sum K^dagger K = identity within 1e-10 entrywise).
struct KrausSet {
    int d = 0;
    std::vector<ComplexMatrix> operators;
    bool complete = false;
};

KrausSet make_kraus_set(int d, std::vector<ComplexMatrix> operators);

/// Time-dependent mixing parameter kappa(p) = p [1 + alpha (1 - (d-1)p/d)].
double kappa(const ChannelParams& params, double p);

/// Off-diagonal scaling factor G(p) = 1 - kappa(p). Defined for all real p so
/// the roots can be analyzed outside [0, 1].
double coherence_factor(const ChannelParams& params, double p);
double coherence_factor_derivative(const ChannelParams& params, double p);

/// The two real roots of the coherence factor, 0 < lower <= 1 < upper.
struct CoherenceRoots {
    double lower;
    double upper;
};

/// Throws std::domain_error for alpha = 0 (the factor is linear; callers that
/// want the limiting behavior should use singular_point instead).
CoherenceRoots coherence_roots(const ChannelParams& params);

/// The point in (0, 1] where the channel becomes momentarily non-invertible:
/// the lower root for alpha > 0, and its alpha -> 0+ limit 1.0 at alpha = 0.
double singular_point(const ChannelParams& params);

/// The d-operator Kraus set: K_0 proportional to the identity and d-1
/// operators proportional to the diagonal Weyl unitaries.
KrausSet kraus_diagonal_weyl(const ChannelParams& params, double p);

/// Same d-operator family with explicit perturbations lambda0 on the identity
/// weight and lambda_i (size d-1) on the diagonal-Weyl weights. Completeness
/// is computed, not assumed.
KrausSet kraus_diagonal_weyl_perturbed(int d, double p, double lambda0,
                                       const std::vector<double>& lambda_i);

/// The full d^2-operator family with one perturbation value per Weyl index.
/// Entries with 1 + lambda = 0 yield vanishing operators; the set is returned
/// with its completeness flag rather than rejected when incomplete.
KrausSet kraus_weyl_full(const ChannelParams& params, double p, const std::vector<double>& lambdas);

ComplexMatrix apply_kraus(const KrausSet& ks, const ComplexMatrix& x);
DensityMatrix apply_kraus(const KrausSet& ks, const DensityMatrix& rho);

/// Closed-form channel action: diagonal entries unchanged, off-diagonal
/// entries scaled by the coherence factor G(p).
DensityMatrix evolve(const ChannelParams& params, double p, const DensityMatrix& rho0);

}  // namespace weylchan

#endif  // WEYLCHAN_CHANNEL_HPP
