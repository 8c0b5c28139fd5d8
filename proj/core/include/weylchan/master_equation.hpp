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

#ifndef WEYLCHAN_MASTER_EQUATION_HPP
#define WEYLCHAN_MASTER_EQUATION_HPP

#include <vector>

#include "weylchan/channel.hpp"
#include "weylchan/density.hpp"

namespace weylchan {

struct TrajectorySample {
    double p;
    DensityMatrix state;
};

struct Trajectory {
    ChannelParams params;
    double start;
    std::vector<TrajectorySample> samples;  // p strictly increasing

    const DensityMatrix& endpoint() const { return samples.back().state; }
};

/// Fixed-step RK4 integration of
///   d rho / dp = sum_i gamma(p) (U_i rho U_i^dagger - rho)
/// over the diagonal Weyl unitaries. The rate diverges at the root of the
/// coherence factor; a window of half-width max(1e-4, 32*step) around it is
/// bridged with the exact off-diagonal scaling G(q)/G(p), which is regular
/// there. Every recorded sample satisfies the density-matrix invariants.
Trajectory integrate_master(const ChannelParams& params, const DensityMatrix& rho0, double p_start,
                            double p_end, double step);

struct SingularityReport {
    double singular_point;
    DensityMatrix state;           // the evolved state at the singular point
    double max_offdiag;            // of that state; diagonal within 1e-9
    double fixed_point_residual;   // bridging map leaves the state invariant
    double revival_factor;         // off-diagonal factor just across the root; sign flips
};

/// Evidence that the dynamics stays regular through the non-invertibility
/// point. Throws when there is no interior singular point (alpha = 0).
SingularityReport singularity_report(const ChannelParams& params, const DensityMatrix& rho0);

}  // namespace weylchan

#endif  // WEYLCHAN_MASTER_EQUATION_HPP
