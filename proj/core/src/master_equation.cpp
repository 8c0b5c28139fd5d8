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

#include "weylchan/master_equation.hpp"

#include <cmath>
#include <stdexcept>

#include "weylchan/measures.hpp"
#include "weylchan/representations.hpp"
#include "weylchan/weyl.hpp"

namespace weylchan {

namespace {

ComplexMatrix master_rhs(const ChannelParams& params, const std::vector<ComplexMatrix>& diag_weyl,
                         double p, const ComplexMatrix& rho) {
    const double gamma = decoherence_rate(params, p);
    ComplexMatrix out(params.d, params.d);
    for (int i = 1; i < params.d; ++i) {
        const auto& u = diag_weyl[static_cast<std::size_t>(i)];
        out += u * rho * u.adjoint();
        out -= rho;
    }
    return out * Complex(gamma, 0.0);
}

// Exact propagation of the off-diagonal entries from p to q. Valid on any
// interval, including across the singular point, where RK4 is not.
void bridge_offdiag(const ChannelParams& params, ComplexMatrix& rho, double p, double q) {
    const double g_from = coherence_factor(params, p);
    const double g_to = coherence_factor(params, q);
    if (std::abs(g_from) <= 1e-12) {
        if (rho.max_abs_offdiag() > 1e-9)
            throw std::domain_error(
                "integrate_master: coherent state at the non-invertibility point has no regular "
                "continuation");
        for (int i = 0; i < rho.rows(); ++i)
            for (int j = 0; j < rho.cols(); ++j)
                if (i != j) rho(i, j) = Complex(0.0, 0.0);
        return;
    }
    const double factor = g_to / g_from;
    for (int i = 0; i < rho.rows(); ++i)
        for (int j = 0; j < rho.cols(); ++j)
            if (i != j) rho(i, j) *= factor;
}

}  // namespace

Trajectory integrate_master(const ChannelParams& params, const DensityMatrix& rho0, double p_start,
                            double p_end, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("integrate_master: step must be positive");
    if (!(0.0 <= p_start && p_start <= p_end && p_end <= 1.0))
        throw std::invalid_argument("integrate_master: interval must satisfy 0 <= start <= end <= 1");
    if (rho0.dim() != params.d) throw std::invalid_argument("integrate_master: dimension mismatch");

    const auto diag_weyl = weyl_diagonal_family(params.d);
    const double root = params.alpha > 0.0 ? singular_point(params) : 2.0;
    const double window = std::max(1e-4, 32.0 * step);

    Trajectory traj{params, p_start, {}};
    traj.samples.push_back(TrajectorySample{p_start, rho0});

    ComplexMatrix rho = rho0.matrix();
    double p = p_start;
    while (p < p_end - 1e-15) {
        const double h = std::min(step, p_end - p);
        const double next = p + h;
        if (next > root - window && p < root + window) {
            // Jump to the first grid point clear of the window (or the end).
            double q = p;
            while (q < root + window && q < p_end - 1e-15) q += std::min(step, p_end - q);
            bridge_offdiag(params, rho, p, q);
            p = q;
        } else {
            const ComplexMatrix k1 = master_rhs(params, diag_weyl, p, rho);
            const ComplexMatrix k2 = master_rhs(params, diag_weyl, p + 0.5 * h, rho + k1 * Complex(0.5 * h, 0.0));
            const ComplexMatrix k3 = master_rhs(params, diag_weyl, p + 0.5 * h, rho + k2 * Complex(0.5 * h, 0.0));
            const ComplexMatrix k4 = master_rhs(params, diag_weyl, p + h, rho + k3 * Complex(h, 0.0));
            rho += (k1 + k2 * Complex(2.0, 0.0) + k3 * Complex(2.0, 0.0) + k4) * Complex(h / 6.0, 0.0);
            p = next;
        }
        traj.samples.push_back(TrajectorySample{p, DensityMatrix(rho)});
    }
    return traj;
}

SingularityReport singularity_report(const ChannelParams& params, const DensityMatrix& rho0) {
    if (params.alpha <= 0.0) throw std::domain_error("singularity_report: no interior singular point");
    const double root = singular_point(params);
    if (root >= 1.0) throw std::domain_error("singularity_report: no interior singular point");

    DensityMatrix state = evolve(params, root, rho0);
    const double max_offdiag = state.matrix().max_abs_offdiag();

    const double p_before = std::max(0.0, root - 0.1);
    const double p_after = std::min(1.0, root + 0.1);
    const IntermediateSpec bridging(params, p_before, p_after);
    const DensityMatrix mapped = apply_intermediate(bridging, state);
    const double residual = max_abs_diff(mapped.matrix(), state.matrix());
    const double revival =
        coherence_factor(params, p_after) / coherence_factor(params, p_before);

    return SingularityReport{root, state, max_offdiag, residual, revival};
}

}  // namespace weylchan
