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

#ifndef WEYLCHAN_REPRESENTATIONS_HPP
#define WEYLCHAN_REPRESENTATIONS_HPP

#include "weylchan/channel.hpp"
#include "weylchan/complex_matrix.hpp"
#include "weylchan/density.hpp"
#include "weylchan/spectral.hpp"

namespace weylchan {

/// d^2 x d^2 Choi matrix of a trace-preserving map on dimension d: Hermitian
/// within 1e-10 and of trace d within 1e-9 (both checked on construction).
struct ChoiMatrix {
    int d;
    ComplexMatrix matrix;

    ChoiMatrix(int d_, ComplexMatrix m);
};

/// A propagation interval [p_base, p_star] of the diagonal-Weyl channel,
/// defining the map that bridges the two endpoint channels. The base point
/// must keep the channel invertible: |G(p_base)| above 1e-12, with values
/// below 1e-6 flagged as ill-conditioned.
struct IntermediateSpec {
    ChannelParams params;
    double p_base;
    double p_star;

    IntermediateSpec(const ChannelParams& params_, double p_base_, double p_star_);

    /// G(p_star) / G(p_base), the factor applied to off-diagonal entries.
    double ratio() const;
    bool singular_base() const;
    bool ill_conditioned() const;
};

/// Choi matrix as the vectorized-Kraus outer-product sum. Requires a complete
/// set.
ChoiMatrix choi_from_kraus(const KrausSet& ks);

/// Superoperator sum of K otimes conj(K); acts on vectorized matrices.
ComplexMatrix superop_from_kraus(const KrausSet& ks);

/// numer * denom^{-1} with an entrywise-reciprocal fast path when both
/// superoperators are diagonal, and a dense inverse otherwise.
ComplexMatrix superop_divide(const ComplexMatrix& numer, const ComplexMatrix& denom);

/// Closed-form Choi matrix of the bridging map: unit entries on the
/// (i*d+i, i*d+i) diagonal and the ratio G(p_star)/G(p_base) on the remaining
/// (i*d+i, j*d+j) positions.
ChoiMatrix intermediate_choi(const IntermediateSpec& spec);

/// Same matrix by the independent route: divide the endpoint superoperators,
/// then reshuffle.
ChoiMatrix intermediate_choi_numeric(const IntermediateSpec& spec);

/// Analytic spectrum of the bridging map's Choi matrix: 1 + (d-1)R once,
/// 1 - R with multiplicity d-1, and d(d-1) zeros, sorted descending.
Spectrum intermediate_eigs(const IntermediateSpec& spec);

struct CpTest {
    bool cp;
    double min_eig;
};

/// Complete positivity of the bridging map via the analytic spectrum. An
/// eigenvalue counts as negative only below -tol.
CpTest is_cp(const IntermediateSpec& spec, double tol = 1e-10);

/// Closed-form action of the bridging map: diagonal preserved, off-diagonal
/// entries scaled by ratio(). The matrix overload is the bare linear action;
/// the density-matrix overload additionally validates the output, which a
/// non-CP map applied outside the channel's image can fail.
ComplexMatrix apply_intermediate(const IntermediateSpec& spec, const ComplexMatrix& m);
DensityMatrix apply_intermediate(const IntermediateSpec& spec, const DensityMatrix& rho);

/// Finite-difference witness of a not-completely-positive instantaneous map:
/// (|Choi(p, p+eps)|_1 / d - 1) / eps. Nonnegative; zero wherever the channel
/// is divisible.
double rhp_witness(const ChannelParams& params, double p, double eps);

/// The eps -> 0+ limit of the witness: 2 (d-1) max(0, -gamma(p)).
double rhp_witness_limit(const ChannelParams& params, double p);

struct RhpIntegral {
    double value;        // integral of the witness over [0,1] minus the excised window
    double delta;        // half-width of the window excised around the singular point
    double sensitivity;  // value(delta) - value(2*delta); mass between the two windows
    bool divergent;      // true when the witness has a non-integrable singularity
};

/// Integral of the witness limit over [0, 1]. The witness diverges like
/// 1/(p - root) at the singular point, so a window of half-width delta is
/// excised and the delta-sensitivity of the result is reported.
RhpIntegral rhp_integral(const ChannelParams& params, double delta = 1e-4, double abs_tol = 1e-9);

}  // namespace weylchan

#endif  // WEYLCHAN_REPRESENTATIONS_HPP
