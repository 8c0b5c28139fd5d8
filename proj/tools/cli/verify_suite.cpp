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

#include "cli/verify_suite.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "cli/run_config.hpp"
#include "weylchan/channel.hpp"
#include "weylchan/master_equation.hpp"
#include "weylchan/measures.hpp"
#include "weylchan/mub.hpp"
#include "weylchan/representations.hpp"
#include "weylchan/weyl.hpp"

namespace weylchan::cli {

namespace {

using Rng = std::mt19937_64;

ComplexMatrix random_matrix(Rng& rng, int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

DensityMatrix random_density(Rng& rng, int n) {
    const ComplexMatrix g = random_matrix(rng, n);
    ComplexMatrix w = g * g.adjoint();
    w = w * Complex(1.0 / w.trace().real(), 0.0);
    w = (w + w.adjoint()) * Complex(0.5, 0.0);
    return DensityMatrix(w);
}

SuiteResult suite_weyl_algebra() {
    double worst = 0.0;
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                const ComplexMatrix u = weyl(WeylIndex(d, k, l));
                worst = std::max(worst, max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(d)));
                const ComplexMatrix adj = omega_power(d, static_cast<long long>(k) * l) *
                                          weyl(WeylIndex(d, (d - k) % d, (d - l) % d));
                worst = std::max(worst, max_abs_diff(u.adjoint(), adj));
                for (int r = 0; r < d; ++r)
                    for (int s = 0; s < d; ++s) {
                        const ComplexMatrix lhs = u * weyl(WeylIndex(d, r, s));
                        const ComplexMatrix rhs = omega_power(d, static_cast<long long>(l) * r) *
                                                  weyl(WeylIndex(d, (k + r) % d, (l + s) % d));
                        worst = std::max(worst, max_abs_diff(lhs, rhs));
                    }
            }
        for (int a = 0; a < d * d; ++a)
            for (int b = 0; b < d * d; ++b) {
                const Complex ip =
                    (weyl(WeylIndex::from_flat(d, a)).adjoint() * weyl(WeylIndex::from_flat(d, b))).trace();
                const double expected = (a == b) ? static_cast<double>(d) : 0.0;
                worst = std::max(worst, std::abs(ip - Complex(expected, 0.0)));
            }
    }
    return SuiteResult{"weyl-algebra", worst <= 1e-12, worst, "composition, adjoint, orthogonality, d=2..5"};
}

SuiteResult suite_representations(Rng& rng) {
    double worst = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int d = 2; d <= 5; ++d) {
        const ComplexMatrix m = random_matrix(rng, d * d);
        worst = std::max(worst, max_abs_diff(reshuffle(reshuffle(m)), m));

        const ChannelParams params(d, unit(rng));
        const double p = unit(rng);
        const KrausSet ks = kraus_diagonal_weyl(params, p);
        const ComplexMatrix superop = superop_from_kraus(ks);
        worst = std::max(worst, max_abs_diff(reshuffle(superop), choi_from_kraus(ks).matrix));

        const ComplexMatrix x = random_matrix(rng, d);
        worst = std::max(worst, max_abs_diff(superop * vectorize(x), vectorize(apply_kraus(ks, x))));

        // Defining construction of the Choi matrix from matrix units.
        ComplexMatrix by_definition(d * d, d * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                ComplexMatrix unit_ij(d, d);
                unit_ij(i, j) = 1.0;
                ComplexMatrix marker(d, d);
                marker(i, j) = 1.0;
                by_definition += kron(apply_kraus(ks, unit_ij), marker);
            }
        worst = std::max(worst, max_abs_diff(by_definition, choi_from_kraus(ks).matrix));
    }
    return SuiteResult{"representation-roundtrip", worst <= 1e-12, worst,
                       "reshuffle involution, Choi/superoperator bridge, vectorized action"};
}

SuiteResult suite_spectra(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> dim(2, 8);
    double worst = 0.0;
    int done = 0;
    while (done < 200) {
        const int d = dim(rng);
        const ChannelParams params(d, 0.05 + 0.95 * unit(rng));
        const double p1 = unit(rng);
        const double p2 = p1 + (1.0 - p1) * unit(rng);
        if (std::abs(coherence_factor(params, p1)) <= 1e-3) continue;
        const IntermediateSpec spec(params, p1, p2);
        const ChoiMatrix numeric = intermediate_choi_numeric(spec);
        worst = std::max(worst, std::abs(numeric.matrix.trace().real() - d));
        const Spectrum oracle = hermitian_eigs(numeric.matrix);
        const Spectrum analytic = intermediate_eigs(spec);
        for (std::size_t i = 0; i < analytic.eigenvalues.size(); ++i)
            worst = std::max(worst, std::abs(analytic.eigenvalues[i] - oracle.eigenvalues[i]));
        ++done;
    }
    return SuiteResult{"spectrum-analytic-vs-oracle", worst <= 1e-9, worst,
                       "200 random bridging maps, d=2..8"};
}

SuiteResult suite_intermediate_routes(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> dim(2, 6);
    double worst = 0.0;
    int done = 0;
    while (done < 50) {
        const int d = dim(rng);
        const ChannelParams params(d, unit(rng));
        const double p1 = unit(rng);
        const double p2 = p1 + (1.0 - p1) * unit(rng);
        if (std::abs(coherence_factor(params, p1)) <= 1e-3) continue;
        const IntermediateSpec spec(params, p1, p2);
        worst = std::max(worst,
                         max_abs_diff(intermediate_choi(spec).matrix, intermediate_choi_numeric(spec).matrix));
        const ComplexMatrix e_base = superop_from_kraus(kraus_diagonal_weyl(params, p1));
        const ComplexMatrix e_star = superop_from_kraus(kraus_diagonal_weyl(params, p2));
        worst = std::max(worst, max_abs_diff(superop_divide(e_star, e_base) * e_base, e_star));
        ++done;
    }
    return SuiteResult{"intermediate-two-routes", worst <= 1e-10, worst,
                       "block formula vs superoperator inversion; divisibility"};
}

SuiteResult suite_criteria_consistency() {
    int mismatches = 0;
    const double step = 0.02;
    for (int d : {2, 3, 4}) {
        for (double alpha : {0.2, 0.5, 0.8}) {
            const ChannelParams params(d, alpha);
            const double root = singular_point(params);
            std::vector<double> grid;
            for (double p = 0.0; p <= 1.0 + 1e-12; p += step) grid.push_back(std::min(p, 1.0));

            // Instantaneous cells: non-CP exactly where the rate is negative,
            // skipping the cell that straddles the root.
            for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
                const double a = grid[k];
                const double b = grid[k + 1];
                if (a < root && root < b) continue;
                if (std::abs(coherence_factor(params, a)) <= 1e-9) continue;
                const bool cell_cp = is_cp(IntermediateSpec(params, a, b)).cp;
                const bool rate_ok = decoherence_rate(params, 0.5 * (a + b)) >= -1e-12;
                if (cell_cp != rate_ok) ++mismatches;
            }

            // Global statement: divisible on the grid iff no negative rate.
            bool all_cells_cp = true;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (std::abs(coherence_factor(params, grid[i])) <= 1e-9) continue;
                for (std::size_t j = i + 1; j < grid.size(); ++j) {
                    if (!is_cp(IntermediateSpec(params, grid[i], grid[j])).cp) {
                        all_cells_cp = false;
                        break;
                    }
                }
                if (!all_cells_cp) break;
            }
            std::vector<double> rate_grid;
            for (double p = 0.0; p <= 1.0 + 1e-12; p += 1e-3) {
                if (std::abs(p - root) < 1e-6) continue;
                rate_grid.push_back(std::min(p, 1.0));
            }
            const bool rate_markovian = is_markovian_rate(params, rate_grid).markovian;
            if (all_cells_cp != rate_markovian) ++mismatches;
        }
    }
    return SuiteResult{"criteria-consistency", mismatches == 0, static_cast<double>(mismatches),
                       "CP cells vs rate sign, d=2..4, alpha in {0.2,0.5,0.8}"};
}

SuiteResult suite_circulant() {
    double worst = 0.0;
    bool ok = true;
    for (int d = 2; d <= 12; ++d) {
        if (!lemma1_check(d)) ok = false;
        for (double kap : {0.0, 0.4, 1.0}) {
            const Spectrum s = circulant_difference_spectrum(d, kap);
            const double top = (1.0 - kap) * (1.0 - kap);
            worst = std::max(worst, std::abs(s.eigenvalues[0] - top));
            if (d > 2) worst = std::max(worst, std::abs(s.eigenvalues[1] - top));
            for (std::size_t i = 2; i < s.eigenvalues.size(); ++i)
                worst = std::max(worst, std::abs(s.eigenvalues[i]));
        }
    }
    return SuiteResult{"circulant-identities", ok && worst <= 1e-9, worst,
                       "coefficient identity and difference spectra, d=2..12"};
}

SuiteResult suite_mubs() {
    double worst = 0.0;
    for (int d : {2, 3, 5, 7, 11}) {
        const MubCheck check = verify_mub(mub_family(d));
        if (!check.ok) return SuiteResult{"mub-families", false, check.worst_deviation, "construction failed"};
        worst = std::max(worst, check.worst_deviation);
    }
    return SuiteResult{"mub-families", worst <= 1e-10, worst, "orthonormal and pairwise unbiased, d=2,3,5,7,11"};
}

SuiteResult suite_distance_closed_forms() {
    double worst = 0.0;
    for (int d : {2, 3, 5, 7}) {
        const MubFamily fam = mub_family(d);
        const auto pairs = mub_pairs(fam, false);
        for (double alpha : {0.0, 0.5, 1.0}) {
            const ChannelParams params(d, alpha);
            for (const auto& pair : pairs) {
                const DensityMatrix s1 = mub_state(fam, pair.basis, pair.i);
                const DensityMatrix s2 = mub_state(fam, pair.basis, pair.j);
                for (int step = 0; step < 20; ++step) {
                    const double p = step / 19.0;
                    const double closed = blp_trace_distance(params, p, pair);
                    const double oracle =
                        trace_distance(evolve(params, p, s1), evolve(params, p, s2));
                    worst = std::max(worst, std::abs(closed - oracle));
                }
            }
        }
    }
    return SuiteResult{"distance-closed-forms", worst <= 1e-10, worst,
                       "all MUB pairs, d=2,3,5,7, 20 p-points"};
}

SuiteResult suite_ode(Rng& rng) {
    const ChannelParams params(3, 0.5);
    const DensityMatrix rho0 = random_density(rng, 3);

    // Order measurement on a smooth interval.
    const DensityMatrix exact_smooth = evolve(params, 0.6, rho0);
    double err[3];
    const double steps[3] = {4e-3, 2e-3, 1e-3};
    for (int i = 0; i < 3; ++i)
        err[i] = max_abs_diff(integrate_master(params, rho0, 0.0, 0.6, steps[i]).endpoint().matrix(),
                              exact_smooth.matrix());
    const double r1 = err[0] / err[1];
    const double r2 = err[1] / err[2];
    const bool order_ok = r1 > 8.0 && r1 < 32.0 && r2 > 8.0 && r2 < 32.0;

    // Accuracy through the singular point.
    const double through_err = max_abs_diff(
        integrate_master(params, rho0, 0.0, 1.0, 1e-4).endpoint().matrix(), evolve(params, 1.0, rho0).matrix());

    std::ostringstream note;
    note << "step ratios " << format_double(r1) << ", " << format_double(r2)
         << "; through-singularity error " << format_double(through_err);
    return SuiteResult{"ode-convergence", order_ok && through_err <= 1e-8,
                       std::max(std::abs(r1 - 16.0), std::abs(r2 - 16.0)), note.str()};
}

SuiteResult suite_monotonicity(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = -1.0;
    for (int d : {2, 3, 4, 5}) {
        for (int trial = 0; trial < 30; ++trial) {
            const ChannelParams params(d, unit(rng));
            const KrausSet ks = kraus_diagonal_weyl(params, unit(rng));
            const DensityMatrix r1 = random_density(rng, d);
            const DensityMatrix r2 = random_density(rng, d);
            const double before = trace_distance(r1, r2);
            const double after = trace_distance(apply_kraus(ks, r1), apply_kraus(ks, r2));
            worst = std::max(worst, after - before);
        }
    }
    return SuiteResult{"distance-monotonicity", worst <= 1e-10, std::max(0.0, worst),
                       "120 random trials, d=2..5"};
}

SuiteResult suite_measures() {
    double worst = 0.0;
    for (int d : {2, 3, 4, 5}) {
        for (int k = 1; k <= 10; ++k) {
            const double alpha = 0.1 * k;
            const HclaResult h = hcla_measure(ChannelParams(d, std::min(alpha, 1.0)));
            worst = std::max(worst, std::abs(h.closed_form - h.numeric));
        }
    }
    for (int d : {2, 3, 5, 7}) {
        for (int k = 1; k <= 10; ++k) {
            const double alpha = 0.1 * k;
            const BlpResult b = blp_measure(ChannelParams(d, std::min(alpha, 1.0)));
            worst = std::max(worst, std::abs(b.numeric - alpha / d));
        }
    }
    return SuiteResult{"measure-consistency", worst <= 1e-6, worst,
                       "closed forms vs quadrature for both measures"};
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(unsigned long long seed) {
    Rng rng(seed);
    std::vector<SuiteResult> results;
    results.push_back(suite_weyl_algebra());
    results.push_back(suite_representations(rng));
    results.push_back(suite_spectra(rng));
    results.push_back(suite_intermediate_routes(rng));
    results.push_back(suite_criteria_consistency());
    results.push_back(suite_circulant());
    results.push_back(suite_mubs());
    results.push_back(suite_distance_closed_forms());
    results.push_back(suite_ode(rng));
    results.push_back(suite_monotonicity(rng));
    results.push_back(suite_measures());
    return results;
}

VerifyReport cmd_verify(unsigned long long seed) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_verify_suites(seed);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t name_width = 0;
    for (const auto& r : results) name_width = std::max(name_width, r.name.size());

    bool all_passed = true;
    std::ostringstream out;
    out << "verification suites (seed " << seed << ")\n";
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
            << std::string(name_width - r.name.size(), ' ') << "  worst " << format_double(r.worst_deviation)
            << "  (" << r.note << ")\n";
    }
    out << (all_passed ? "all suites passed" : "FAILURES detected") << " in " << format_double(elapsed)
        << " s\n";
    if (elapsed > 60.0) out << "warning: verification exceeded the 60 s budget\n";
    return VerifyReport{out.str(), all_passed};
}

}  // namespace weylchan::cli
