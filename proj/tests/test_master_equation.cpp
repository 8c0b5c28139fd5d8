#include <catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"
#include "weylchan/master_equation.hpp"
#include "weylchan/representations.hpp"
#include "weylchan/spectral.hpp"

using namespace weylchan;

TEST_CASE("master equation integration", "[dynamics]") {
    auto rng = testing::make_rng(41);
    SECTION("diagonal initial states stay put through the singular point") {
        const ChannelParams params(3, 0.5);
        const DensityMatrix rho0(ComplexMatrix::diagonal({0.6, 0.1, 0.3}));
        const Trajectory traj = integrate_master(params, rho0, 0.0, 1.0, 1e-3);
        for (const auto& sample : traj.samples)
            REQUIRE(max_abs_diff(sample.state.matrix(), rho0.matrix()) < 1e-12);
    }
    SECTION("no perturbation scales off-diagonals linearly") {
        const ChannelParams params(3, 0.0);
        const DensityMatrix rho0 = testing::random_density(rng, 3);
        const Trajectory traj = integrate_master(params, rho0, 0.0, 0.5, 1e-4);
        const auto& end = traj.endpoint();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Complex expected = (i == j) ? rho0(i, j) : rho0(i, j) * 0.5;
                REQUIRE(std::abs(end(i, j) - expected) < 1e-10);
            }
    }
    SECTION("endpoint matches the closed form through the singular point") {
        const ChannelParams params(3, 0.5);
        const DensityMatrix rho0 = testing::random_density(rng, 3);
        const Trajectory traj = integrate_master(params, rho0, 0.0, 1.0, 1e-4);
        const DensityMatrix expected = evolve(params, 1.0, rho0);
        REQUIRE(max_abs_diff(traj.endpoint().matrix(), expected.matrix()) < 1e-8);
    }
    SECTION("endpoint matches the bridging map on a sub-interval") {
        const ChannelParams params(4, 0.7);
        const DensityMatrix rho0 = testing::random_density(rng, 4);
        const double p1 = 0.1;
        const double p2 = 0.5;
        const DensityMatrix start = evolve(params, p1, rho0);
        const Trajectory traj = integrate_master(params, start, p1, p2, 1e-4);
        const DensityMatrix expected = apply_intermediate(IntermediateSpec(params, p1, p2), start);
        REQUIRE(max_abs_diff(traj.endpoint().matrix(), expected.matrix()) < 1e-8);
    }
    SECTION("fourth-order step convergence on a smooth interval") {
        const ChannelParams params(3, 0.5);
        const DensityMatrix rho0 = testing::random_density(rng, 3);
        const DensityMatrix exact = evolve(params, 0.6, rho0);
        double errors[3];
        const double steps[3] = {4e-3, 2e-3, 1e-3};
        for (int i = 0; i < 3; ++i) {
            const Trajectory traj = integrate_master(params, rho0, 0.0, 0.6, steps[i]);
            errors[i] = max_abs_diff(traj.endpoint().matrix(), exact.matrix());
        }
        REQUIRE(errors[0] / errors[1] == Catch::Approx(16.0).margin(8.0));
        REQUIRE(errors[1] / errors[2] == Catch::Approx(16.0).margin(8.0));
    }
    SECTION("conservation and positivity along the trajectory") {
        const ChannelParams params(3, 0.8);
        const DensityMatrix rho0 = testing::random_density(rng, 3);
        const Trajectory traj = integrate_master(params, rho0, 0.0, 1.0, 1e-3);
        double prev = -1.0;
        for (const auto& sample : traj.samples) {
            REQUIRE(sample.p > prev);
            prev = sample.p;
            REQUIRE(std::abs(sample.state.matrix().trace() - Complex(1.0, 0.0)) < 1e-9);
            REQUIRE(sample.state.matrix().hermiticity_error() < 1e-9);
            REQUIRE(hermitian_eigs(sample.state.matrix(), 1e-9).min() >= -1e-8);
        }
        REQUIRE(traj.samples.front().p == 0.0);
        REQUIRE(traj.samples.back().p == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("argument validation") {
        const ChannelParams params(3, 0.5);
        const DensityMatrix rho0 = DensityMatrix::maximally_mixed(3);
        REQUIRE_THROWS_AS(integrate_master(params, rho0, 0.0, 1.0, 0.0), std::invalid_argument);
        REQUIRE_THROWS_AS(integrate_master(params, rho0, -0.1, 0.5, 1e-3), std::invalid_argument);
        REQUIRE_THROWS_AS(integrate_master(params, rho0, 0.5, 0.2, 1e-3), std::invalid_argument);
        REQUIRE_THROWS_AS(integrate_master(params, rho0, 0.0, 1.5, 1e-3), std::invalid_argument);
    }
}

TEST_CASE("singularity report", "[dynamics]") {
    auto rng = testing::make_rng(42);
    SECTION("generic state dephases at the root and is a fixed point there") {
        const ChannelParams params(3, 0.5);
        const DensityMatrix rho0 = testing::random_density(rng, 3);
        const SingularityReport report = singularity_report(params, rho0);
        REQUIRE(report.singular_point == Catch::Approx(0.8139).margin(5e-4));
        REQUIRE(report.max_offdiag < 1e-9);
        REQUIRE(report.fixed_point_residual < 1e-10);
        REQUIRE(report.revival_factor < 0.0);
    }
    SECTION("diagonal initial state gives a strictly zero residual") {
        const ChannelParams params(3, 0.8);
        const DensityMatrix rho0(ComplexMatrix::diagonal({0.5, 0.25, 0.25}));
        const SingularityReport report = singularity_report(params, rho0);
        REQUIRE(report.max_offdiag == 0.0);
        REQUIRE(report.fixed_point_residual == 0.0);
    }
    SECTION("states sharing a diagonal become indistinguishable at the root") {
        const ChannelParams params(3, 0.6);
        const DensityMatrix a = testing::random_density(rng, 3);
        // The entrywise conjugate is a different state with the same diagonal.
        const DensityMatrix b(a.matrix().conjugate());
        REQUIRE(max_abs_diff(a.matrix(), b.matrix()) > 1e-3);
        const SingularityReport ra = singularity_report(params, a);
        const SingularityReport rb = singularity_report(params, b);
        REQUIRE(max_abs_diff(ra.state.matrix(), rb.state.matrix()) < 1e-9);
    }
    SECTION("no interior singular point without perturbation") {
        REQUIRE_THROWS_AS(singularity_report(ChannelParams(3, 0.0), DensityMatrix::maximally_mixed(3)),
                          std::domain_error);
    }
}
