#include <catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"
#include "weylchan/channel.hpp"
#include "weylchan/representations.hpp"
#include "weylchan/weyl.hpp"

using namespace weylchan;

namespace {

// Independent construction of the Choi matrix: apply the channel to every
// matrix unit |i><j| and assemble E(|i><j|) kron |i><j|.
ComplexMatrix choi_by_definition(const KrausSet& ks) {
    const int d = ks.d;
    ComplexMatrix c(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ComplexMatrix unit(d, d);
            unit(i, j) = 1.0;
            ComplexMatrix marker(d, d);
            marker(i, j) = 1.0;
            c += kron(apply_kraus(ks, unit), marker);
        }
    return c;
}

}  // namespace

TEST_CASE("choi_from_kraus", "[representations]") {
    SECTION("identity channel, d=2") {
        const KrausSet id = make_kraus_set(2, {ComplexMatrix::identity(2)});
        const ChoiMatrix c = choi_from_kraus(id);
        ComplexMatrix expected(4, 4);
        expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
        REQUIRE(max_abs_diff(c.matrix, expected) == 0.0);
        const Spectrum s = hermitian_eigs(c.matrix);
        REQUIRE(s.max() == Catch::Approx(2.0).margin(1e-12));
        REQUIRE(std::abs(s.eigenvalues[1]) < 1e-12);
    }
    SECTION("diagonal-Weyl channel spectrum via the eigensolver oracle") {
        auto rng = testing::make_rng(21);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int trial = 0; trial < 10; ++trial) {
            const int d = 2 + static_cast<int>(unit(rng) * 4);
            const ChannelParams params(d, unit(rng));
            const double p = unit(rng);
            const double g = coherence_factor(params, p);
            const ChoiMatrix c = choi_from_kraus(kraus_diagonal_weyl(params, p));
            const Spectrum s = hermitian_eigs(c.matrix);
            // Expected: 1 + (d-1)G once, 1 - G with multiplicity d-1, zeros.
            std::vector<double> expected{1.0 + (d - 1.0) * g};
            for (int i = 1; i < d; ++i) expected.push_back(1.0 - g);
            for (int i = 0; i < d * (d - 1); ++i) expected.push_back(0.0);
            std::sort(expected.begin(), expected.end(), std::greater<>());
            REQUIRE(s.eigenvalues.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i)
                REQUIRE(s.eigenvalues[i] == Catch::Approx(expected[i]).margin(1e-10));
        }
    }
    SECTION("agrees with the defining double construction") {
        auto rng = testing::make_rng(22);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int d : {2, 3, 4}) {
            const KrausSet ks = kraus_diagonal_weyl(ChannelParams(d, unit(rng)), unit(rng));
            REQUIRE(max_abs_diff(choi_from_kraus(ks).matrix, choi_by_definition(ks)) < 1e-12);
        }
    }
    SECTION("incomplete sets are rejected") {
        const KrausSet half = make_kraus_set(2, {ComplexMatrix::identity(2) * Complex(0.5, 0.0)});
        REQUIRE_FALSE(half.complete);
        REQUIRE_THROWS_AS(choi_from_kraus(half), std::invalid_argument);
    }
}

TEST_CASE("superop_from_kraus", "[representations]") {
    SECTION("identity channel") {
        const KrausSet id = make_kraus_set(3, {ComplexMatrix::identity(3)});
        REQUIRE(max_abs_diff(superop_from_kraus(id), ComplexMatrix::identity(9)) == 0.0);
    }
    SECTION("diagonal-Weyl channel superoperator is diagonal with known blocks") {
        const ChannelParams params(3, 0.5);
        const double p = 0.6;
        const double g = coherence_factor(params, p);
        const ComplexMatrix e = superop_from_kraus(kraus_diagonal_weyl(params, p));
        REQUIRE(e.is_diagonal(1e-14));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                const double expected = (i == k) ? 1.0 : g;
                REQUIRE(std::abs(e(3 * i + k, 3 * i + k) - Complex(expected, 0.0)) < 1e-14);
            }
    }
    SECTION("superoperator action equals vectorized channel action") {
        auto rng = testing::make_rng(23);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int d : {2, 3, 5}) {
            const KrausSet ks = kraus_diagonal_weyl(ChannelParams(d, unit(rng)), unit(rng));
            const ComplexMatrix e = superop_from_kraus(ks);
            const ComplexMatrix x = testing::random_matrix(rng, d);
            REQUIRE(max_abs_diff(e * vectorize(x), vectorize(apply_kraus(ks, x))) < 1e-12);
        }
    }
    SECTION("reshuffle bridges the two representations") {
        auto rng = testing::make_rng(24);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int d : {2, 3, 4, 5}) {
            const KrausSet ks = kraus_diagonal_weyl(ChannelParams(d, unit(rng)), unit(rng));
            REQUIRE(max_abs_diff(reshuffle(superop_from_kraus(ks)), choi_from_kraus(ks).matrix) < 1e-12);
        }
        // A flipped index convention must break the bridge.
        const KrausSet ks = kraus_diagonal_weyl(ChannelParams(3, 0.5), 0.6);
        const ComplexMatrix e = superop_from_kraus(ks);
        ComplexMatrix flipped(9, 9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) flipped(i * 3 + j, k * 3 + l) = e(i * 3 + k, l * 3 + j);
        REQUIRE(max_abs_diff(flipped, choi_from_kraus(ks).matrix) > 0.1);
    }
    SECTION("the d=3 reshuffled superoperator has the reference sparsity") {
        const ChannelParams params(3, 0.5);
        const double p = 0.6;
        const double g = coherence_factor(params, p);
        const ComplexMatrix c = reshuffle(superop_from_kraus(kraus_diagonal_weyl(params, p)));
        for (int r = 0; r < 9; ++r)
            for (int col = 0; col < 9; ++col) {
                const bool diag_block = (r % 4 == 0) && (col % 4 == 0);  // rows/cols 0,4,8
                const double expected = diag_block ? (r == col ? 1.0 : g) : 0.0;
                REQUIRE(std::abs(c(r, col) - Complex(expected, 0.0)) < 1e-14);
            }
    }
}

TEST_CASE("intermediate map Choi matrix", "[representations]") {
    SECTION("d=2 corner structure") {
        const IntermediateSpec spec(ChannelParams(2, 0.5), 0.2, 0.7);
        const double r = spec.ratio();
        const ChoiMatrix c = intermediate_choi(spec);
        ComplexMatrix expected(4, 4);
        expected(0, 0) = expected(3, 3) = 1.0;
        expected(0, 3) = expected(3, 0) = r;
        REQUIRE(max_abs_diff(c.matrix, expected) < 1e-15);
    }
    SECTION("coincident endpoints give the identity-map Choi") {
        const IntermediateSpec spec(ChannelParams(3, 0.5), 0.4, 0.4);
        REQUIRE(spec.ratio() == Catch::Approx(1.0).margin(1e-15));
        const ChoiMatrix c = intermediate_choi(spec);
        const KrausSet id = make_kraus_set(3, {ComplexMatrix::identity(3)});
        REQUIRE(max_abs_diff(c.matrix, choi_from_kraus(id).matrix) < 1e-14);
    }
    SECTION("frozen ratio d=3 alpha=0.5 [0.85, 1]") {
        const IntermediateSpec spec(ChannelParams(3, 0.5), 0.85, 1.0);
        REQUIRE(spec.ratio() == Catch::Approx(200.0 / 41.0).margin(1e-12));
    }
    SECTION("analytic and superoperator routes agree") {
        auto rng = testing::make_rng(25);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int checked = 0;
        while (checked < 40) {
            const int d = 2 + static_cast<int>(unit(rng) * 5);
            const ChannelParams params(d, unit(rng));
            const double p1 = unit(rng);
            const double p2 = p1 + (1.0 - p1) * unit(rng);
            if (std::abs(coherence_factor(params, p1)) < 1e-3) continue;
            const IntermediateSpec spec(params, p1, p2);
            REQUIRE(max_abs_diff(intermediate_choi(spec).matrix, intermediate_choi_numeric(spec).matrix) <
                    1e-10);
            ++checked;
        }
    }
    SECTION("divisibility of the superoperators") {
        const ChannelParams params(3, 0.5);
        const IntermediateSpec spec(params, 0.3, 0.9);
        const ComplexMatrix e_base = superop_from_kraus(kraus_diagonal_weyl(params, 0.3));
        const ComplexMatrix e_star = superop_from_kraus(kraus_diagonal_weyl(params, 0.9));
        const ComplexMatrix e_int = superop_divide(e_star, e_base);
        REQUIRE(max_abs_diff(e_int * e_base, e_star) < 1e-10);
    }
    SECTION("singular base point is rejected with a domain error") {
        const ChannelParams params(3, 0.5);
        const double root = singular_point(params);
        const IntermediateSpec spec(params, root, 0.9);
        REQUIRE(spec.singular_base());
        REQUIRE_THROWS_AS(spec.ratio(), std::domain_error);
        REQUIRE_THROWS_AS(intermediate_choi(spec), std::domain_error);
        REQUIRE_THROWS_AS(intermediate_choi_numeric(spec), std::domain_error);
    }
    SECTION("near-singular base carries the conditioning flag") {
        const ChannelParams params(3, 0.5);
        const double root = singular_point(params);
        const IntermediateSpec warned(params, root + 1e-8, 0.9);
        REQUIRE(warned.ill_conditioned());
        const IntermediateSpec fine(params, 0.3, 0.9);
        REQUIRE_FALSE(fine.ill_conditioned());
    }
}

TEST_CASE("generic superoperator division against the depolarizing oracle", "[representations]") {
    // The full Weyl family with zero perturbations is the depolarizing
    // channel; its bridging map is depolarizing again, with Choi matrix
    // (1-q) |1>><<1| + (q/d) I and 1-q the ratio of the endpoint weights.
    for (int d : {2, 3}) {
        const ChannelParams params(d, 0.0);
        const std::vector<double> lambdas(static_cast<std::size_t>(d * d), 0.0);
        const double p1 = 0.2;
        const double p2 = 0.55;
        const ComplexMatrix e1 = superop_from_kraus(kraus_weyl_full(params, p1, lambdas));
        const ComplexMatrix e2 = superop_from_kraus(kraus_weyl_full(params, p2, lambdas));
        REQUIRE_FALSE(e1.is_diagonal(1e-14));  // exercises the dense-inverse path
        const ComplexMatrix c = reshuffle(superop_divide(e2, e1));

        const double keep = (1.0 - p2) / (1.0 - p1);
        ComplexMatrix expected = ComplexMatrix::identity(d * d) * Complex((1.0 - keep) / d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) expected(i * d + i, j * d + j) += keep;
        REQUIRE(max_abs_diff(c, expected) < 1e-10);
    }
}

TEST_CASE("intermediate spectrum", "[representations]") {
    SECTION("no-perturbation closed form") {
        for (int d : {2, 3, 5}) {
            const ChannelParams params(d, 0.0);
            for (double p_star : {0.0, 0.3, 0.8, 1.0}) {
                const Spectrum s = intermediate_eigs(IntermediateSpec(params, 0.0, p_star));
                REQUIRE(s.max() == Catch::Approx(d - (d - 1.0) * p_star).margin(1e-12));
                // Multiplicity d-1 value p_star, then zeros.
                int count_pstar = 0;
                for (double v : s.eigenvalues)
                    if (std::abs(v - p_star) < 1e-12) ++count_pstar;
                REQUIRE(count_pstar >= d - 1);
            }
        }
    }
    SECTION("coincident endpoints") {
        const Spectrum s = intermediate_eigs(IntermediateSpec(ChannelParams(4, 0.7), 0.5, 0.5));
        REQUIRE(s.max() == Catch::Approx(4.0).margin(1e-12));
        for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
            REQUIRE(std::abs(s.eigenvalues[i]) < 1e-12);
    }
    SECTION("frozen non-CP case d=3 alpha=0.5 [0.85, 1]") {
        const Spectrum s = intermediate_eigs(IntermediateSpec(ChannelParams(3, 0.5), 0.85, 1.0));
        REQUIRE(s.max() == Catch::Approx(441.0 / 41.0).margin(1e-12));
        REQUIRE(s.min() == Catch::Approx(-159.0 / 41.0).margin(1e-12));
    }
    SECTION("near the crossing the three nonzero eigenvalues are close to 1") {
        // p_star = 0.81 sits just below the root 0.8139; the numeric Choi
        // spectrum collapses onto 1, 1, 1 (plus zeros) there.
        const IntermediateSpec spec(ChannelParams(3, 0.5), 0.3, 0.81);
        const Spectrum s = hermitian_eigs(intermediate_choi_numeric(spec).matrix);
        for (int i = 0; i < 3; ++i) REQUIRE(s.eigenvalues[static_cast<std::size_t>(i)] ==
                                            Catch::Approx(1.0).margin(0.02));
        for (std::size_t i = 3; i < s.eigenvalues.size(); ++i)
            REQUIRE(std::abs(s.eigenvalues[i]) < 1e-10);
    }
    SECTION("trace identity and agreement with the eigensolver oracle") {
        auto rng = testing::make_rng(26);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int checked = 0;
        while (checked < 50) {
            const int d = 2 + static_cast<int>(unit(rng) * 5);
            const ChannelParams params(d, 0.05 + 0.95 * unit(rng));
            const double p1 = unit(rng);
            const double p2 = p1 + (1.0 - p1) * unit(rng);
            if (std::abs(coherence_factor(params, p1)) < 1e-3) continue;
            const IntermediateSpec spec(params, p1, p2);
            const Spectrum analytic = intermediate_eigs(spec);
            REQUIRE(analytic.sum() == Catch::Approx(static_cast<double>(d)).margin(1e-10));
            const Spectrum numeric = hermitian_eigs(intermediate_choi_numeric(spec).matrix);
            REQUIRE(analytic.eigenvalues.size() == numeric.eigenvalues.size());
            for (std::size_t i = 0; i < analytic.eigenvalues.size(); ++i)
                REQUIRE(analytic.eigenvalues[i] == Catch::Approx(numeric.eigenvalues[i]).margin(1e-9));
            ++checked;
        }
    }
}

TEST_CASE("complete positivity test", "[representations]") {
    const ChannelParams params(3, 0.5);
    SECTION("base below the root keeps every bridging map CP") {
        for (double p_star : {0.3, 0.5, 0.81, 0.99, 1.0}) {
            const CpTest t = is_cp(IntermediateSpec(params, 0.3, p_star));
            REQUIRE(t.cp);
        }
    }
    SECTION("base above the root yields a non-CP map") {
        const CpTest t = is_cp(IntermediateSpec(params, 0.85, 0.95));
        REQUIRE_FALSE(t.cp);
        REQUIRE(t.min_eig < 0.0);
    }
    SECTION("coincident endpoints are trivially CP") {
        REQUIRE(is_cp(IntermediateSpec(params, 0.85, 0.85)).cp);
    }
    SECTION("normalized trace norm is 1 exactly in the CP case") {
        auto rng = testing::make_rng(27);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int checked = 0;
        while (checked < 30) {
            const int d = 2 + static_cast<int>(unit(rng) * 3);
            const ChannelParams ps(d, unit(rng));
            const double p1 = unit(rng);
            const double p2 = p1 + (1.0 - p1) * unit(rng);
            if (std::abs(coherence_factor(ps, p1)) < 1e-3) continue;
            const IntermediateSpec spec(ps, p1, p2);
            const double norm = trace_norm(intermediate_choi(spec).matrix) / d;
            if (is_cp(spec).cp) {
                REQUIRE(norm == Catch::Approx(1.0).margin(1e-10));
            } else {
                REQUIRE(norm > 1.0 + 1e-10);
            }
            ++checked;
        }
    }
    SECTION("frozen normalized trace norm d=3 alpha=0.5 [0.85, 1]") {
        const IntermediateSpec spec(ChannelParams(3, 0.5), 0.85, 1.0);
        const double norm = trace_norm(intermediate_choi(spec).matrix) / 3.0;
        REQUIRE(norm == Catch::Approx(759.0 / 123.0).margin(1e-9));
    }
}

TEST_CASE("intermediate map action", "[representations]") {
    auto rng = testing::make_rng(28);
    SECTION("diagonal states are fixed points") {
        const IntermediateSpec spec(ChannelParams(3, 0.5), 0.85, 0.95);
        const DensityMatrix rho(ComplexMatrix::diagonal({0.2, 0.5, 0.3}));
        REQUIRE(max_abs_diff(apply_intermediate(spec, rho).matrix(), rho.matrix()) == 0.0);
    }
    SECTION("mapping to the root dephases completely") {
        const ChannelParams params(3, 0.5);
        const IntermediateSpec spec(params, 0.3, singular_point(params));
        const DensityMatrix rho = testing::random_density(rng, 3);
        REQUIRE(apply_intermediate(spec, rho).matrix().max_abs_offdiag() < 1e-12);
    }
    SECTION("composition property: bridge after evolve equals direct evolve") {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int checked = 0;
        while (checked < 20) {
            const int d = 2 + static_cast<int>(unit(rng) * 4);
            const ChannelParams params(d, unit(rng));
            const double p1 = unit(rng);
            const double p2 = p1 + (1.0 - p1) * unit(rng);
            if (std::abs(coherence_factor(params, p1)) < 1e-6) continue;
            const DensityMatrix rho = testing::random_density(rng, d);
            const DensityMatrix via_bridge =
                apply_intermediate(IntermediateSpec(params, p1, p2), evolve(params, p1, rho));
            const DensityMatrix direct = evolve(params, p2, rho);
            REQUIRE(max_abs_diff(via_bridge.matrix(), direct.matrix()) < 1e-12);
            ++checked;
        }
    }
    SECTION("matches the eigenvalue-weighted Weyl mixture") {
        // A non-CP interval; the linear action is compared on the raw matrix
        // since the output of a non-CP map need not be a state.
        const ChannelParams params(3, 0.5);
        const IntermediateSpec spec(params, 0.85, 0.95);
        const double r = spec.ratio();
        const double lambda0 = 1.0 + 2.0 * r;
        const double lambda_i = 1.0 - r;
        const DensityMatrix rho = testing::random_density(rng, 3);
        const auto diag = weyl_diagonal_family(3);
        ComplexMatrix mix = rho.matrix() * Complex(lambda0 / 3.0, 0.0);
        for (int i = 1; i < 3; ++i)
            mix += diag[static_cast<std::size_t>(i)] * rho.matrix() *
                   diag[static_cast<std::size_t>(i)].adjoint() * Complex(lambda_i / 3.0, 0.0);
        REQUIRE(max_abs_diff(mix, apply_intermediate(spec, rho.matrix())) < 1e-12);
    }
    SECTION("a non-CP map can carry a state outside the state space") {
        const IntermediateSpec spec(ChannelParams(3, 0.5), 0.85, 1.0);
        REQUIRE_FALSE(is_cp(spec).cp);
        const double s = 1.0 / std::sqrt(3.0);
        const DensityMatrix coherent = DensityMatrix::pure({s, s, s});
        REQUIRE_THROWS_AS(apply_intermediate(spec, coherent), std::invalid_argument);
    }
}

TEST_CASE("NCP witness", "[representations]") {
    const ChannelParams params(3, 0.5);
    SECTION("zero in the divisible region") {
        REQUIRE(rhp_witness(params, 0.5, 1e-6) == Catch::Approx(0.0).margin(1e-8));
    }
    SECTION("positive past the root") {
        REQUIRE(rhp_witness(params, 0.9, 1e-6) > 0.1);
    }
    SECTION("eps refinement converges to the analytic limit") {
        const double limit = rhp_witness_limit(params, 0.9);
        const double w1 = rhp_witness(params, 0.9, 1e-4);
        const double w2 = rhp_witness(params, 0.9, 5e-5);
        REQUIRE(std::abs(w2 - limit) < std::abs(w1 - limit));
        REQUIRE(w2 == Catch::Approx(limit).epsilon(1e-3));
        // First-order behavior: halving eps roughly halves the defect.
        const double ratio = std::abs(w1 - limit) / std::abs(w2 - limit);
        REQUIRE(ratio == Catch::Approx(2.0).margin(0.5));
    }
    SECTION("rejects the singular point and bad intervals") {
        REQUIRE_THROWS_AS(rhp_witness(params, singular_point(params), 1e-6), std::domain_error);
        REQUIRE_THROWS_AS(rhp_witness(params, 0.9999, 1e-3), std::domain_error);
        REQUIRE_THROWS_AS(rhp_witness(params, 0.5, 0.0), std::invalid_argument);
    }
}

TEST_CASE("NCP witness integral", "[representations]") {
    SECTION("zero without perturbation") {
        const RhpIntegral r = rhp_integral(ChannelParams(3, 0.0));
        REQUIRE(r.value == 0.0);
        REQUIRE_FALSE(r.divergent);
    }
    SECTION("positive and flagged divergent with perturbation") {
        const RhpIntegral r = rhp_integral(ChannelParams(3, 0.5));
        REQUIRE(r.value > 0.0);
        REQUIRE(r.divergent);
        REQUIRE(r.sensitivity > 0.0);
    }
    SECTION("matches the logarithmic antiderivative") {
        for (double alpha : {0.3, 0.5, 0.9}) {
            const ChannelParams params(3, alpha);
            const double root = singular_point(params);
            const double delta = 1e-4;
            const RhpIntegral r = rhp_integral(params, delta);
            const double expected =
                2.0 * (3 - 1.0) / 3.0 *
                std::log(std::abs(coherence_factor(params, 1.0) / coherence_factor(params, root + delta)));
            REQUIRE(r.value == Catch::Approx(expected).margin(1e-7));
        }
    }
    SECTION("grows with the perturbation strength") {
        double prev = 0.0;
        for (double alpha : {0.2, 0.4, 0.6, 0.8, 1.0}) {
            const double value = rhp_integral(ChannelParams(3, alpha)).value;
            REQUIRE(value > prev);
            prev = value;
        }
    }
}
