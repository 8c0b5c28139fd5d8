#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "weylchan/complex_matrix.hpp"
#include "weylchan/weyl.hpp"

using namespace weylchan;

TEST_CASE("kron basics", "[matrix]") {
    SECTION("identity times identity") {
        REQUIRE(approx_equal(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                             ComplexMatrix::identity(4), 0.0));
    }
    SECTION("diagonal unitary with its conjugate") {
        const ComplexMatrix u = weyl(WeylIndex(3, 1, 0));
        const ComplexMatrix k = kron(u, u.conjugate());
        // Expected by direct expansion: diagonal phases omega^(r - c) at the
        // double index (r, c).
        ComplexMatrix expected(9, 9);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                expected(3 * r + c, 3 * r + c) = omega_power(3, r - c);
        REQUIRE(max_abs_diff(k, expected) < 1e-14);
        REQUIRE(max_abs_diff(k * k.adjoint(), ComplexMatrix::identity(9)) < 1e-14);
    }
    SECTION("trace is multiplicative") {
        auto rng = testing::make_rng(7);
        const ComplexMatrix a = testing::random_matrix(rng, 3);
        const ComplexMatrix b = testing::random_matrix(rng, 3);
        const ComplexMatrix k = kron(a, b);
        // Brute-force entry summation as the oracle.
        Complex diag_sum(0.0, 0.0);
        for (int i = 0; i < 9; ++i) diag_sum += k(i, i);
        REQUIRE(std::abs(diag_sum - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("vectorize", "[matrix]") {
    SECTION("identity stacks to the maximally entangled vector") {
        const ComplexMatrix v = vectorize(ComplexMatrix::identity(2));
        REQUIRE(v.rows() == 4);
        REQUIRE(std::abs(v(0, 0) - Complex(1.0, 0.0)) == 0.0);
        REQUIRE(std::abs(v(1, 0)) == 0.0);
        REQUIRE(std::abs(v(2, 0)) == 0.0);
        REQUIRE(std::abs(v(3, 0) - Complex(1.0, 0.0)) == 0.0);
    }
    SECTION("row-major readoff") {
        const ComplexMatrix m{{Complex(1, 2), Complex(3, 4)}, {Complex(5, 6), Complex(7, 8)}};
        const ComplexMatrix v = vectorize(m);
        REQUIRE(v(0, 0) == Complex(1, 2));
        REQUIRE(v(1, 0) == Complex(3, 4));
        REQUIRE(v(2, 0) == Complex(5, 6));
        REQUIRE(v(3, 0) == Complex(7, 8));
        REQUIRE(max_abs_diff(unvectorize(v), m) == 0.0);
    }
    SECTION("product identity vec(XZY) = (X kron Y^T) vec(Z)") {
        auto rng = testing::make_rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix x = testing::random_matrix(rng, 3);
            const ComplexMatrix z = testing::random_matrix(rng, 3);
            const ComplexMatrix y = testing::random_matrix(rng, 3);
            const ComplexMatrix lhs = vectorize(x * z * y);
            const ComplexMatrix rhs = kron(x, y.transpose()) * vectorize(z);
            REQUIRE(max_abs_diff(lhs, rhs) < 1e-12);
        }
    }
    SECTION("rejects non-square input") {
        REQUIRE_THROWS_AS(vectorize(ComplexMatrix(2, 3)), std::invalid_argument);
    }
}

TEST_CASE("reshuffle", "[matrix]") {
    SECTION("identity superoperator maps to the entangled projector") {
        const ComplexMatrix r = reshuffle(ComplexMatrix::identity(4));
        ComplexMatrix expected(4, 4);
        expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
        REQUIRE(max_abs_diff(r, expected) == 0.0);
    }
    SECTION("involution on random input") {
        auto rng = testing::make_rng(3);
        const ComplexMatrix m = testing::random_matrix(rng, 9);
        REQUIRE(max_abs_diff(reshuffle(reshuffle(m)), m) == 0.0);
    }
    SECTION("rejects non-square-dimension input") {
        REQUIRE_THROWS_AS(reshuffle(ComplexMatrix(5, 5)), std::invalid_argument);
        REQUIRE_THROWS_AS(reshuffle(ComplexMatrix(4, 5)), std::invalid_argument);
    }
}

TEST_CASE("matrix arithmetic sanity", "[matrix]") {
    auto rng = testing::make_rng(5);
    const ComplexMatrix a = testing::random_matrix(rng, 4);
    REQUIRE(max_abs_diff(a.adjoint().adjoint(), a) == 0.0);
    REQUIRE(max_abs_diff(a.transpose().conjugate(), a.adjoint()) == 0.0);
    REQUIRE(a.hermiticity_error() > 0.0);
    REQUIRE((a + a.adjoint()).hermiticity_error() < 1e-15);
    REQUIRE_THROWS_AS(a * ComplexMatrix(3, 3), std::invalid_argument);
}
