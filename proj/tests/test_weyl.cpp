#include <catch_amalgamated.hpp>

#include "weylchan/weyl.hpp"

using namespace weylchan;

namespace {

const Complex w = omega_power(3, 1);
const Complex w2 = omega_power(3, 2);

// The nine d=3 unitaries written out entry by entry.
const ComplexMatrix kDim3Reference[9] = {
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
    {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
    {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
    {{1, 0, 0}, {0, w, 0}, {0, 0, w2}},
    {{0, 1, 0}, {0, 0, w}, {w2, 0, 0}},
    {{0, 0, 1}, {w, 0, 0}, {0, w2, 0}},
    {{1, 0, 0}, {0, w2, 0}, {0, 0, w}},
    {{0, 1, 0}, {0, 0, w2}, {w, 0, 0}},
    {{0, 0, 1}, {w2, 0, 0}, {0, w, 0}},
};

}  // namespace

TEST_CASE("weyl unitaries for d=3 match the reference table", "[weyl]") {
    for (int a = 0; a < 9; ++a) {
        const ComplexMatrix u = weyl(WeylIndex::from_flat(3, a));
        INFO("flat index " << a);
        REQUIRE(max_abs_diff(u, kDim3Reference[a]) < 1e-15);
    }
}

TEST_CASE("weyl special cases", "[weyl]") {
    REQUIRE(max_abs_diff(weyl(WeylIndex(2, 0, 0)), ComplexMatrix::identity(2)) == 0.0);
    const ComplexMatrix u11{{0.0, 1.0}, {-1.0, 0.0}};
    REQUIRE(max_abs_diff(weyl(WeylIndex(2, 1, 1)), u11) < 1e-15);
}

TEST_CASE("weyl operators are unitary", "[weyl]") {
    for (int d : {2, 3, 4, 5}) {
        for (int a = 0; a < d * d; ++a) {
            const ComplexMatrix u = weyl(WeylIndex::from_flat(d, a));
            REQUIRE(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(d)) < 1e-12);
        }
    }
}

TEST_CASE("weyl composition rule", "[weyl]") {
    for (int d : {2, 3, 4, 5}) {
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                for (int r = 0; r < d; ++r)
                    for (int s = 0; s < d; ++s) {
                        const ComplexMatrix lhs = weyl(WeylIndex(d, k, l)) * weyl(WeylIndex(d, r, s));
                        const ComplexMatrix rhs =
                            omega_power(d, static_cast<long long>(l) * r) *
                            weyl(WeylIndex(d, (k + r) % d, (l + s) % d));
                        REQUIRE(max_abs_diff(lhs, rhs) < 1e-12);
                    }
    }
}

TEST_CASE("weyl adjoint rule", "[weyl]") {
    for (int d : {2, 3, 4, 5}) {
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                const ComplexMatrix lhs = weyl(WeylIndex(d, k, l)).adjoint();
                const ComplexMatrix rhs = omega_power(d, static_cast<long long>(k) * l) *
                                          weyl(WeylIndex(d, (d - k) % d, (d - l) % d));
                REQUIRE(max_abs_diff(lhs, rhs) < 1e-12);
            }
    }
}

TEST_CASE("weyl orthogonality", "[weyl]") {
    for (int d : {2, 3, 4, 5}) {
        for (int a = 0; a < d * d; ++a)
            for (int b = 0; b < d * d; ++b) {
                const Complex ip =
                    (weyl(WeylIndex::from_flat(d, a)).adjoint() * weyl(WeylIndex::from_flat(d, b))).trace();
                const double expected = (a == b) ? static_cast<double>(d) : 0.0;
                REQUIRE(std::abs(ip - Complex(expected, 0.0)) < 1e-12);
            }
    }
    // The adjoint on the first factor is load-bearing: tr(U_a U_b) without it
    // already fails at a = b = 1 (the product is a plain shift with zero
    // trace, not d).
    const Complex unadjointed = (weyl(WeylIndex(3, 0, 1)) * weyl(WeylIndex(3, 0, 1))).trace();
    REQUIRE(std::abs(unadjointed) < 1e-12);
}

TEST_CASE("diagonal family", "[weyl]") {
    SECTION("d=3 matches the diagonal reference entries") {
        const auto fam = weyl_diagonal_family(3);
        REQUIRE(fam.size() == 3);
        REQUIRE(max_abs_diff(fam[0], kDim3Reference[0]) == 0.0);
        REQUIRE(max_abs_diff(fam[1], kDim3Reference[3]) < 1e-15);
        REQUIRE(max_abs_diff(fam[2], kDim3Reference[6]) < 1e-15);
    }
    SECTION("d=2 is identity and the diagonal flip") {
        const auto fam = weyl_diagonal_family(2);
        REQUIRE(max_abs_diff(fam[0], ComplexMatrix::identity(2)) == 0.0);
        REQUIRE(max_abs_diff(fam[1], ComplexMatrix::diagonal({1.0, -1.0})) < 1e-15);
    }
    SECTION("the family is a cyclic group under multiplication") {
        for (int d : {2, 3, 5, 7}) {
            const auto fam = weyl_diagonal_family(d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    REQUIRE(max_abs_diff(fam[static_cast<std::size_t>(i)] * fam[static_cast<std::size_t>(j)],
                                         fam[static_cast<std::size_t>((i + j) % d)]) < 1e-12);
        }
    }
}

TEST_CASE("weyl index validation", "[weyl]") {
    REQUIRE_THROWS_AS(WeylIndex(1, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(WeylIndex(3, 3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(WeylIndex(3, 0, -1), std::invalid_argument);
    REQUIRE_THROWS_AS(WeylIndex::from_flat(3, 9), std::invalid_argument);
    REQUIRE(WeylIndex::from_flat(3, 7).k == 2);
    REQUIRE(WeylIndex::from_flat(3, 7).l == 1);
    REQUIRE(WeylIndex(3, 2, 1).flat() == 7);
}
