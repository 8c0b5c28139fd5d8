#ifndef WEYLCHAN_TESTS_SUPPORT_HPP
#define WEYLCHAN_TESTS_SUPPORT_HPP

#include <random>

#include "weylchan/complex_matrix.hpp"
#include "weylchan/density.hpp"

namespace weylchan::testing {

inline std::mt19937_64 make_rng(unsigned seed = 0) { return std::mt19937_64(seed); }

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
    const ComplexMatrix g = random_matrix(rng, n);
    return (g + g.adjoint()) * Complex(0.5, 0.0);
}

// Ginibre construction: G G^dagger normalized to unit trace.
inline DensityMatrix random_density(std::mt19937_64& rng, int n) {
    const ComplexMatrix g = random_matrix(rng, n);
    ComplexMatrix w = g * g.adjoint();
    w = w * Complex(1.0 / w.trace().real(), 0.0);
    // Exact Hermitian part; the product can drift at machine precision.
    w = (w + w.adjoint()) * Complex(0.5, 0.0);
    return DensityMatrix(w);
}

inline StateVector random_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    StateVector v(static_cast<std::size_t>(n));
    for (auto& c : v) c = Complex(dist(rng), dist(rng));
    return v;
}

}  // namespace weylchan::testing

#endif  // WEYLCHAN_TESTS_SUPPORT_HPP
