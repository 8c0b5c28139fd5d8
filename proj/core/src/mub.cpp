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

#include "weylchan/mub.hpp"

#include <cmath>
#include <stdexcept>

#include "weylchan/weyl.hpp"

namespace weylchan {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::vector<StateVector> computational_basis(int d) {
    std::vector<StateVector> basis(static_cast<std::size_t>(d), StateVector(static_cast<std::size_t>(d), Complex(0.0, 0.0)));
    for (int i = 0; i < d; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    return basis;
}

std::vector<StateVector> fourier_basis(int d) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<StateVector> basis;
    basis.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        StateVector v(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            v[static_cast<std::size_t>(j)] = norm * omega_power(d, static_cast<long long>(j) * k);
        basis.push_back(std::move(v));
    }
    return basis;
}

// For odd prime d: vector k of basis b has components omega^(b j^2 + j k)/sqrt(d).
// b = 0 is the Fourier basis; distinct b differ by a quadratic Gauss phase,
// which keeps all cross overlaps at magnitude 1/sqrt(d).
std::vector<StateVector> quadratic_phase_basis(int d, int b) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<StateVector> basis;
    basis.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        StateVector v(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            const long long e = static_cast<long long>(b) * j * j + static_cast<long long>(j) * k;
            v[static_cast<std::size_t>(j)] = norm * omega_power(d, e);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

MubFamily mub_family(int d) {
    if (d < 2) throw std::invalid_argument("mub_family: dimension must be at least 2");
    MubFamily fam;
    fam.d = d;
    fam.bases.push_back(computational_basis(d));
    if (d == 2) {
        const double s = 1.0 / std::sqrt(2.0);
        fam.bases.push_back({{s, s}, {s, -s}});
        fam.bases.push_back({{s, Complex(0.0, s)}, {s, Complex(0.0, -s)}});
        fam.complete_family = true;
        return fam;
    }
    if (is_prime(d)) {
        for (int b = 0; b < d; ++b) fam.bases.push_back(quadratic_phase_basis(d, b));
        fam.complete_family = true;
        return fam;
    }
    // Composite dimension: only the computational/Fourier pair is shipped.
    // The maximal count is unknown in general and prime-power extensions are
    // not needed here.
    fam.bases.push_back(fourier_basis(d));
    fam.complete_family = false;
    return fam;
}

MubCheck verify_mub(const MubFamily& fam) {
    const int d = fam.d;
    if (fam.count() > d + 1) return MubCheck{false, static_cast<double>(fam.count() - d - 1)};
    double worst = 0.0;
    const double inv_d = 1.0 / d;
    for (int b = 0; b < fam.count(); ++b) {
        const auto& basis = fam.bases[static_cast<std::size_t>(b)];
        if (static_cast<int>(basis.size()) != d) return MubCheck{false, 1.0};
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                Complex ip(0.0, 0.0);
                for (int m = 0; m < d; ++m)
                    ip += std::conj(basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]) *
                          basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
                const double target = (i == j) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(ip - Complex(target, 0.0)));
            }
        }
    }
    bool ortho_ok = worst <= 1e-12;
    double worst_unbiased = 0.0;
    for (int b1 = 0; b1 < fam.count(); ++b1) {
        for (int b2 = b1 + 1; b2 < fam.count(); ++b2) {
            for (const auto& psi : fam.bases[static_cast<std::size_t>(b1)]) {
                for (const auto& phi : fam.bases[static_cast<std::size_t>(b2)]) {
                    Complex ip(0.0, 0.0);
                    for (int m = 0; m < d; ++m)
                        ip += std::conj(psi[static_cast<std::size_t>(m)]) * phi[static_cast<std::size_t>(m)];
                    worst_unbiased = std::max(worst_unbiased, std::abs(std::norm(ip) - inv_d));
                }
            }
        }
    }
    const bool ok = ortho_ok && worst_unbiased <= 1e-10;
    return MubCheck{ok, std::max(worst, worst_unbiased)};
}

std::vector<MubPair> mub_pairs(const MubFamily& fam, bool exclude_computational) {
    std::vector<MubPair> pairs;
    for (int b = exclude_computational ? 1 : 0; b < fam.count(); ++b)
        for (int i = 0; i < fam.d; ++i)
            for (int j = i + 1; j < fam.d; ++j) pairs.push_back(MubPair{b, i, j});
    return pairs;
}

DensityMatrix mub_state(const MubFamily& fam, int basis, int index) {
    if (basis < 0 || basis >= fam.count()) throw std::invalid_argument("mub_state: basis index out of range");
    if (index < 0 || index >= fam.d) throw std::invalid_argument("mub_state: vector index out of range");
    return DensityMatrix::pure(fam.bases[static_cast<std::size_t>(basis)][static_cast<std::size_t>(index)]);
}

}  // namespace weylchan
