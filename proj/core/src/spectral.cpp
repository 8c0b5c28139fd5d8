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

#include "weylchan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace weylchan {

double Spectrum::min() const {
    if (eigenvalues.empty()) throw std::logic_error("Spectrum: empty");
    return eigenvalues.back();
}

double Spectrum::max() const {
    if (eigenvalues.empty()) throw std::logic_error("Spectrum: empty");
    return eigenvalues.front();
}

double Spectrum::sum() const {
    return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

bool Spectrum::nonnegative() const { return eigenvalues.empty() || min() >= -tolerance; }

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& h, double herm_tol) {
    if (!h.is_square()) throw std::invalid_argument("hermitian_eigensystem: matrix not square");
    if (h.hermiticity_error() > herm_tol)
        throw std::invalid_argument("hermitian_eigensystem: input not Hermitian within tolerance");

    const int n = h.rows();
    ComplexMatrix a = h;
    // Work on the exact Hermitian part so rotations keep the diagonal real.
    for (int i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, a.frobenius_norm());
    const double conv = 1e-14 * scale;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > conv; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double habs = std::abs(apq);
                if (habs <= 1e-300) continue;

                // Unitary 2x2 rotation annihilating a(p,q). With
                // a(p,q) = |h| e^{i phi}, the real Jacobi angle applies to |h|
                // and the phase is folded into the rotation.
                const Complex phase = apq / habs;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double delta = (app - aqq) / habs;
                const double sgn = delta >= 0.0 ? 1.0 : -1.0;
                const double t = 2.0 * sgn / (std::abs(delta) + std::sqrt(delta * delta + 4.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = t * c * std::conj(phase);  // column mix coefficient
                const Complex sbar = std::conj(s);

                // A <- U^dagger A U with U = [[c, -conj(s)], [s, c]] acting on
                // columns/rows p and q.
                for (int m = 0; m < n; ++m) {
                    const Complex amp = a(m, p);
                    const Complex amq = a(m, q);
                    a(m, p) = c * amp + s * amq;
                    a(m, q) = -sbar * amp + c * amq;
                }
                for (int m = 0; m < n; ++m) {
                    const Complex apm = a(p, m);
                    const Complex aqm = a(q, m);
                    a(p, m) = c * apm + sbar * aqm;
                    a(q, m) = -s * apm + c * aqm;
                }
                // Restore exact Hermitian structure on the touched entries.
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
                a(p, q) = Complex(0.0, 0.0);
                a(q, p) = Complex(0.0, 0.0);

                for (int m = 0; m < n; ++m) {
                    const Complex vmp = v(m, p);
                    const Complex vmq = v(m, q);
                    v(m, p) = c * vmp + s * vmq;
                    v(m, q) = -sbar * vmp + c * vmq;
                }
            }
        }
    }

    Eigensystem out;
    out.values.resize(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (std::abs(a(i, i).imag()) > 1e-10 * scale)
            throw std::runtime_error("hermitian_eigensystem: eigenvalue imaginary residue too large");
        diag[static_cast<std::size_t>(i)] = a(i, i).real();
    }
    std::stable_sort(order.begin(), order.end(),
                     [&diag](int x, int y) { return diag[static_cast<std::size_t>(x)] > diag[static_cast<std::size_t>(y)]; });
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        for (int m = 0; m < n; ++m) out.vectors(m, k) = v(m, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

Spectrum hermitian_eigs(const ComplexMatrix& h, double herm_tol) {
    Spectrum s;
    s.eigenvalues = hermitian_eigensystem(h, herm_tol).values;
    return s;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("singular_values: matrix not square");
    if (a.hermiticity_error() <= 1e-8 * std::max(1.0, a.max_abs())) {
        auto vals = hermitian_eigs(a, 1e-8 * std::max(1.0, a.max_abs())).eigenvalues;
        for (auto& v : vals) v = std::abs(v);
        std::sort(vals.begin(), vals.end(), std::greater<>());
        return vals;
    }
    const ComplexMatrix gram = a.adjoint() * a;
    auto vals = hermitian_eigs(gram, 1e-8 * std::max(1.0, gram.max_abs())).eigenvalues;
    for (auto& v : vals) v = std::sqrt(std::max(0.0, v));
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

double trace_norm(const ComplexMatrix& a) {
    const auto sv = singular_values(a);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best <= 1e-300) throw std::runtime_error("inverse: matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        }
        const Complex diag = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= diag;
            inv(col, j) /= diag;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex factor = a(r, col);
            if (factor == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace weylchan
