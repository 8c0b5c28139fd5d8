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

#ifndef WEYLCHAN_COMPLEX_MATRIX_HPP
#define WEYLCHAN_COMPLEX_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace weylchan {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. Sized for operator algebra on
/// small Hilbert spaces (dimensions up to a few hundred); everything is a
/// value type and safe to share across threads once constructed.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols);
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);
    /// Column vector from entries.
    static ComplexMatrix column(const std::vector<Complex>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator-() const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator*(Complex scalar) const;
    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// max_ij |a_ij - conj(a_ji)|; zero iff Hermitian.
    double hermiticity_error() const;
    /// max_ij |a_ij| over off-diagonal entries only.
    double max_abs_offdiag() const;
    bool is_diagonal(double tol) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

inline ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) { return m * scalar; }

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// |X>> with component i*d + j equal to X_ij (row-major double index).
ComplexMatrix vectorize(const ComplexMatrix& x);
/// Inverse of vectorize for a d^2 column vector.
ComplexMatrix unvectorize(const ComplexMatrix& v);

/// Reshuffling of a d^2 x d^2 matrix: out_{ij,kl} = in_{ik,jl} where a
/// double index (a,b) is flattened as a*d + b. Involutive. The row-major
/// convention here is fixed project-wide; the Choi/superoperator bridge
/// depends on it.
ComplexMatrix reshuffle(const ComplexMatrix& m);

}  // namespace weylchan

#endif  // WEYLCHAN_COMPLEX_MATRIX_HPP
