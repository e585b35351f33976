// Copyright 2026 The entlab authors
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

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace entlab {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. Value type: copies are deep,
/// all operations return new matrices. Dimensions in this project never
/// exceed 16x16 (two-qubit Liouvillians), so everything is unblocked.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    ComplexMatrix(int rows, int cols, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex& operator()(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double max_abs() const;          // max |a_ij|
    double frobenius_norm() const;
    double max_row_sum_norm() const; // induced infinity norm

    /// Elementwise comparison with an explicit absolute tolerance.
    bool approx_equal(const ComplexMatrix& other, double tol) const;

    bool is_hermitian(double tol) const;
    /// max |a_ij - conj(a_ji)|, the quantity checked by is_hermitian.
    double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

std::vector<Complex> operator*(const ComplexMatrix& m, const std::vector<Complex>& v);

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Single-qubit operators in the basis (|1>, |0>): index 0 is the excited
// state, sigma_z|1> = +|1>, sigma_minus|1> = |0>.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& sigma_plus();
const ComplexMatrix& sigma_minus();

} // namespace entlab
