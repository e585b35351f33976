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

#include "entlab/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace entlab {

ComplexMatrix::ComplexMatrix(int rows, int cols, std::initializer_list<Complex> entries)
    : rows_(rows), cols_(cols), data_(entries) {
    if (static_cast<size_t>(rows) * cols != data_.size()) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
    return m;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    Complex t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_row_sum_norm() const {
    double m = 0.0;
    for (int r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (int c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
        m = std::max(m, s);
    }
    return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i) {
        if (std::abs(data_[i] - other.data_[i]) > tol) return false;
    }
    return true;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix addition: dimension mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows())
        throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (int r = 0; r < lhs.rows(); ++r) {
        for (int k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(r, k);
            if (a == Complex(0.0)) continue;
            for (int c = 0; c < rhs.cols(); ++c) out(r, c) += a * rhs(k, c);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

std::vector<Complex> operator*(const ComplexMatrix& m, const std::vector<Complex>& v) {
    if (static_cast<size_t>(m.cols()) != v.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<Complex> out(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        Complex s = 0.0;
        for (int c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ar = 0; ar < a.rows(); ++ar)
        for (int ac = 0; ac < a.cols(); ++ac) {
            const Complex f = a(ar, ac);
            if (f == Complex(0.0)) continue;
            for (int br = 0; br < b.rows(); ++br)
                for (int bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
        }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

namespace {
const Complex kI(0.0, 1.0);
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m(2, 2, {0.0, -kI, kI, 0.0});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

const ComplexMatrix& sigma_plus() {
    static const ComplexMatrix m(2, 2, {0.0, 1.0, 0.0, 0.0});
    return m;
}

const ComplexMatrix& sigma_minus() {
    static const ComplexMatrix m(2, 2, {0.0, 0.0, 1.0, 0.0});
    return m;
}

} // namespace entlab
