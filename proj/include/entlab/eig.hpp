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

#include <vector>

#include "entlab/complex_matrix.hpp"

namespace entlab {

struct HermitianEig {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // orthonormal columns, vectors.col(k) <-> values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Rejects inputs whose hermiticity defect exceeds herm_tol.
HermitianEig eig_hermitian(const ComplexMatrix& h, double herm_tol = 1e-10);

/// Eigenvalues of a general complex square matrix (dimension <= 16) by
/// Householder Hessenberg reduction and Wilkinson-shifted QR iteration.
/// Sorted by descending real part, ties by descending imaginary part.
std::vector<Complex> eig_general_small(const ComplexMatrix& a);

/// Singular values in ascending order, by one-sided Jacobi orthogonalization.
/// Small singular values carry absolute error of order eps * ||a||, unlike
/// any route through the Gram matrix.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Determinant via LU with partial pivoting. Independent of the QR path.
Complex determinant(const ComplexMatrix& a);

/// Solves a.x = b by LU with partial pivoting.
std::vector<Complex> lu_solve(const ComplexMatrix& a, const std::vector<Complex>& b);

struct ConstrainedNullResult {
    std::vector<Complex> solution;
    double residual = 0.0;   // ||l.solution||_2
    int null_dim = 0;        // singular values below 1e-10 * ||l||
    bool unique = true;      // false when null_dim >= 2
    double matrix_norm = 0.0;                // max row-sum norm of l
    std::vector<std::vector<Complex>> null_basis; // orthonormal, size null_dim
};

/// Minimizes ||l.x|| subject to constraint_row.x = constraint_value.
/// Null-space dimension is counted from the singular values of l; a result
/// with null_dim >= 2 is flagged non-unique and the returned solution is the
/// least-norm constrained element of the numerical null space.
ConstrainedNullResult solve_constrained_null(const ComplexMatrix& l,
                                             const std::vector<Complex>& constraint_row,
                                             Complex constraint_value);

} // namespace entlab
