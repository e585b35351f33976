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

// Basis conventions used throughout:
//  - each two-level subsystem is ordered (|1>, |0>): index 0 is the excited
//    state (one photon for cavity modes), index 1 the ground state;
//  - composite indices follow the Kronecker order of the dims list, so two
//    qubits enumerate |11>, |10>, |01>, |00>;
//  - sigma_z|1> = +|1>, sigma_minus|1> = |0>, hence r_z(|1><1|) = +1 and
//    r_z(|0><0|) = -1.

/// Unit-norm pure state over a tensor product of subsystems.
class PureState {
  public:
    PureState(std::vector<int> dims, std::vector<Complex> amplitudes);

    const std::vector<int>& dims() const { return dims_; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }

    /// |psi><psi| as a matrix.
    ComplexMatrix projector() const;

  private:
    std::vector<int> dims_;
    std::vector<Complex> amplitudes_;
};

/// Unit-trace Hermitian positive-semidefinite matrix over a labeled tensor
/// product basis. Construction validates all three invariants:
/// |trace - 1| <= 1e-10, hermiticity defect <= 1e-10, eigenvalues >= -1e-9.
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(std::vector<int> dims, ComplexMatrix m);
    static DensityMatrix from_pure(const PureState& psi);

    const std::vector<int>& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    int dim() const { return matrix_.rows(); }

    Complex element(int r, int c) const { return matrix_(r, c); }
    double purity() const; // Tr rho^2

  private:
    DensityMatrix(std::vector<int> dims, ComplexMatrix m)
        : dims_(std::move(dims)), matrix_(std::move(m)) {}
    std::vector<int> dims_;
    ComplexMatrix matrix_;
};

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

PureState bell_state(BellKind kind);

/// Singlet fraction f in [0,1]: [(1-f)/3] I + [(4f-1)/3] |Psi-><Psi-|.
DensityMatrix werner_state(double f);

/// (2/3)|Psi+><Psi+| + [(1-alpha)/3]|11><11| + (alpha/3)|00><00|.
DensityMatrix ye_state(double alpha);

/// One-excitation diagonal mixture (1-a)|10><10| + a|01><01|.
DensityMatrix egge_state(double a);

/// Signed two-qubit concurrence lambda1 - lambda2 - lambda3 - lambda4, the
/// lambdas being the descending square roots of the eigenvalues of
/// rho.(sy x sy).conj(rho).(sy x sy). May be negative.
double concurrence_signed(const DensityMatrix& rho);

/// Wootters concurrence max{0, signed value}.
double concurrence(const DensityMatrix& rho);

/// sqrt(<psi|rho|psi>).
double fidelity(const PureState& psi, const DensityMatrix& rho);

/// Reduced state over the kept subsystems (indices into dims, ascending
/// relative order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

struct BlochVector {
    double x;
    double y;
    double z;
};

BlochVector bloch_vector(const DensityMatrix& rho);

/// True iff every element off both the diagonal and the antidiagonal has
/// magnitude below tol.
bool is_x_form(const DensityMatrix& rho, double tol);

} // namespace entlab
