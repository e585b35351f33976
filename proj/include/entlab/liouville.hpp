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

#include <utility>
#include <vector>

#include "entlab/complex_matrix.hpp"
#include "entlab/states.hpp"

namespace entlab {

// Rates are dimensionless multiples of a reference decay rate, time is
// measured in inverse reference-rate units.
//
// Vectorization convention: density matrices are column-stacked, so
// vec(A rho B) = (B^T kron A) vec(rho). The Hamiltonian part -i[H, rho]
// becomes -i(I kron H - H^T kron I) and a jump operator L contributes
// conj(L) kron L - (I kron L^dag L)/2 - ((L^dag L)^T kron I)/2.

struct SystemParams {
    double omega1 = 0.0;   // Rabi amplitude, qubit 1
    double omega2 = 0.0;   // Rabi amplitude, qubit 2
    double delta1 = 0.0;   // drive detuning, qubit 1
    double delta2 = 0.0;   // drive detuning, qubit 2
    double coupling = 0.0; // exchange coupling strength
    double gamma1 = 1.0;   // decay rate, qubit 1
    double gamma2 = 1.0;   // decay rate, qubit 2

    void validate() const; // throws on negative rates or non-finite values
};

enum class ReservoirModel {
    Separate, // independent decay channels, one per qubit
    Common    // one shared channel with the collective lowering operator
};

/// Generator of master-equation evolution acting on column-stacked density
/// matrices; matrix is dim^2 x dim^2.
struct Superoperator {
    int dim = 0;
    ComplexMatrix matrix;

    /// Row vector representing the trace functional on vectorized matrices.
    static std::vector<Complex> trace_row(int dim);
    /// ||trace_row . matrix||_inf; zero for a trace-preserving generator.
    double trace_preservation_defect() const;
    /// Action on a density-matrix-shaped operand.
    ComplexMatrix apply(const ComplexMatrix& rho) const;
};

struct DriveComponent {
    double amplitude = 0.0; // >= 0
    double phase = 0.0;     // radians
};

/// |sum_k amplitude_k exp(i phase_k)|: one coherent drive equivalent to a
/// set of phase-shifted components.
double effective_rabi(const std::vector<DriveComponent>& components);

/// Two-qubit Hamiltonian in the frame rotating at the drive frequencies:
/// sum_j (delta_j/2 sz_j + omega_j/2 sx_j) + (coupling/2)(sx sx + sy sy).
ComplexMatrix rotating_hamiltonian(const SystemParams& p);

struct HamiltonianParts {
    ComplexMatrix bare;        // detuning and drive terms
    ComplexMatrix interaction; // exchange coupling term
};
HamiltonianParts rotating_hamiltonian_parts(const SystemParams& p);

/// Full 16x16 generator for the chosen reservoir model. The Common model
/// requires gamma1 == gamma2.
Superoperator liouvillian(const SystemParams& p, ReservoirModel model);

/// 4x4 generator for one resonantly driven damped qubit.
Superoperator single_qubit_liouvillian(double omega, double gamma);

/// Builds the dissipator superoperator for one jump operator at unit rate.
ComplexMatrix dissipator_superoperator(const ComplexMatrix& jump);
/// Superoperator for -i[h, .].
ComplexMatrix hamiltonian_superoperator(const ComplexMatrix& h);

struct SteadyStateResult {
    DensityMatrix state;
    int null_dim = 1;
    double residual = 0.0; // ||L vec(rho)||_2
};

/// Trace-one element of the generator's kernel. null_dim > 1 marks a
/// degenerate steady-state manifold; the returned state is then the
/// projection of the maximally mixed state onto the kernel, renormalized.
SteadyStateResult steady_state(const Superoperator& l);

using Trajectory = std::vector<std::pair<double, DensityMatrix>>;

/// Integrates d(vec rho)/dt = L vec(rho) with an embedded Dormand-Prince
/// 5(4) pair under PI step-size control, sampling at sample_count uniform
/// times in [0, t_final] by cubic Hermite interpolation. Each sample is
/// validated against the DensityMatrix invariants and a violation is
/// reported, not repaired: loose tolerances (rel_tol well above the 1e-10
/// default) can accumulate enough integrator noise to breach them.
/// hermitize_samples is a diagnostics switch that projects samples onto
/// (rho + rho^dag)/2 before validation; evolution itself is never touched.
Trajectory evolve(const DensityMatrix& rho0, const Superoperator& l, double t_final,
                  int sample_count, double rel_tol = 1e-10, bool hermitize_samples = false);

} // namespace entlab
