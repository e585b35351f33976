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

#include "entlab/complex_matrix.hpp"
#include "entlab/states.hpp"

namespace entlab::closed_form {

// Analytic steady-state results for two resonantly driven, exchange-coupled
// qubits with independent decay channels, plus the single-qubit relaxation
// geometry. These evaluators are deliberately independent of the Liouvillian
// engine so the two can cross-check each other.

/// Steady state of one driven damped qubit,
/// [[W^2, -i W G], [i W G, G^2 + W^2]] / (G^2 + 2 W^2) in the (|1>, |0>)
/// basis. gamma must be positive (no unique steady state at gamma = 0).
DensityMatrix single_qubit_steady(double omega, double gamma);

enum class DampingRegime { Underdamped, Critical, Overdamped };

struct BlochDynamics {
    ComplexMatrix m;                       // drift matrix for (r_z, r_y)
    std::pair<Complex, Complex> eigenvalues; // descending real part
    DampingRegime regime;
};

/// Linearized relaxation of the driven qubit's Bloch components:
/// m = [[-gamma, omega], [-omega, -gamma/2]], eigenvalues
/// (-3 gamma -+ sqrt(gamma^2 - 16 omega^2)) / 4. The regime switches from
/// overdamped to underdamped at omega/gamma = 1/4.
BlochDynamics bloch_dynamics(double omega, double gamma);

/// First-order coupling correction to the product of single-qubit steady
/// states: traceless, with the double-excitation coherence
/// <11|.|00> = 2i omega^2 gamma w / (gamma^2 + 2 omega^2)^2 and the
/// single-excitation coherences <10|.|00> = <01|.|00> =
/// -2 omega gamma^2 w / (gamma^2 + 2 omega^2)^2, plus conjugates.
ComplexMatrix perturbative_correction(double omega, double gamma, double coupling);

/// Signed steady-state concurrence at resonance,
/// 2 W^2 (2 w G - W^2) / ((G^2 + 2W^2)^2 + 4 w^2 G^2).
double resonant_concurrence_signed(double omega, double gamma, double coupling);

/// Coupling at which the signed concurrence changes sign: omega^2 / (2 gamma).
double crossover_coupling(double omega, double gamma);

/// Coupling maximizing the resonant concurrence:
/// [omega^2 + sqrt((2 omega^2 + gamma^2)^2 + omega^4)] / (2 gamma).
double optimal_coupling(double omega, double gamma);

/// Concurrence at the optimal coupling:
/// omega^2 / (omega^2 + sqrt(omega^4 + (gamma^2 + 2 omega^2)^2)).
double max_concurrence(double omega, double gamma);

/// Strong-driving limit of the steady state at the optimal coupling; its
/// concurrence is 1/(1 + sqrt 5).
DensityMatrix asymptotic_rho_max();

enum class BellLabel { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

struct SteadyStateSummary {
    double concurrence_signed = 0.0;
    double concurrence = 0.0;
    double fidelity_psi_plus = 0.0;
    double fidelity_psi_minus = 0.0;
    double fidelity_phi_plus = 0.0;
    double fidelity_phi_minus = 0.0;
    double n4 = 0.0;             // normalization quartic
    double gamma_tilde_mag = 0.0; // |gamma + 2 i delta|

    double fidelity(BellLabel label) const;
};

/// Detuned steady-state concurrence and Bell fidelities. With
/// gt = |gamma + 2 i delta| and
/// n4 = (gt^2 + 2 W^2)^2 + 4 w gt^2 (w + 2 delta):
///   C      = (2 W^2 / n4)(2 w gt - W^2)
///   F(psi+) = W sqrt(2 gt^2 + W^2) / sqrt(n4)
///   F(psi-) = W^2 / sqrt(n4)
///   F(phi+) = sqrt(1/2 - W^2 (2 gamma^2 + W^2 - 4 delta w) / n4)
///   F(phi-) = sqrt(1/2 - W^2 (W^2 + 4 delta w + 8 delta^2) / n4)
/// The four squared fidelities resolve unity exactly, which fixes F(phi-).
/// Throws when n4 <= 0 (outside the validity region).
SteadyStateSummary detuned_summary(double omega, double gamma, double coupling, double delta);

} // namespace entlab::closed_form
