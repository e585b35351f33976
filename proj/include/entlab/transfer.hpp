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

#include "entlab/complex_matrix.hpp"
#include "entlab/states.hpp"

namespace entlab {

// Outcoupling of a two-qubit state into two single-mode cavities by resonant
// qubit-cavity exchange. Each cavity is truncated to {0, 1} photons; the
// basis ordering matches states.hpp, so photon states enumerate
// |1a,1b>, |1a,0b>, |0a,1b>, |0a,0b>.

struct TransferSettings {
    double g_tau = 0.0; // accumulated coupling phase g * tau, radians

    void validate() const;
};

/// Unitary on one qubit (x) one cavity mode, ordered (|1q,1c>, |1q,0c>,
/// |0q,1c>, |0q,0c>): rotates |1,0> -> cos(gt)|1,0> - i sin(gt)|0,1> and
/// the orthogonal partner accordingly, fixes |0,0>. The doubly excited
/// |1,1> level is fixed by convention; the protocol starts from empty
/// cavities and never populates it.
ComplexMatrix jc_rotation(double g_tau);

/// Couples qubit 1 to cavity a and qubit 2 to cavity b for phase g_tau,
/// starting from empty cavities, then traces out the qubits. Returns the
/// two-photon state.
DensityMatrix transfer(const DensityMatrix& rho_qq, const TransferSettings& settings);

/// Same map evaluated from its closed-form matrix elements: the nine
/// independent photon-basis entries as polynomials in sin/cos of g_tau,
/// the rest filled in by hermiticity and unit trace.
DensityMatrix transmitted_elements(const DensityMatrix& rho_qq, const TransferSettings& settings);

/// Local corrective gates |1> -> +i|1> on each photon mode (with a global
/// phase), undoing the phases the exchange imprints: at g_tau = pi/2 the
/// corrected photon state equals the original qubit state elementwise.
DensityMatrix phase_correction(const DensityMatrix& rho_photon);

} // namespace entlab
