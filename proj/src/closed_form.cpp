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

#include "entlab/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace entlab::closed_form {

namespace {
const Complex kI(0.0, 1.0);
}

DensityMatrix single_qubit_steady(double omega, double gamma) {
    if (gamma <= 0.0)
        throw std::invalid_argument("single_qubit_steady: gamma must be positive");
    const double u = gamma * gamma + 2.0 * omega * omega;
    ComplexMatrix m(2, 2);
    m(0, 0) = omega * omega / u;
    m(0, 1) = -kI * (omega * gamma / u);
    m(1, 0) = kI * (omega * gamma / u);
    m(1, 1) = (gamma * gamma + omega * omega) / u;
    return DensityMatrix::from_matrix({2}, std::move(m));
}

BlochDynamics bloch_dynamics(double omega, double gamma) {
    if (gamma <= 0.0) throw std::invalid_argument("bloch_dynamics: gamma must be positive");
    BlochDynamics out{ComplexMatrix(2, 2), {}, DampingRegime::Overdamped};
    out.m(0, 0) = -gamma;
    out.m(0, 1) = omega;
    out.m(1, 0) = -omega;
    out.m(1, 1) = -gamma / 2.0;

    const double disc = gamma * gamma - 16.0 * omega * omega;
    const Complex root = std::sqrt(Complex(disc, 0.0));
    Complex l1 = 0.25 * (Complex(-3.0 * gamma) - root);
    Complex l2 = 0.25 * (Complex(-3.0 * gamma) + root);
    // order by descending real part, ties by descending imaginary part
    if (l1.real() > l2.real() || (l1.real() == l2.real() && l1.imag() > l2.imag()))
        std::swap(l1, l2);
    out.eigenvalues = {l2, l1};

    if (std::abs(disc) <= 1e-14 * gamma * gamma)
        out.regime = DampingRegime::Critical;
    else if (disc < 0.0)
        out.regime = DampingRegime::Underdamped;
    else
        out.regime = DampingRegime::Overdamped;
    return out;
}

ComplexMatrix perturbative_correction(double omega, double gamma, double coupling) {
    const double u = gamma * gamma + 2.0 * omega * omega;
    const double u2 = u * u;
    ComplexMatrix m(4, 4);
    // <11|.|00>
    m(0, 3) = kI * (2.0 * omega * omega * gamma * coupling / u2);
    m(3, 0) = std::conj(m(0, 3));
    // <10|.|00> and <01|.|00>
    const double one_exc = -2.0 * omega * gamma * gamma * coupling / u2;
    m(1, 3) = one_exc;
    m(2, 3) = one_exc;
    m(3, 1) = one_exc;
    m(3, 2) = one_exc;
    return m;
}

double resonant_concurrence_signed(double omega, double gamma, double coupling) {
    if (gamma <= 0.0)
        throw std::invalid_argument("resonant_concurrence_signed: gamma must be positive");
    const double u = gamma * gamma + 2.0 * omega * omega;
    const double denom = u * u + 4.0 * coupling * coupling * gamma * gamma;
    return 2.0 * omega * omega * (2.0 * coupling * gamma - omega * omega) / denom;
}

double crossover_coupling(double omega, double gamma) {
    if (gamma <= 0.0) throw std::invalid_argument("crossover_coupling: gamma must be positive");
    return omega * omega / (2.0 * gamma);
}

double optimal_coupling(double omega, double gamma) {
    if (gamma <= 0.0) throw std::invalid_argument("optimal_coupling: gamma must be positive");
    const double a = 2.0 * omega * omega + gamma * gamma;
    return (omega * omega + std::sqrt(a * a + std::pow(omega, 4))) / (2.0 * gamma);
}

double max_concurrence(double omega, double gamma) {
    if (gamma <= 0.0) throw std::invalid_argument("max_concurrence: gamma must be positive");
    const double u = gamma * gamma + 2.0 * omega * omega;
    return omega * omega / (omega * omega + std::sqrt(std::pow(omega, 4) + u * u));
}

DensityMatrix asymptotic_rho_max() {
    // Limit of the steady state as the drive dominates, at the optimal
    // coupling: uniform diagonal weight (5 - sqrt 5)/40 on the three upper
    // levels, the remainder on the ground state, and a purely imaginary
    // double-excitation coherence of magnitude 1/(2 sqrt 5).
    const double s5 = std::sqrt(5.0);
    const double diag = (5.0 - s5) / 40.0;
    ComplexMatrix m(4, 4);
    m(0, 0) = diag;
    m(1, 1) = diag;
    m(2, 2) = diag;
    m(3, 3) = (25.0 + 3.0 * s5) / 40.0;
    m(0, 3) = kI / (2.0 * s5);
    m(3, 0) = -kI / (2.0 * s5);
    return DensityMatrix::from_matrix({2, 2}, std::move(m));
}

double SteadyStateSummary::fidelity(BellLabel label) const {
    switch (label) {
        case BellLabel::PsiPlus: return fidelity_psi_plus;
        case BellLabel::PsiMinus: return fidelity_psi_minus;
        case BellLabel::PhiPlus: return fidelity_phi_plus;
        case BellLabel::PhiMinus: return fidelity_phi_minus;
    }
    return 0.0;
}

SteadyStateSummary detuned_summary(double omega, double gamma, double coupling, double delta) {
    if (gamma <= 0.0) throw std::invalid_argument("detuned_summary: gamma must be positive");
    SteadyStateSummary s;
    const double gt2 = gamma * gamma + 4.0 * delta * delta;
    s.gamma_tilde_mag = std::sqrt(gt2);
    const double w2 = omega * omega;
    s.n4 = (gt2 + 2.0 * w2) * (gt2 + 2.0 * w2) +
           4.0 * coupling * gt2 * (coupling + 2.0 * delta);
    if (s.n4 <= 0.0)
        throw std::domain_error("detuned_summary: normalization quartic not positive");

    s.concurrence_signed = (2.0 * w2 / s.n4) * (2.0 * coupling * s.gamma_tilde_mag - w2);
    s.concurrence = std::max(0.0, s.concurrence_signed);

    const double n2 = std::sqrt(s.n4);
    s.fidelity_psi_plus = omega * std::sqrt(2.0 * gt2 + w2) / n2;
    s.fidelity_psi_minus = w2 / n2;

    const double phi_plus_sq =
        0.5 - w2 * (2.0 * gamma * gamma + w2 - 4.0 * delta * coupling) / s.n4;
    const double phi_minus_sq =
        0.5 - w2 * (w2 + 4.0 * delta * coupling + 8.0 * delta * delta) / s.n4;
    s.fidelity_phi_plus = std::sqrt(std::max(0.0, phi_plus_sq));
    s.fidelity_phi_minus = std::sqrt(std::max(0.0, phi_minus_sq));
    return s;
}

} // namespace entlab::closed_form
