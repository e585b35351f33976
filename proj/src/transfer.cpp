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

#include "entlab/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace entlab {

namespace {

const Complex kI(0.0, 1.0);

/// Embeds a two-site operator acting on subsystems (site_a, site_b) of a
/// register of n two-level systems, identity elsewhere. The operator's own
/// basis is ordered with site_a as the slower index.
ComplexMatrix embed_pair(const ComplexMatrix& op, int n, int site_a, int site_b) {
    const int dim = 1 << n;
    ComplexMatrix out(dim, dim);
    const int sa = n - 1 - site_a; // bit positions, subsystem 0 is slowest
    const int sb = n - 1 - site_b;
    for (int col = 0; col < dim; ++col) {
        const int ia = (col >> sa) & 1;
        const int ib = (col >> sb) & 1;
        const int rest = col & ~((1 << sa) | (1 << sb));
        for (int oa = 0; oa < 2; ++oa)
            for (int ob = 0; ob < 2; ++ob) {
                const Complex v = op(oa * 2 + ob, ia * 2 + ib);
                if (v == Complex(0.0)) continue;
                const int row = rest | (oa << sa) | (ob << sb);
                out(row, col) += v;
            }
    }
    return out;
}

} // namespace

void TransferSettings::validate() const {
    if (!std::isfinite(g_tau)) throw std::invalid_argument("TransferSettings: g_tau not finite");
}

ComplexMatrix jc_rotation(double g_tau) {
    const double c = std::cos(g_tau);
    const double s = std::sin(g_tau);
    ComplexMatrix u = ComplexMatrix::identity(4);
    // rotation in span{|1q,0c>, |0q,1c>} = indices 1, 2
    u(1, 1) = c;
    u(2, 1) = -kI * s;
    u(1, 2) = -kI * s;
    u(2, 2) = c;
    return u;
}

DensityMatrix transfer(const DensityMatrix& rho_qq, const TransferSettings& settings) {
    settings.validate();
    if (rho_qq.dims() != std::vector<int>{2, 2})
        throw std::invalid_argument("transfer: input is not a two-qubit state");

    // register order: (qubit1, qubit2, cavity a, cavity b)
    ComplexMatrix vacuum(4, 4);
    vacuum(3, 3) = 1.0; // |0a,0b><0a,0b|
    ComplexMatrix full = kron(rho_qq.matrix(), vacuum);

    const ComplexMatrix u_jc = jc_rotation(settings.g_tau);
    const ComplexMatrix u1 = embed_pair(u_jc, 4, 0, 2);
    const ComplexMatrix u2 = embed_pair(u_jc, 4, 1, 3);
    const ComplexMatrix u = u1 * u2;

    full = u * full * u.adjoint();
    const DensityMatrix joint = DensityMatrix::from_matrix({2, 2, 2, 2}, std::move(full));
    return partial_trace(joint, {2, 3});
}

DensityMatrix transmitted_elements(const DensityMatrix& rho_qq,
                                   const TransferSettings& settings) {
    settings.validate();
    if (rho_qq.dims() != std::vector<int>{2, 2})
        throw std::invalid_argument("transmitted_elements: input is not a two-qubit state");

    const double s = std::sin(settings.g_tau);
    const double c = std::cos(settings.g_tau);
    const double s2 = s * s;
    const double c2 = c * c;
    const auto& q = rho_qq.matrix(); // indices: 0=|11>, 1=|10>, 2=|01>, 3=|00>

    ComplexMatrix p(4, 4);
    p(0, 0) = s2 * s2 * q(0, 0);
    p(0, 1) = -kI * (s2 * s) * q(0, 1);
    p(0, 2) = -kI * (s2 * s) * q(0, 2);
    p(0, 3) = -s2 * q(0, 3);
    p(1, 1) = s2 * q(1, 1) + s2 * c2 * q(0, 0);
    p(1, 2) = s2 * q(1, 2);
    p(1, 3) = -kI * s * q(1, 3) - kI * (s * c2) * q(0, 2);
    p(2, 2) = s2 * q(2, 2) + s2 * c2 * q(0, 0);
    p(2, 3) = -kI * s * q(2, 3) - kI * (s * c2) * q(0, 1);
    // remaining entries follow from hermiticity and unit trace
    p(3, 3) = 1.0 - (p(0, 0) + p(1, 1) + p(2, 2)).real();
    for (int r = 0; r < 4; ++r)
        for (int col = r + 1; col < 4; ++col) p(col, r) = std::conj(p(r, col));
    return DensityMatrix::from_matrix({2, 2}, std::move(p));
}

DensityMatrix phase_correction(const DensityMatrix& rho_photon) {
    if (rho_photon.dim() != 4)
        throw std::invalid_argument("phase_correction: input is not a two-mode state");
    // G = diag(i^(j+k)) over |j_a k_b>; rho -> G rho G^dag.
    const Complex g[4] = {-1.0, kI, kI, 1.0}; // indices |11>, |10>, |01>, |00>
    ComplexMatrix m(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = g[r] * std::conj(g[c]) * rho_photon.element(r, c);
    return DensityMatrix::from_matrix(rho_photon.dims(), std::move(m));
}

} // namespace entlab
