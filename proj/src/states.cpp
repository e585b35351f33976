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

#include "entlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entlab/eig.hpp"

namespace entlab {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kHermTol = 1e-10;
constexpr double kPsdSlack = -1e-9;
constexpr double kNormTol = 1e-12;

int product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) p *= d;
    return p;
}

} // namespace

PureState::PureState(std::vector<int> dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (product(dims_) != static_cast<int>(amplitudes_.size()))
        throw std::invalid_argument("PureState: dims do not match amplitude count");
    double n2 = 0.0;
    for (const auto& z : amplitudes_) n2 += std::norm(z);
    if (std::abs(std::sqrt(n2) - 1.0) > kNormTol)
        throw std::invalid_argument("PureState: amplitudes not normalized");
}

ComplexMatrix PureState::projector() const {
    const int n = dim();
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
    return m;
}

DensityMatrix DensityMatrix::from_matrix(std::vector<int> dims, ComplexMatrix m) {
    if (!m.is_square() || m.rows() != product(dims))
        throw std::invalid_argument("DensityMatrix: matrix size does not match dims");
    const double tr_err = std::abs(m.trace() - Complex(1.0));
    if (tr_err > kTraceTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace deviates from 1 by " << tr_err;
        throw std::invalid_argument(msg.str());
    }
    const double herm = m.hermiticity_defect();
    if (herm > kHermTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: hermiticity defect " << herm;
        throw std::invalid_argument(msg.str());
    }
    const HermitianEig eig = eig_hermitian(m, kHermTol * 10);
    if (eig.values.front() < kPsdSlack) {
        std::ostringstream msg;
        msg << "DensityMatrix: negative eigenvalue " << eig.values.front();
        throw std::invalid_argument(msg.str());
    }
    return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return from_matrix(psi.dims(), psi.projector());
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

PureState bell_state(BellKind kind) {
    // basis |11>, |10>, |01>, |00>
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amp(4, 0.0);
    switch (kind) {
        case BellKind::PsiPlus:
            amp[1] = s;
            amp[2] = s;
            break;
        case BellKind::PsiMinus:
            amp[2] = s;
            amp[1] = -s;
            break;
        case BellKind::PhiPlus:
            amp[3] = s;
            amp[0] = s;
            break;
        case BellKind::PhiMinus:
            amp[3] = s;
            amp[0] = -s;
            break;
    }
    return PureState({2, 2}, amp);
}

DensityMatrix werner_state(double f) {
    if (f < 0.0 || f > 1.0)
        throw std::invalid_argument("werner_state: f outside [0, 1]");
    ComplexMatrix m = ComplexMatrix::identity(4);
    m *= Complex((1.0 - f) / 3.0);
    ComplexMatrix p = bell_state(BellKind::PsiMinus).projector();
    p *= Complex((4.0 * f - 1.0) / 3.0);
    return DensityMatrix::from_matrix({2, 2}, m + p);
}

DensityMatrix ye_state(double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("ye_state: alpha outside [0, 1]");
    ComplexMatrix m = bell_state(BellKind::PsiPlus).projector();
    m *= Complex(2.0 / 3.0);
    m(0, 0) += (1.0 - alpha) / 3.0; // |11><11|
    m(3, 3) += alpha / 3.0;         // |00><00|
    return DensityMatrix::from_matrix({2, 2}, m);
}

DensityMatrix egge_state(double a) {
    if (a < 0.0 || a > 1.0)
        throw std::invalid_argument("egge_state: a outside [0, 1]");
    ComplexMatrix m(4, 4);
    m(1, 1) = 1.0 - a; // |10><10|
    m(2, 2) = a;       // |01><01|
    return DensityMatrix::from_matrix({2, 2}, m);
}

double concurrence_signed(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<int>{2, 2})
        throw std::invalid_argument("concurrence: not a two-qubit state");
    // The descending square roots of the spin-flip spectrum eig(rho rho~)
    // equal the singular values of the complex-symmetric matrix
    // sqrt(rho) (sy x sy) sqrt(rho)^T: with T = sy x sy and
    // rho~ = T conj(rho) T, one has sqrt(rho) rho~ sqrt(rho) = M M^dag for
    // M = sqrt(rho) T sqrt(rho)^T. Working with M keeps the near-zero
    // lambdas at machine accuracy, where eigenvalues of the non-Hermitian
    // product rho rho~ only resolve them to sqrt(eps).
    const HermitianEig eig = eig_hermitian(rho.matrix(), 1e-9);
    ComplexMatrix root(4, 4);
    for (int k = 0; k < 4; ++k) {
        if (eig.values[k] < -1e-9)
            throw std::runtime_error("concurrence: state spectrum negative beyond slack");
        const double s = std::sqrt(std::max(0.0, eig.values[k]));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                root(r, c) += s * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
    }
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    const std::vector<double> lambdas = singular_values(root * yy * root.transpose());
    return lambdas[3] - lambdas[2] - lambdas[1] - lambdas[0];
}

double concurrence(const DensityMatrix& rho) { return std::max(0.0, concurrence_signed(rho)); }

double fidelity(const PureState& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim())
        throw std::invalid_argument("fidelity: dimension mismatch");
    Complex expect = 0.0;
    const auto& amp = psi.amplitudes();
    for (int r = 0; r < rho.dim(); ++r)
        for (int c = 0; c < rho.dim(); ++c)
            expect += std::conj(amp[r]) * rho.element(r, c) * amp[c];
    return std::sqrt(std::max(0.0, expect.real()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const auto& dims = rho.dims();
    const int nsub = static_cast<int>(dims.size());
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    std::vector<int> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    if (std::unique(keep_sorted.begin(), keep_sorted.end()) != keep_sorted.end())
        throw std::invalid_argument("partial_trace: repeated subsystem index");
    for (int k : keep_sorted)
        if (k < 0 || k >= nsub) throw std::invalid_argument("partial_trace: index out of range");

    std::vector<int> traced;
    for (int i = 0; i < nsub; ++i)
        if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), i)) traced.push_back(i);

    std::vector<int> stride(nsub);
    int acc = 1;
    for (int i = nsub - 1; i >= 0; --i) {
        stride[i] = acc;
        acc *= dims[i];
    }

    std::vector<int> keep_dims;
    for (int k : keep_sorted) keep_dims.push_back(dims[k]);
    const int dkeep = product(keep_dims);
    int dtrace = 1;
    for (int t : traced) dtrace *= dims[t];

    ComplexMatrix out(dkeep, dkeep);
    for (int r = 0; r < dkeep; ++r) {
        for (int c = 0; c < dkeep; ++c) {
            // decompose kept indices
            int base_r = 0;
            int base_c = 0;
            int rr = r;
            int cc = c;
            for (size_t i = 0; i < keep_sorted.size(); ++i) {
                int block = 1;
                for (size_t j = i + 1; j < keep_sorted.size(); ++j) block *= keep_dims[j];
                base_r += (rr / block) * stride[keep_sorted[i]];
                base_c += (cc / block) * stride[keep_sorted[i]];
                rr %= block;
                cc %= block;
            }
            Complex sum = 0.0;
            for (int t = 0; t < dtrace; ++t) {
                int off = 0;
                int tt = t;
                for (size_t i = 0; i < traced.size(); ++i) {
                    int block = 1;
                    for (size_t j = i + 1; j < traced.size(); ++j) block *= dims[traced[j]];
                    off += (tt / block) * stride[traced[i]];
                    tt %= block;
                }
                sum += rho.element(base_r + off, base_c + off);
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix::from_matrix(keep_dims, std::move(out));
}

BlochVector bloch_vector(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("bloch_vector: not a single-qubit state");
    const auto& m = rho.matrix();
    BlochVector r;
    r.x = (m * pauli_x()).trace().real();
    r.y = (m * pauli_y()).trace().real();
    r.z = (m * pauli_z()).trace().real();
    return r;
}

bool is_x_form(const DensityMatrix& rho, double tol) {
    if (rho.dim() != 4) throw std::invalid_argument("is_x_form: not a two-qubit state");
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            if (r == c || r + c == 3) continue;
            if (std::abs(rho.element(r, c)) >= tol) return false;
        }
    return true;
}

} // namespace entlab
