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

#include "entlab/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entlab/eig.hpp"

namespace entlab {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix lift_to_pair(const ComplexMatrix& op, int which) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    return which == 0 ? kron(op, id) : kron(id, op);
}

ComplexMatrix vec_to_matrix(const std::vector<Complex>& v, int dim) {
    ComplexMatrix m(dim, dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) m(r, c) = v[static_cast<size_t>(c) * dim + r];
    return m;
}

std::vector<Complex> matrix_to_vec(const ComplexMatrix& m) {
    const int dim = m.rows();
    std::vector<Complex> v(static_cast<size_t>(dim) * dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) v[static_cast<size_t>(c) * dim + r] = m(r, c);
    return v;
}

} // namespace

void SystemParams::validate() const {
    const double vals[] = {omega1, omega2, delta1, delta2, coupling, gamma1, gamma2};
    for (double v : vals)
        if (!std::isfinite(v)) throw std::invalid_argument("SystemParams: non-finite value");
    if (gamma1 < 0.0 || gamma2 < 0.0)
        throw std::invalid_argument("SystemParams: negative decay rate");
}

std::vector<Complex> Superoperator::trace_row(int dim) {
    std::vector<Complex> row(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) row[static_cast<size_t>(i) * dim + i] = 1.0;
    return row;
}

double Superoperator::trace_preservation_defect() const {
    const auto row = trace_row(dim);
    double worst = 0.0;
    for (int c = 0; c < matrix.cols(); ++c) {
        Complex s = 0.0;
        for (int r = 0; r < matrix.rows(); ++r) s += row[r] * matrix(r, c);
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("Superoperator::apply: dimension mismatch");
    return vec_to_matrix(matrix * matrix_to_vec(rho), dim);
}

double effective_rabi(const std::vector<DriveComponent>& components) {
    Complex sum = 0.0;
    for (const auto& c : components) {
        if (!std::isfinite(c.amplitude) || !std::isfinite(c.phase))
            throw std::invalid_argument("effective_rabi: non-finite component");
        sum += c.amplitude * std::exp(kI * c.phase);
    }
    return std::abs(sum);
}

HamiltonianParts rotating_hamiltonian_parts(const SystemParams& p) {
    p.validate();
    ComplexMatrix bare(4, 4);
    bare += lift_to_pair(pauli_z(), 0) * Complex(p.delta1 / 2.0);
    bare += lift_to_pair(pauli_z(), 1) * Complex(p.delta2 / 2.0);
    bare += lift_to_pair(pauli_x(), 0) * Complex(p.omega1 / 2.0);
    bare += lift_to_pair(pauli_x(), 1) * Complex(p.omega2 / 2.0);

    ComplexMatrix interaction = kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y());
    interaction *= Complex(p.coupling / 2.0);
    return {std::move(bare), std::move(interaction)};
}

ComplexMatrix rotating_hamiltonian(const SystemParams& p) {
    auto parts = rotating_hamiltonian_parts(p);
    return parts.bare + parts.interaction;
}

ComplexMatrix hamiltonian_superoperator(const ComplexMatrix& h) {
    const int d = h.rows();
    const ComplexMatrix id = ComplexMatrix::identity(d);
    ComplexMatrix s = kron(id, h) - kron(h.transpose(), id);
    s *= -kI;
    return s;
}

ComplexMatrix dissipator_superoperator(const ComplexMatrix& jump) {
    const int d = jump.rows();
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix jdj = jump.adjoint() * jump;
    ComplexMatrix s = kron(jump.conjugate(), jump);
    s -= kron(id, jdj) * Complex(0.5);
    s -= kron(jdj.transpose(), id) * Complex(0.5);
    return s;
}

Superoperator liouvillian(const SystemParams& p, ReservoirModel model) {
    p.validate();
    ComplexMatrix m = hamiltonian_superoperator(rotating_hamiltonian(p));
    if (model == ReservoirModel::Common) {
        if (p.gamma1 != p.gamma2)
            throw std::invalid_argument("liouvillian: common reservoir requires equal gammas");
        const ComplexMatrix collective =
            lift_to_pair(sigma_minus(), 0) + lift_to_pair(sigma_minus(), 1);
        m += dissipator_superoperator(collective) * Complex(p.gamma1);
    } else {
        m += dissipator_superoperator(lift_to_pair(sigma_minus(), 0)) * Complex(p.gamma1);
        m += dissipator_superoperator(lift_to_pair(sigma_minus(), 1)) * Complex(p.gamma2);
    }
    return Superoperator{4, std::move(m)};
}

Superoperator single_qubit_liouvillian(double omega, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("single_qubit_liouvillian: negative gamma");
    ComplexMatrix h = pauli_x();
    h *= Complex(omega / 2.0);
    ComplexMatrix m = hamiltonian_superoperator(h);
    m += dissipator_superoperator(sigma_minus()) * Complex(gamma);
    return Superoperator{2, std::move(m)};
}

SteadyStateResult steady_state(const Superoperator& l) {
    const auto trace = Superoperator::trace_row(l.dim);
    const ConstrainedNullResult sol = solve_constrained_null(l.matrix, trace, 1.0);

    std::vector<Complex> x = sol.solution;
    if (!sol.unique) {
        // Degenerate kernel: take the orthogonal projection of the maximally
        // mixed state instead, a physical representative of the manifold.
        const int d2 = l.dim * l.dim;
        std::vector<Complex> seed(d2, 0.0);
        for (int i = 0; i < l.dim; ++i)
            seed[static_cast<size_t>(i) * l.dim + i] = 1.0 / l.dim;
        std::vector<Complex> proj(d2, 0.0);
        for (const auto& basis_vec : sol.null_basis) {
            Complex w = 0.0;
            for (int i = 0; i < d2; ++i) w += std::conj(basis_vec[i]) * seed[i];
            for (int i = 0; i < d2; ++i) proj[i] += w * basis_vec[i];
        }
        Complex tr = 0.0;
        for (int i = 0; i < l.dim; ++i) tr += proj[static_cast<size_t>(i) * l.dim + i];
        if (std::abs(tr) > 1e-9) {
            for (auto& z : proj) z /= tr;
            x = std::move(proj);
        }
    }

    ComplexMatrix rho = vec_to_matrix(x, l.dim);
    // The exact kernel element is Hermitian with unit trace; fold numerical
    // asymmetry and pin the trace.
    ComplexMatrix herm(l.dim, l.dim);
    for (int r = 0; r < l.dim; ++r)
        for (int c = 0; c < l.dim; ++c)
            herm(r, c) = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
    herm *= Complex(1.0) / herm.trace();

    double residual = 0.0;
    {
        const auto lv = l.matrix * matrix_to_vec(herm);
        double s = 0.0;
        for (const auto& z : lv) s += std::norm(z);
        residual = std::sqrt(s);
    }

    std::vector<int> dims;
    for (int d = l.dim; d > 1; d /= 2) {
        if (d % 2 != 0) {
            dims = {l.dim};
            break;
        }
        dims.push_back(2);
    }
    if (dims.empty()) dims = {l.dim};

    SteadyStateResult out{DensityMatrix::from_matrix(std::move(dims), std::move(herm)),
                          sol.null_dim, residual};
    return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,   0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

using Vec = std::vector<Complex>;

void axpy(Vec& y, double a, const Vec& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

} // namespace

Trajectory evolve(const DensityMatrix& rho0, const Superoperator& l, double t_final,
                  int sample_count, double rel_tol, bool hermitize_samples) {
    if (rho0.dim() != l.dim) throw std::invalid_argument("evolve: dimension mismatch");
    if (t_final <= 0.0) throw std::invalid_argument("evolve: t_final must be positive");
    if (sample_count < 2) throw std::invalid_argument("evolve: need at least two samples");
    if (rel_tol <= 0.0) throw std::invalid_argument("evolve: rel_tol must be positive");

    const int n = l.dim * l.dim;
    const double atol = 1e-14;

    auto deriv = [&](const Vec& y) { return l.matrix * y; };

    Vec y = matrix_to_vec(rho0.matrix());
    Vec f = deriv(y);
    double t = 0.0;

    const double lnorm = std::max(l.matrix.max_row_sum_norm(), 1e-12);
    double h = std::min(t_final, 0.01 / lnorm);
    double err_prev = 1.0;

    Trajectory traj;
    traj.reserve(sample_count);
    const double dt_sample = t_final / (sample_count - 1);
    int next_sample = 0;

    auto emit = [&](double ts, const Vec& ys) {
        ComplexMatrix m = vec_to_matrix(ys, l.dim);
        if (hermitize_samples) {
            ComplexMatrix sym(l.dim, l.dim);
            for (int r = 0; r < l.dim; ++r)
                for (int c = 0; c < l.dim; ++c)
                    sym(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m = std::move(sym);
        }
        try {
            traj.emplace_back(ts, DensityMatrix::from_matrix(rho0.dims(), std::move(m)));
        } catch (const std::invalid_argument& e) {
            // Loose tolerances let integrator noise breach the state
            // invariants; surface it rather than repairing silently.
            std::ostringstream msg;
            msg << "evolve: sample at t = " << ts << " violates state invariants (" << e.what()
                << "); tighten rel_tol or enable hermitize_samples";
            throw std::runtime_error(msg.str());
        }
    };

    emit(0.0, y);
    next_sample = 1;

    Vec k[7];
    while (t < t_final) {
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw std::runtime_error("evolve: step size underflow");
        if (t + h > t_final) h = t_final - t;

        k[0] = f;
        Vec ystage(n);
        for (int s = 1; s < 7; ++s) {
            ystage = y;
            for (int j = 0; j < s; ++j)
                if (kA[s][j] != 0.0) axpy(ystage, h * kA[s][j], k[j]);
            k[s] = deriv(ystage);
        }
        // kB5 matches row a[6], so ystage already holds the fifth-order result.
        const Vec& ynew = ystage;
        const Vec& fnew = k[6];

        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex e = 0.0;
            for (int s = 0; s < 7; ++s) e += (kB5[s] - kB4[s]) * k[s][i];
            e *= h;
            const double sc = atol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += std::norm(e) / (sc * sc);
        }
        err = std::sqrt(err / n);

        if (err <= 1.0) {
            // interpolate any samples inside (t, t+h]
            while (next_sample < sample_count) {
                const double ts = next_sample * dt_sample;
                if (ts > t + h + 1e-14 * t_final) break;
                const double th = std::clamp((ts - t) / h, 0.0, 1.0);
                const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
                const double h10 = th * (1 - th) * (1 - th);
                const double h01 = th * th * (3 - 2 * th);
                const double h11 = th * th * (th - 1);
                Vec ys(n);
                for (int i = 0; i < n; ++i)
                    ys[i] = h00 * y[i] + (h10 * h) * f[i] + h01 * ynew[i] + (h11 * h) * fnew[i];
                emit(ts, ys);
                ++next_sample;
            }
            t += h;
            y = ynew;
            f = fnew;

            const double fac =
                0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            h *= std::clamp(fac, 0.2, 6.0);
            err_prev = std::max(err, 1e-10);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        }
    }
    // Guard against a lost final sample from floating-point drift.
    while (next_sample < sample_count) {
        emit(next_sample * dt_sample, y);
        ++next_sample;
    }
    return traj;
}

} // namespace entlab
