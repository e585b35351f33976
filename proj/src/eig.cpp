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

#include "entlab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace entlab {

namespace {

double vec_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

HermitianEig eig_hermitian(const ComplexMatrix& h, double herm_tol) {
    if (!h.is_square()) throw std::invalid_argument("eig_hermitian: matrix not square");
    const double defect = h.hermiticity_defect();
    if (defect > herm_tol * std::max(1.0, h.max_abs())) {
        std::ostringstream msg;
        msg << "eig_hermitian: input not Hermitian, defect " << defect;
        throw std::invalid_argument(msg.str());
    }

    const int n = h.rows();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        off = std::sqrt(2.0 * off);
        if (off <= 1e-15 * scale) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double ag = std::abs(g);
                if (ag <= 1e-18 * scale) continue;

                // Unitary plane rotation R = [[c, s], [-conj(s), c]] with
                // real c and s = t*c*(g/|g|) chosen to zero a(p,q).
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double zeta = (beta - alpha) / (2.0 * ag);
                const double sgn = (zeta >= 0.0) ? 1.0 : -1.0;
                const double t = 1.0 / (zeta + sgn * std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = (t * c) * (g / ag);
                const Complex sc = std::conj(s);

                // columns: A <- A R
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - sc * akq;
                    a(k, q) = s * akp + c * akq;
                }
                // rows: A <- R^dag A
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = sc * apk + c * aqk;
                }
                // accumulate eigenvectors: V <- V R
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - sc * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });

    HermitianEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

namespace {

// Householder reduction to upper Hessenberg form, in place.
void hessenberg(ComplexMatrix& a) {
    const int n = a.rows();
    for (int k = 0; k < n - 2; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(a(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm <= 1e-300) continue;

        Complex a0 = a(k + 1, k);
        const double a0abs = std::abs(a0);
        const Complex phase = (a0abs > 0.0) ? a0 / a0abs : Complex(1.0);
        const Complex alpha = -phase * colnorm;

        std::vector<Complex> u(n, 0.0);
        u[k + 1] = a0 - alpha;
        for (int i = k + 2; i < n; ++i) u[i] = a(i, k);
        double unorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) unorm2 += std::norm(u[i]);
        if (unorm2 <= 1e-300) continue;

        // A <- (I - 2 u u^dag / |u|^2) A
        for (int c = 0; c < n; ++c) {
            Complex dot = 0.0;
            for (int i = k + 1; i < n; ++i) dot += std::conj(u[i]) * a(i, c);
            dot *= 2.0 / unorm2;
            for (int i = k + 1; i < n; ++i) a(i, c) -= dot * u[i];
        }
        // A <- A (I - 2 u u^dag / |u|^2)
        for (int r = 0; r < n; ++r) {
            Complex dot = 0.0;
            for (int i = k + 1; i < n; ++i) dot += a(r, i) * u[i];
            dot *= 2.0 / unorm2;
            for (int i = k + 1; i < n; ++i) a(r, i) -= dot * std::conj(u[i]);
        }
    }
}

// Eigenvalue of the trailing 2x2 block closest to its bottom-right entry.
Complex wilkinson_shift(const ComplexMatrix& a, int m) {
    const Complex p = a(m - 1, m - 1);
    const Complex q = a(m - 1, m);
    const Complex r = a(m, m - 1);
    const Complex s = a(m, m);
    const Complex tr = p + s;
    const Complex det = p * s - q * r;
    Complex disc = std::sqrt(tr * tr - 4.0 * det);
    Complex l1 = 0.5 * (tr + disc);
    Complex l2 = 0.5 * (tr - disc);
    return (std::abs(l1 - s) < std::abs(l2 - s)) ? l1 : l2;
}

} // namespace

std::vector<Complex> eig_general_small(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("eig_general_small: matrix not square");
    const int n = a.rows();
    if (n > 16) throw std::invalid_argument("eig_general_small: dimension exceeds 16");
    if (n == 0) return {};

    ComplexMatrix h = a;
    hessenberg(h);

    const double scale = std::max(h.max_abs(), 1e-300);
    std::vector<Complex> eigs;
    eigs.reserve(n);

    int m = n - 1; // active block is rows/cols 0..m
    int iter_since_deflation = 0;
    int total_iters = 0;
    const int max_total = 60 * n;

    while (m >= 0) {
        if (m == 0) {
            eigs.push_back(h(0, 0));
            break;
        }
        // deflate small subdiagonals
        int deflated = -1;
        for (int i = m; i >= 1; --i) {
            const double sub = std::abs(h(i, i - 1));
            const double local = std::abs(h(i - 1, i - 1)) + std::abs(h(i, i));
            if (sub <= 1e-16 * std::max(local, scale * 1e-6)) {
                h(i, i - 1) = 0.0;
                if (i == m) deflated = m;
                break;
            }
        }
        if (deflated == m) {
            eigs.push_back(h(m, m));
            --m;
            iter_since_deflation = 0;
            continue;
        }

        if (++total_iters > max_total) {
            throw std::runtime_error("eig_general_small: QR iteration failed to converge");
        }

        Complex shift = wilkinson_shift(h, m);
        if (++iter_since_deflation % 12 == 0) {
            // exceptional shift to break stagnation
            shift = h(m, m) + Complex(1.5 * std::abs(h(m, m - 1)), 0.0);
        }

        // QR step on the active block via Givens rotations.
        struct Givens {
            double c;
            Complex s;
        };
        std::vector<Givens> rots(m);
        for (int i = 0; i < m + 1; ++i) h(i, i) -= shift;
        for (int i = 0; i < m; ++i) {
            const Complex x = h(i, i);
            const Complex y = h(i + 1, i);
            const double r = std::sqrt(std::norm(x) + std::norm(y));
            Givens g;
            if (r <= 1e-300) {
                g.c = 1.0;
                g.s = 0.0;
            } else {
                g.c = std::abs(x) / r;
                const Complex xphase = (std::abs(x) > 0.0) ? x / std::abs(x) : Complex(1.0);
                g.s = std::conj(y) * xphase / r;
            }
            rots[i] = g;
            // apply G from the left to rows i, i+1 (columns i..m)
            for (int cc = i; cc <= m; ++cc) {
                const Complex hi = h(i, cc);
                const Complex hj = h(i + 1, cc);
                h(i, cc) = g.c * hi + g.s * hj;
                h(i + 1, cc) = -std::conj(g.s) * hi + g.c * hj;
            }
        }
        // H <- R Q: apply conjugated rotations from the right
        for (int i = 0; i < m; ++i) {
            const Givens& g = rots[i];
            for (int rr = 0; rr <= std::min(i + 2, m); ++rr) {
                const Complex hi = h(rr, i);
                const Complex hj = h(rr, i + 1);
                h(rr, i) = g.c * hi + std::conj(g.s) * hj;
                h(rr, i + 1) = -g.s * hi + g.c * hj;
            }
        }
        for (int i = 0; i < m + 1; ++i) h(i, i) += shift;
    }

    std::sort(eigs.begin(), eigs.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
    return eigs;
}

namespace {

// LU decomposition with partial pivoting; returns pivot sign, fills lu and perm.
double lu_decompose(ComplexMatrix& lu, std::vector<int>& perm) {
    const int n = lu.rows();
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), 0);
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        const Complex d = lu(k, k);
        if (std::abs(d) <= 1e-300) continue; // singular column; determinant -> 0
        for (int i = k + 1; i < n; ++i) {
            const Complex f = lu(i, k) / d;
            lu(i, k) = f;
            for (int c = k + 1; c < n; ++c) lu(i, c) -= f * lu(k, c);
        }
    }
    return sign;
}

} // namespace

Complex determinant(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
    ComplexMatrix lu = a;
    std::vector<int> perm;
    const double sign = lu_decompose(lu, perm);
    Complex det = sign;
    for (int i = 0; i < a.rows(); ++i) det *= lu(i, i);
    return det;
}

std::vector<Complex> lu_solve(const ComplexMatrix& a, const std::vector<Complex>& b) {
    if (!a.is_square() || static_cast<size_t>(a.rows()) != b.size())
        throw std::invalid_argument("lu_solve: dimension mismatch");
    const int n = a.rows();
    ComplexMatrix lu = a;
    std::vector<int> perm;
    lu_decompose(lu, perm);
    std::vector<Complex> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
        const Complex d = lu(i, i);
        if (std::abs(d) <= 1e-300) throw std::runtime_error("lu_solve: singular matrix");
        x[i] /= d;
    }
    return x;
}

namespace {

struct SingularDecomposition {
    std::vector<double> sigmas; // ascending
    ComplexMatrix right;        // right singular vectors as columns
};

// One-sided Jacobi SVD: orthogonalizes the columns of a copy of the input
// by plane rotations, accumulating them into the right-vector matrix. Small
// singular values come out with absolute error of order eps * ||a||, which
// the Gram-matrix route cannot deliver.
SingularDecomposition svd_small(const ComplexMatrix& a) {
    const int n = a.rows();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Complex dot = 0.0;
                double npp = 0.0;
                double nqq = 0.0;
                for (int r = 0; r < n; ++r) {
                    dot += std::conj(w(r, p)) * w(r, q);
                    npp += std::norm(w(r, p));
                    nqq += std::norm(w(r, q));
                }
                const double ad = std::abs(dot);
                if (ad <= 1e-15 * std::sqrt(npp * nqq) || ad <= 1e-30 * scale * scale)
                    continue;
                rotated = true;

                const double zeta = (nqq - npp) / (2.0 * ad);
                const double sgn = (zeta >= 0.0) ? 1.0 : -1.0;
                const double t = 1.0 / (zeta + sgn * std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = (t * c) * (dot / ad);
                const Complex sc = std::conj(s);

                for (int r = 0; r < n; ++r) {
                    const Complex wp = w(r, p);
                    const Complex wq = w(r, q);
                    w(r, p) = c * wp - sc * wq;
                    w(r, q) = s * wp + c * wq;
                }
                for (int r = 0; r < n; ++r) {
                    const Complex vp = v(r, p);
                    const Complex vq = v(r, q);
                    v(r, p) = c * vp - sc * vq;
                    v(r, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norms(n);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int r = 0; r < n; ++r) s += std::norm(w(r, k));
        norms[k] = std::sqrt(s);
    }
    std::sort(order.begin(), order.end(), [&](int i, int j) { return norms[i] < norms[j]; });

    SingularDecomposition out;
    out.sigmas.resize(n);
    out.right = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.sigmas[k] = norms[order[k]];
        for (int r = 0; r < n; ++r) out.right(r, k) = v(r, order[k]);
    }
    return out;
}

} // namespace

std::vector<double> singular_values(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("singular_values: matrix not square");
    return svd_small(a).sigmas;
}

ConstrainedNullResult solve_constrained_null(const ComplexMatrix& l,
                                             const std::vector<Complex>& constraint_row,
                                             Complex constraint_value) {
    if (!l.is_square()) throw std::invalid_argument("solve_constrained_null: matrix not square");
    const int n = l.rows();
    if (constraint_row.size() != static_cast<size_t>(n))
        throw std::invalid_argument("solve_constrained_null: constraint row size mismatch");
    if (vec_norm(constraint_row) <= 0.0)
        throw std::invalid_argument("solve_constrained_null: constraint row is zero");

    ConstrainedNullResult out;
    out.matrix_norm = l.max_row_sum_norm();

    const SingularDecomposition svd = svd_small(l);
    const double thresh = (out.matrix_norm > 0.0) ? 1e-10 * out.matrix_norm
                                                  : std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        if (svd.sigmas[k] < thresh) {
            std::vector<Complex> v(n);
            for (int r = 0; r < n; ++r) v[r] = svd.right(r, k);
            out.null_basis.push_back(std::move(v));
        }
    }
    out.null_dim = static_cast<int>(out.null_basis.size());
    out.unique = out.null_dim < 2;

    if (out.null_dim >= 1 || out.matrix_norm == 0.0) {
        // The least-squares compromise between ||l.x|| and the constraint is
        // met exactly inside the kernel, so the solution is the least-norm
        // kernel element with constraint_row.x = constraint_value.
        Complex gnorm2 = 0.0;
        std::vector<Complex> g(out.null_basis.size());
        for (size_t k = 0; k < out.null_basis.size(); ++k) {
            Complex dot = 0.0;
            for (int r = 0; r < n; ++r) dot += constraint_row[r] * out.null_basis[k][r];
            g[k] = dot;
            gnorm2 += std::norm(dot);
        }
        if (std::abs(gnorm2) <= 1e-300)
            throw std::runtime_error(
                "solve_constrained_null: constraint unreachable within null space");
        out.solution.assign(n, 0.0);
        for (size_t k = 0; k < out.null_basis.size(); ++k) {
            const Complex w = std::conj(g[k]) * constraint_value / gnorm2;
            for (int r = 0; r < n; ++r) out.solution[r] += w * out.null_basis[k][r];
        }
    } else {
        // No numerical kernel: augmented least squares, normal equations of
        // [l; w c] x = [0; w v] with the constraint row scaled to the
        // matrix norm.
        const double w = std::max(out.matrix_norm, 1.0);
        ComplexMatrix m = l.adjoint() * l;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m(r, c) += (w * w) * std::conj(constraint_row[r]) * constraint_row[c];
        std::vector<Complex> rhs(n);
        for (int r = 0; r < n; ++r)
            rhs[r] = (w * w) * std::conj(constraint_row[r]) * constraint_value;
        out.solution = lu_solve(m, rhs);
    }

    out.residual = vec_norm(l * out.solution);
    return out;
}

} // namespace entlab
