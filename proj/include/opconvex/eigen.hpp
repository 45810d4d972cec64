// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "opconvex/hermitian.hpp"
#include "opconvex/matrix.hpp"

namespace opconvex {

// Stopping control for the Jacobi eigensolver. The sweep terminates when the
// off-diagonal Frobenius norm falls below threshold_factor * ||H||_F.
// tightened() is used to re-verify counterexample witnesses at higher
// precision than the default search.
struct JacobiOptions {
    int max_sweeps = 100;
    double threshold_factor = 1e-14;

    static JacobiOptions tightened() { return JacobiOptions{200, 1e-15}; }
};

// Eigenvalues ascending; unitary holds the matching eigenvectors as columns,
// so H = U diag(eigenvalues) U*.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix unitary;

    std::size_t dim() const { return eigenvalues.size(); }
    double lambda_min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double lambda_max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace detail

// Cyclic Jacobi eigensolver for complex Hermitian matrices. Each (p,q)
// rotation factors out the phase of the pivot a_pq and applies the classical
// two-sided rotation of the resulting real 2x2 block; the accumulated
// transform is exactly unitary up to rounding. Unconditionally stable at the
// dimensions this library targets (n <= 64).
inline SpectralDecomposition eig_hermitian(const HermitianMatrix& h,
                                           const JacobiOptions& opts = {}) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm_h = frobenius_norm(a);
    const double tol = opts.threshold_factor * norm_h;
    // Pivots this small cannot keep the off-diagonal norm above tol on their
    // own; rotating on them is wasted work.
    const double skip = n > 0 ? tol / (10.0 * static_cast<double>(n) * static_cast<double>(n))
                              : 0.0;

    bool converged = (n <= 1) || norm_h == 0.0;
    for (int sweep = 0; !converged && sweep < opts.max_sweeps; ++sweep) {
        if (detail::offdiag_frobenius(a) <= tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cxdouble g = a(p, q);
                const double absg = std::abs(g);
                if (absg <= skip) continue;

                const cxdouble w = g / absg; // pivot phase
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double tau = (beta - alpha) / (2.0 * absg);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cxdouble wc = w * c;
                const cxdouble ws = w * s;

                // Rotated 2x2 block, set exactly.
                a(p, p) = cxdouble{alpha - t * absg, 0.0};
                a(q, q) = cxdouble{beta + t * absg, 0.0};
                a(p, q) = cxdouble{0.0, 0.0};
                a(q, p) = cxdouble{0.0, 0.0};

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cxdouble akp = a(k, p);
                    const cxdouble akq = a(k, q);
                    const cxdouble nkp = wc * akp - s * akq;
                    const cxdouble nkq = ws * akp + c * akq;
                    a(k, p) = nkp;
                    a(p, k) = std::conj(nkp);
                    a(k, q) = nkq;
                    a(q, k) = std::conj(nkq);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cxdouble vkp = v(k, p);
                    const cxdouble vkq = v(k, q);
                    v(k, p) = wc * vkp - s * vkq;
                    v(k, q) = ws * vkp + c * vkq;
                }
            }
        }
    }

    if (!converged && detail::offdiag_frobenius(a) > tol)
        throw ConvergenceError(
            "eig_hermitian: Jacobi sweep cap reached before off-diagonal norm fell "
            "below threshold");

    // Sort ascending; stable so ties keep a deterministic column order.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    SpectralDecomposition sd;
    sd.eigenvalues.resize(n);
    sd.unitary = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sd.eigenvalues[j] = a(idx[j], idx[j]).real();
        for (std::size_t i = 0; i < n; ++i) sd.unitary(i, j) = v(i, idx[j]);
    }
    return sd;
}

// U diag(values) U* for arbitrary real values on the same eigenbasis.
inline ComplexMatrix rebuild_from_basis(const SpectralDecomposition& sd,
                                        const std::vector<double>& values) {
    const std::size_t n = sd.dim();
    if (values.size() != n)
        throw DimensionError("rebuild_from_basis: value count does not match dimension");
    ComplexMatrix scaled = sd.unitary;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= values[j];
    return scaled * adjoint(sd.unitary);
}

inline ComplexMatrix reconstruct(const SpectralDecomposition& sd) {
    return rebuild_from_basis(sd, sd.eigenvalues);
}

// Spectral norm of a Hermitian matrix (largest absolute eigenvalue).
inline double spectral_norm(const HermitianMatrix& h, const JacobiOptions& opts = {}) {
    const SpectralDecomposition sd = eig_hermitian(h, opts);
    return std::max(std::abs(sd.lambda_min()), std::abs(sd.lambda_max()));
}

} // namespace opconvex
