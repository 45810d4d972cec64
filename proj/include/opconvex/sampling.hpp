// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <utility>

#include "opconvex/eigen.hpp"
#include "opconvex/hermitian.hpp"
#include "opconvex/matrix.hpp"
#include "opconvex/positive.hpp"
#include "opconvex/rng.hpp"

namespace opconvex {

// Positive draws are resampled until lambda_min clears this floor, keeping
// every sampled matrix comfortably inside "strictly positive".
inline constexpr double kSamplerFloor = 1e-8;

// Entries are drawn column-major (column index outer, row index inner); the
// fill order is part of the reproducibility contract.
inline ComplexMatrix sample_gaussian(std::size_t rows, std::size_t cols,
                                     Xoshiro256PlusPlus& rng) {
    ComplexMatrix g(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
    return g;
}

// GUE-style draw: scale * (G + G*)/2 with iid standard complex Gaussian G.
inline HermitianMatrix sample_hermitian(std::size_t n, double scale,
                                        Xoshiro256PlusPlus& rng) {
    if (n < 1) throw ParameterError("sample_hermitian: n must be >= 1");
    if (!(scale > 0.0)) throw ParameterError("sample_hermitian: scale must be > 0");
    return scale * hermitize(sample_gaussian(n, n, rng));
}

// Wishart draw G G*, resampled while lambda_min < floor.
inline PositiveMatrix sample_positive(std::size_t n, Xoshiro256PlusPlus& rng,
                                      double floor = kSamplerFloor) {
    if (n < 1) throw ParameterError("sample_positive: n must be >= 1");
    for (int attempt = 0; attempt < 256; ++attempt) {
        const ComplexMatrix g = sample_gaussian(n, n, rng);
        HermitianMatrix w = hermitize(g * adjoint(g));
        SpectralDecomposition sd = eig_hermitian(w);
        if (sd.lambda_min() >= floor)
            return PositiveMatrix(std::move(w), std::move(sd), floor);
    }
    throw ConvergenceError("sample_positive: resample cap hit without clearing the "
                           "positivity floor");
}

// Trace-normalized Wishart draw; the floor applies to the normalized matrix.
inline PositiveMatrix sample_density(std::size_t n, Xoshiro256PlusPlus& rng,
                                     double floor = kSamplerFloor) {
    if (n < 1) throw ParameterError("sample_density: n must be >= 1");
    for (int attempt = 0; attempt < 256; ++attempt) {
        const ComplexMatrix g = sample_gaussian(n, n, rng);
        HermitianMatrix w = hermitize(g * adjoint(g));
        w = (1.0 / w.trace_real()) * w;
        SpectralDecomposition sd = eig_hermitian(w);
        if (sd.lambda_min() >= floor)
            return PositiveMatrix(std::move(w), std::move(sd), floor);
    }
    throw ConvergenceError("sample_density: resample cap hit without clearing the "
                           "positivity floor");
}

namespace detail {

// Modified Gram-Schmidt with one re-orthogonalization pass. Gaussian columns
// are almost surely well-conditioned, and the second pass pushes
// ||Q*Q - I||_F to rounding level.
inline ComplexMatrix orthonormalize_columns(ComplexMatrix a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                cxdouble proj{0.0, 0.0};
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(a(i, k)) * a(i, j);
                for (std::size_t i = 0; i < m; ++i) a(i, j) -= proj * a(i, k);
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < m; ++i) norm += std::norm(a(i, j));
            norm = std::sqrt(norm);
            const double inv = 1.0 / norm;
            for (std::size_t i = 0; i < m; ++i) a(i, j) *= inv;
        }
    }
    return a;
}

} // namespace detail

// Haar-style random unitary: orthonormalized square Gaussian.
inline ComplexMatrix sample_unitary(std::size_t n, Xoshiro256PlusPlus& rng) {
    if (n < 1) throw ParameterError("sample_unitary: n must be >= 1");
    return detail::orthonormalize_columns(sample_gaussian(n, n, rng));
}

// QR-orthonormalize a 2n x n Gaussian block; the top and bottom n x n blocks
// then satisfy A*A + B*B = I to rounding.
inline std::pair<ComplexMatrix, ComplexMatrix> sample_isometric_pair(
    std::size_t n, Xoshiro256PlusPlus& rng) {
    if (n < 1) throw ParameterError("sample_isometric_pair: n must be >= 1");
    const ComplexMatrix q = detail::orthonormalize_columns(sample_gaussian(2 * n, n, rng));
    ComplexMatrix a(n, n), b(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            a(i, j) = q(i, j);
            b(i, j) = q(n + i, j);
        }
    return {a, b};
}

// Random contraction: a Gaussian draw with singular values clipped to
// [0, 1]. The clipping is applied through the eigenbasis of G*G, so no
// near-zero singular value is ever divided by.
inline ComplexMatrix sample_contraction(std::size_t n, Xoshiro256PlusPlus& rng) {
    if (n < 1) throw ParameterError("sample_contraction: n must be >= 1");
    const ComplexMatrix g = sample_gaussian(n, n, rng);
    const SpectralDecomposition sd = eig_hermitian(hermitize(adjoint(g) * g));
    std::vector<double> shrink(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double sigma = std::sqrt(std::max(sd.eigenvalues[k], 0.0));
        shrink[k] = sigma <= 1.0 ? 1.0 : 1.0 / sigma;
    }
    return g * rebuild_from_basis(sd, shrink);
}

// Isometric pair right-multiplied by a random contraction C, so that
// A*A + B*B = C*C is Loewner-below the identity.
inline std::pair<ComplexMatrix, ComplexMatrix> sample_subisometric_pair(
    std::size_t n, Xoshiro256PlusPlus& rng) {
    auto [a, b] = sample_isometric_pair(n, rng);
    const ComplexMatrix c = sample_contraction(n, rng);
    return {a * c, b * c};
}

// U diag(exponentially spaced values in [lo, hi]) U* with Haar-style U.
// Spread spectra expose quartic/exp convexity violations far faster than
// Gaussian spectra.
inline HermitianMatrix sample_spread_hermitian(std::size_t n, double lo, double hi,
                                               Xoshiro256PlusPlus& rng) {
    if (n < 1) throw ParameterError("sample_spread_hermitian: n must be >= 1");
    if (!(lo > 0.0 && hi >= lo))
        throw ParameterError("sample_spread_hermitian: need 0 < lo <= hi");
    const ComplexMatrix u = sample_unitary(n, rng);
    std::vector<double> vals(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double frac = n == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(n - 1);
        vals[k] = std::exp(std::log(lo) + frac * (std::log(hi) - std::log(lo)));
    }
    ComplexMatrix scaled = u;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= vals[j];
    return hermitize(scaled * adjoint(u));
}

} // namespace opconvex
