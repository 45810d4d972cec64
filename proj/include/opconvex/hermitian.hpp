// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "opconvex/matrix.hpp"

namespace opconvex {

// Construction tolerance: || H - H* ||_F <= kHermitianTol * (1 + ||H||_F).
inline constexpr double kHermitianTol = 1e-12;

class HermitianMatrix;
HermitianMatrix hermitize(const ComplexMatrix& m);

// Square complex matrix certified Hermitian. Construction validates the
// relative asymmetry bound and then stores the exact Hermitian part, so the
// stored entries satisfy a(i,j) == conj(a(j,i)) bit-for-bit.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& m) {
        if (!m.is_square())
            throw DimensionError("HermitianMatrix: matrix is not square");
        if (!m.all_finite())
            throw DomainError("HermitianMatrix: non-finite entries");
        const double asym = frobenius_norm(m - adjoint(m));
        const double bound = kHermitianTol * (1.0 + frobenius_norm(m));
        if (asym > bound)
            throw PreconditionError(
                "HermitianMatrix: asymmetry ||H - H*||_F = " + std::to_string(asym) +
                " exceeds " + std::to_string(bound));
        m_ = symmetric_part(m);
    }

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    const cxdouble& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    double trace_real() const { return trace(m_).real(); }

    friend HermitianMatrix hermitize(const ComplexMatrix& m);
    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

private:
    struct Trusted {};
    HermitianMatrix(Trusted, ComplexMatrix&& m) : m_(std::move(m)) {}

    // (M + M*)/2 computed entrywise; the result is Hermitian exactly in
    // floating point (addition is commutative, diagonal imaginary parts
    // cancel to zero).
    static ComplexMatrix symmetric_part(const ComplexMatrix& m) {
        const std::size_t n = m.rows();
        ComplexMatrix h(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            h(j, j) = cxdouble{m(j, j).real(), 0.0};
            for (std::size_t i = j + 1; i < n; ++i) {
                const cxdouble v = (m(i, j) + std::conj(m(j, i))) * 0.5;
                h(i, j) = v;
                h(j, i) = std::conj(v);
            }
        }
        return h;
    }

    ComplexMatrix m_;
};

// (M + M*)/2 of an arbitrary square matrix.
inline HermitianMatrix hermitize(const ComplexMatrix& m) {
    if (!m.is_square())
        throw DimensionError("hermitize: matrix is not square");
    if (!m.all_finite())
        throw DomainError("hermitize: non-finite entries");
    return HermitianMatrix(HermitianMatrix::Trusted{},
                           HermitianMatrix::symmetric_part(m));
}

// Sum, difference and real scaling of Hermitian matrices stay exactly
// Hermitian entrywise, so no re-validation is needed.
inline HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, a.matrix() + b.matrix());
}

inline HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, a.matrix() - b.matrix());
}

inline HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, a.matrix() * s);
}

// C* H C, re-symmetrized to absorb rounding.
inline HermitianMatrix conjugate_with(const HermitianMatrix& h, const ComplexMatrix& c) {
    return hermitize(adjoint(c) * h.matrix() * c);
}

} // namespace opconvex
