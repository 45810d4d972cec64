// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "opconvex/errors.hpp"

namespace opconvex {

using cxdouble = std::complex<double>;

// Dense complex matrix with column-major storage. Column-major makes the
// column-stacking vectorization used by the superoperator layer a plain copy
// of the underlying buffer.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cxdouble{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    // Row-major initializer, convenient for literal matrices in tests and IO.
    static ComplexMatrix from_rows(
        std::initializer_list<std::initializer_list<cxdouble>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        ComplexMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c)
                throw DimensionError("from_rows: ragged row in matrix literal");
            std::size_t j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        if (!m.all_finite())
            throw DomainError("from_rows: non-finite entry in matrix literal");
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cxdouble& operator()(std::size_t i, std::size_t j) { return a_[j * rows_ + i]; }
    const cxdouble& operator()(std::size_t i, std::size_t j) const {
        return a_[j * rows_ + i];
    }

    // Raw column-major buffer; used by vec().
    const std::vector<cxdouble>& data() const { return a_; }
    std::vector<cxdouble>& data() { return a_; }

    bool all_finite() const {
        for (const auto& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxdouble> a_;
};

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                               const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch (" +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()) + ")");
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = a.data()[k] + b.data()[k];
    return c;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = a.data()[k] - b.data()[k];
    return c;
}

inline ComplexMatrix operator-(const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = -a.data()[k];
    return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, cxdouble s) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = a.data()[k] * s;
    return c;
}

inline ComplexMatrix operator*(cxdouble s, const ComplexMatrix& a) { return a * s; }
inline ComplexMatrix operator*(const ComplexMatrix& a, double s) { return a * cxdouble(s, 0.0); }
inline ComplexMatrix operator*(double s, const ComplexMatrix& a) { return a * cxdouble(s, 0.0); }

// Matrix product. The accumulation order over the inner index is fixed
// (ascending), so results are bit-reproducible.
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("operator*: inner dimensions differ (" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const cxdouble blj = b(l, j);
            if (blj == cxdouble{0.0, 0.0}) continue;
            for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, l) * blj;
        }
    return c;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) c(j, i) = std::conj(a(i, j));
    return c;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) c(j, i) = a(i, j);
    return c;
}

inline ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = std::conj(a.data()[k]);
    return c;
}

inline cxdouble trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("trace: matrix is not square");
    cxdouble t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return frobenius_norm(a - b);
}

// Kronecker product, (A kron B)((ia*rB+ib),(ja*cB+jb)) = A(ia,ja)*B(ib,jb).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
        for (std::size_t ia = 0; ia < a.rows(); ++ia) {
            const cxdouble v = a(ia, ja);
            if (v == cxdouble{0.0, 0.0}) continue;
            for (std::size_t jb = 0; jb < b.cols(); ++jb)
                for (std::size_t ib = 0; ib < b.rows(); ++ib)
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
        }
    return c;
}

// Hilbert-Schmidt inner product <X,Y> = Trace(X Y*).
inline cxdouble hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_shape(x, y, "hs_inner");
    cxdouble s{0.0, 0.0};
    for (std::size_t k = 0; k < x.data().size(); ++k)
        s += x.data()[k] * std::conj(y.data()[k]);
    return s;
}

} // namespace opconvex
