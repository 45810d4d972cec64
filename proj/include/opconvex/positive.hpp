// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>
#include <utility>

#include "opconvex/eigen.hpp"
#include "opconvex/hermitian.hpp"
#include "opconvex/tolerance.hpp"

namespace opconvex {

// Strictly positive Hermitian matrix. Construction eigendecomposes once to
// certify lambda_min >= floor and keeps the decomposition, which the
// perspective layer reads directly.
class PositiveMatrix {
public:
    explicit PositiveMatrix(const HermitianMatrix& h, double floor = kDomFloor,
                            const JacobiOptions& opts = {})
        : h_(h), spec_(eig_hermitian(h, opts)) {
        check_floor(floor);
    }

    // For callers that already hold the decomposition of h (e.g. samplers
    // that inspected the spectrum before accepting a draw).
    PositiveMatrix(HermitianMatrix h, SpectralDecomposition spec, double floor = kDomFloor)
        : h_(std::move(h)), spec_(std::move(spec)) {
        if (spec_.dim() != h_.dim())
            throw DimensionError("PositiveMatrix: decomposition dimension mismatch");
        check_floor(floor);
    }

    std::size_t dim() const { return h_.dim(); }
    const HermitianMatrix& hermitian() const { return h_; }
    const ComplexMatrix& matrix() const { return h_.matrix(); }
    const SpectralDecomposition& spectral() const { return spec_; }
    double lambda_min() const { return spec_.lambda_min(); }
    double trace_real() const { return h_.trace_real(); }

private:
    void check_floor(double floor) const {
        if (spec_.lambda_min() < floor)
            throw DomainError("PositiveMatrix: not strictly positive, lambda_min = " +
                              std::to_string(spec_.lambda_min()) + " < floor " +
                              std::to_string(floor));
    }

    HermitianMatrix h_;
    SpectralDecomposition spec_;
};

// c*X + (1-c)*Y for c in [0,1]; stays strictly positive since both inputs are.
inline PositiveMatrix mix(const PositiveMatrix& x, const PositiveMatrix& y, double c) {
    if (c < 0.0 || c > 1.0)
        throw ParameterError("mix: weight c must lie in [0,1]");
    return PositiveMatrix(c * x.hermitian() + (1.0 - c) * y.hermitian());
}

} // namespace opconvex
