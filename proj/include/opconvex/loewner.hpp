// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>

#include "opconvex/eigen.hpp"
#include "opconvex/hermitian.hpp"
#include "opconvex/tolerance.hpp"

namespace opconvex {

// Outcome of one inequality check. For Loewner checks the margin is
// lambda_min(RHS - LHS); for scalar checks it is RHS - LHS. Negative margins
// within psd_tol * scale still count as holding.
struct InequalityReport {
    std::string kind;
    double margin = 0.0;
    bool holds = false;
    double scale = 0.0;
};

// A <= B in the Loewner order, up to a relative tolerance scaled by the
// operand spectral norms.
inline InequalityReport loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                                    const ToleranceConfig& cfg = {},
                                    const JacobiOptions& eig_opts = {}) {
    if (a.dim() != b.dim())
        throw DimensionError("loewner_leq: dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    InequalityReport r;
    r.kind = "loewner_leq";
    r.margin = eig_hermitian(b - a, eig_opts).lambda_min();
    r.scale = 1.0 + spectral_norm(a, eig_opts) + spectral_norm(b, eig_opts);
    r.holds = r.margin >= -cfg.psd_tol * r.scale;
    return r;
}

} // namespace opconvex
