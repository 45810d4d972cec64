// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <vector>

#include "opconvex/eigen.hpp"
#include "opconvex/hermitian.hpp"
#include "opconvex/scalar_function.hpp"
#include "opconvex/tolerance.hpp"

namespace opconvex {

// f applied entrywise to the eigenvalues of an already-computed spectral
// decomposition: U f(Lambda) U*.
inline HermitianMatrix matrix_function_from(const ScalarFunctionSpec& f,
                                            const SpectralDecomposition& sd,
                                            double operand_scale,
                                            const ToleranceConfig& cfg = {}) {
    std::vector<double> vals(sd.dim());
    for (std::size_t i = 0; i < sd.dim(); ++i) {
        const double lambda =
            project_into_domain(f, sd.eigenvalues[i], cfg.dom_floor, operand_scale);
        vals[i] = eval_scalar(f, lambda);
    }
    return hermitize(rebuild_from_basis(sd, vals));
}

// Matrix functional calculus f(H) by spectral theory.
inline HermitianMatrix matrix_function(const ScalarFunctionSpec& f, const HermitianMatrix& h,
                                       const ToleranceConfig& cfg = {},
                                       const JacobiOptions& eig_opts = {}) {
    const SpectralDecomposition sd = eig_hermitian(h, eig_opts);
    return matrix_function_from(f, sd, frobenius_norm(h.matrix()), cfg);
}

} // namespace opconvex
