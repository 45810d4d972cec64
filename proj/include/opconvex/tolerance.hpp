// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>

#include "opconvex/errors.hpp"

namespace opconvex {

// Domain floor: eigenvalues below this are not accepted as "strictly
// positive", and scalars this close to an open domain endpoint are rejected.
inline constexpr double kDomFloor = 1e-12;

// All Loewner and identity tolerances are relative; each check scales them by
// (1 + operand norms).
struct ToleranceConfig {
    double psd_tol = 1e-9;    // Loewner-order checks
    double eq_tol = 1e-10;    // identity / dual-route cross-checks
    double dom_floor = kDomFloor;

    void validate() const {
        if (!(psd_tol > 0.0 && eq_tol > 0.0 && dom_floor > 0.0))
            throw ConfigError("ToleranceConfig: tolerances must be strictly positive");
        if (!(dom_floor < eq_tol && eq_tol <= psd_tol))
            throw ConfigError(
                "ToleranceConfig: required ordering dom_floor < eq_tol <= psd_tol "
                "is violated");
    }
};

} // namespace opconvex
