// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "opconvex/errors.hpp"
#include "opconvex/scalar_function.hpp"

namespace opconvex {

// Finite probability measure with strictly positive weights. These are the
// commutative baselines the matrix functionals are cross-checked against.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> entries) : p_(std::move(entries)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (!(p_[i] > 0.0))
                throw DomainError("ProbabilityVector: entry " + std::to_string(i) +
                                  " = " + std::to_string(p_[i]) + " is not > 0");
            sum += p_[i];
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw DomainError("ProbabilityVector: entries sum to " + std::to_string(sum) +
                              ", not 1 within 1e-12");
    }

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& entries() const { return p_; }

private:
    std::vector<double> p_;
};

// Classical perspective g(x,t) = f(x/t) * t for t > 0.
inline double classical_perspective(const ScalarFunctionSpec& f, double x, double t) {
    if (!(t > 0.0))
        throw DomainError("classical_perspective: t = " + std::to_string(t) +
                          " must be > 0");
    return eval_scalar(f, x / t) * t;
}

// H(p) = -sum p_i ln p_i, in nats.
inline double classical_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) h -= p[i] * std::log(p[i]);
    return h;
}

// sum_i p_i ln p_i - p_i ln q_i, the divergence of p from q (p is the first
// argument), in nats.
inline double classical_relative_entropy(const ProbabilityVector& p,
                                         const ProbabilityVector& q) {
    if (p.size() != q.size())
        throw DimensionError("classical_relative_entropy: length mismatch (" +
                             std::to_string(p.size()) + " vs " + std::to_string(q.size()) +
                             ")");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) d += p[i] * (std::log(p[i]) - std::log(q[i]));
    return d;
}

} // namespace opconvex
