// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace opconvex {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An argument (scalar or matrix spectrum) falls outside a function's domain,
// or a matrix fails a positivity requirement.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Operands have incompatible shapes.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A numeric parameter is outside its admissible range (e.g. an exponent).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// A structural precondition of a checker is violated (e.g. the pair A, B is
// not isometric, or f(0) > 0 where f(0) <= 0 is required).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// An iterative kernel failed to reach its stopping criterion.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Bad run configuration: unknown identifier, zero trials, bad tolerances.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// The denominator function h of an extended perspective is not strictly
// positive on the spectrum it is applied to.
class NonPositiveHError : public Error {
public:
    explicit NonPositiveHError(const std::string& msg) : Error(msg) {}
};

// File / serialization problems in the CLI layer.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace opconvex
