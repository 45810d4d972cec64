// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opconvex/errors.hpp"
#include "opconvex/tolerance.hpp"

namespace opconvex {

// Operator-convexity class. This is trusted catalog metadata, not something
// computed from pointwise values; the jensen module audits it empirically.
enum class OpClass { OperatorConvex, OperatorConcave, NotOperatorConvex, Unclassified };

inline const char* to_string(OpClass c) {
    switch (c) {
        case OpClass::OperatorConvex: return "operator-convex";
        case OpClass::OperatorConcave: return "operator-concave";
        case OpClass::NotOperatorConvex: return "not-operator-convex";
        default: return "unclassified";
    }
}

// Real interval with open/closed endpoint flags; +-infinity for unbounded.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    static Interval reals() { return {}; }
    static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }
    static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }

    bool contains(double x) const {
        if (lo_open ? !(x > lo) : !(x >= lo)) return false;
        if (hi_open ? !(x < hi) : !(x <= hi)) return false;
        return true;
    }

    bool contains_interior(double x) const {
        return (std::isinf(lo) || x > lo) && (std::isinf(hi) || x < hi);
    }

    // Domain of t -> f(t + c), i.e. this interval translated by -c.
    Interval shifted(double c) const {
        Interval r = *this;
        if (!std::isinf(r.lo)) r.lo -= c;
        if (!std::isinf(r.hi)) r.hi -= c;
        return r;
    }

    std::string describe() const {
        auto fmt = [](double v) {
            if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
            return std::to_string(v);
        };
        return std::string(lo_open ? "(" : "[") + fmt(lo) + ", " + fmt(hi) +
               (hi_open ? ")" : "]");
    }
};

// Catalog entry for a scalar function f (or h): a pointwise evaluator plus
// the metadata the matrix layers need. Evaluators are total on the domain,
// including closed endpoints (e.g. x log x evaluates to 0 at x = 0).
struct ScalarFunctionSpec {
    std::string id;     // canonical identifier, e.g. "neg_power:s=0.5"
    std::string name;   // family name, e.g. "neg_power"
    std::map<std::string, double> params;
    Interval domain;
    std::optional<double> value_at_zero; // present iff 0 is in the domain
    OpClass op_class = OpClass::Unclassified;
    std::function<double(double)> evaluator;
};

namespace detail {

// Shortest decimal that round-trips to the same double; used in identifiers.
inline std::string format_param(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace detail

inline double eval_scalar(const ScalarFunctionSpec& f, double x) {
    if (!f.domain.contains(x))
        throw DomainError("eval_scalar: x = " + std::to_string(x) + " outside domain " +
                          f.domain.describe() + " of " + f.id);
    if (x == 0.0 && f.value_at_zero) return *f.value_at_zero;
    return f.evaluator(x);
}

// ---- factories -------------------------------------------------------

inline ScalarFunctionSpec fn_xlogx() {
    ScalarFunctionSpec f;
    f.id = f.name = "xlogx";
    f.domain = Interval::nonnegative();
    f.value_at_zero = 0.0;
    f.op_class = OpClass::OperatorConvex;
    f.evaluator = [](double x) { return x == 0.0 ? 0.0 : x * std::log(x); };
    return f;
}

// -x^s on [0,inf). The exponent range is exclusive: s in {0,1} degenerates to
// the constant / identity families, which have their own entries.
inline ScalarFunctionSpec fn_neg_power(double s) {
    if (!(s > 0.0 && s < 1.0))
        throw ParameterError("neg_power: exponent s must satisfy 0 < s < 1, got " +
                             std::to_string(s));
    ScalarFunctionSpec f;
    f.name = "neg_power";
    f.params = {{"s", s}};
    f.id = "neg_power:s=" + detail::format_param(s);
    f.domain = Interval::nonnegative();
    f.value_at_zero = 0.0; // continuous extension
    f.op_class = OpClass::OperatorConvex;
    f.evaluator = [s](double x) { return -std::pow(x, s); };
    return f;
}

// x^t on [0,inf): operator concave for t in (0,1], operator convex for
// t in (1,2].
inline ScalarFunctionSpec fn_power(double t) {
    if (!(t > 0.0 && t <= 2.0))
        throw ParameterError("power: exponent t must satisfy 0 < t <= 2, got " +
                             std::to_string(t));
    ScalarFunctionSpec f;
    f.name = "power";
    f.params = {{"t", t}};
    f.id = "power:t=" + detail::format_param(t);
    f.domain = Interval::nonnegative();
    f.value_at_zero = 0.0;
    f.op_class = t <= 1.0 ? OpClass::OperatorConcave : OpClass::OperatorConvex;
    f.evaluator = [t](double x) { return std::pow(x, t); };
    return f;
}

inline ScalarFunctionSpec fn_log() {
    ScalarFunctionSpec f;
    f.id = f.name = "log";
    f.domain = Interval::positive();
    f.op_class = OpClass::OperatorConcave;
    f.evaluator = [](double x) { return std::log(x); };
    return f;
}

inline ScalarFunctionSpec fn_neg_log() {
    ScalarFunctionSpec f;
    f.id = f.name = "neg_log";
    f.domain = Interval::positive();
    f.op_class = OpClass::OperatorConvex;
    f.evaluator = [](double x) { return -std::log(x); };
    return f;
}

inline ScalarFunctionSpec fn_inverse() {
    ScalarFunctionSpec f;
    f.id = f.name = "inverse";
    f.domain = Interval::positive();
    f.op_class = OpClass::OperatorConvex;
    f.evaluator = [](double x) { return 1.0 / x; };
    return f;
}

inline ScalarFunctionSpec fn_square() {
    ScalarFunctionSpec f;
    f.id = f.name = "square";
    f.domain = Interval::reals();
    f.value_at_zero = 0.0;
    f.op_class = OpClass::OperatorConvex;
    f.evaluator = [](double x) { return x * x; };
    return f;
}

// Operator convex and operator concave at once; tagged convex, which is the
// class the verification suites iterate over.
inline ScalarFunctionSpec fn_identity() {
    ScalarFunctionSpec f;
    f.id = f.name = "identity";
    f.domain = Interval::reals();
    f.value_at_zero = 0.0;
    f.op_class = OpClass::OperatorConvex;
    f.evaluator = [](double x) { return x; };
    return f;
}

inline ScalarFunctionSpec fn_affine(double a, double b) {
    ScalarFunctionSpec f;
    f.name = "affine";
    f.params = {{"a", a}, {"b", b}};
    f.id = "affine:a=" + detail::format_param(a) + ",b=" + detail::format_param(b);
    f.domain = Interval::reals();
    f.value_at_zero = b;
    f.op_class = OpClass::OperatorConvex;
    f.evaluator = [a, b](double x) { return a * x + b; };
    return f;
}

inline ScalarFunctionSpec fn_quartic() {
    ScalarFunctionSpec f;
    f.id = f.name = "quartic";
    f.domain = Interval::reals();
    f.value_at_zero = 0.0;
    f.op_class = OpClass::NotOperatorConvex;
    f.evaluator = [](double x) { return x * x * x * x; };
    return f;
}

inline ScalarFunctionSpec fn_exp() {
    ScalarFunctionSpec f;
    f.id = f.name = "exp";
    f.domain = Interval::reals();
    f.value_at_zero = 1.0;
    f.op_class = OpClass::NotOperatorConvex;
    f.evaluator = [](double x) { return std::exp(x); };
    return f;
}

// F(t) = f(t + c) - f(c) on the translated domain. F(0) = 0 and the
// operator-convexity class is preserved, which is what makes the affine
// Jensen inequality derivable from the subhomogeneous one.
inline ScalarFunctionSpec shift_reduce(const ScalarFunctionSpec& f, double c) {
    if (!f.domain.contains(c))
        throw DomainError("shift_reduce: shift point c = " + std::to_string(c) +
                          " outside domain " + f.domain.describe() + " of " + f.id);
    const double fc = eval_scalar(f, c);
    ScalarFunctionSpec g;
    g.name = "shift";
    g.params = f.params;
    g.params["c"] = c;
    g.id = "shift(" + f.id + ",c=" + detail::format_param(c) + ")";
    g.domain = f.domain.shifted(c);
    g.value_at_zero = 0.0;
    g.op_class = f.op_class;
    const Interval base_domain = f.domain;
    g.evaluator = [f, c, fc, base_domain](double t) {
        double x = t + c;
        // t was checked against the translated domain; undo rounding-level
        // spill past a finite endpoint before handing x to f.
        if (!std::isinf(base_domain.lo) && x < base_domain.lo &&
            base_domain.lo - x <= 1e-12 * (1.0 + std::abs(base_domain.lo) + std::abs(c)))
            x = base_domain.lo;
        if (!std::isinf(base_domain.hi) && x > base_domain.hi &&
            x - base_domain.hi <= 1e-12 * (1.0 + std::abs(base_domain.hi) + std::abs(c)))
            x = base_domain.hi;
        return eval_scalar(f, x) - fc;
    };
    return g;
}

// ---- catalog and identifiers -----------------------------------------

// Default catalog instances. The parametric families are represented at the
// exponents the verification suites exercise.
inline std::vector<ScalarFunctionSpec> catalog() {
    return {
        fn_xlogx(),
        fn_neg_power(0.5),
        fn_power(0.5),
        fn_power(1.5),
        fn_log(),
        fn_neg_log(),
        fn_inverse(),
        fn_square(),
        fn_identity(),
        fn_affine(2.0, -1.0),
        fn_quartic(),
        fn_exp(),
    };
}

inline std::vector<ScalarFunctionSpec> operator_convex_entries() {
    std::vector<ScalarFunctionSpec> out;
    for (auto& f : catalog())
        if (f.op_class == OpClass::OperatorConvex) out.push_back(std::move(f));
    return out;
}

namespace detail {

inline std::map<std::string, double> parse_params(const std::string& text,
                                                  const std::string& id) {
    std::map<std::string, double> params;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("parse_function_id: malformed parameter '" + item +
                              "' in '" + id + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        char* end = nullptr;
        const double v = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            throw ConfigError("parse_function_id: cannot parse value '" + val +
                              "' in '" + id + "'");
        params[key] = v;
        pos = comma + 1;
    }
    return params;
}

inline double require_param(const std::map<std::string, double>& params,
                            const std::string& key, const std::string& id) {
    const auto it = params.find(key);
    if (it == params.end())
        throw ConfigError("parse_function_id: '" + id + "' requires parameter " + key);
    return it->second;
}

} // namespace detail

// Resolve a CLI-style identifier such as "xlogx", "neg_power:s=0.5",
// "power:t=0.3" or "affine:a=2,b=-1".
inline ScalarFunctionSpec parse_function_id(const std::string& id) {
    const std::size_t colon = id.find(':');
    const std::string name = id.substr(0, colon);
    const auto params = colon == std::string::npos
                            ? std::map<std::string, double>{}
                            : detail::parse_params(id.substr(colon + 1), id);

    if (name == "xlogx") return fn_xlogx();
    if (name == "neg_power") return fn_neg_power(detail::require_param(params, "s", id));
    if (name == "power") return fn_power(detail::require_param(params, "t", id));
    if (name == "log") return fn_log();
    if (name == "neg_log") return fn_neg_log();
    if (name == "inverse") return fn_inverse();
    if (name == "square") return fn_square();
    if (name == "identity") return fn_identity();
    if (name == "affine")
        return fn_affine(detail::require_param(params, "a", id),
                         detail::require_param(params, "b", id));
    if (name == "quartic") return fn_quartic();
    if (name == "exp") return fn_exp();
    throw ConfigError("parse_function_id: unknown function '" + id + "'");
}

// ---- domain policy for spectra ---------------------------------------

// Project an eigenvalue onto the domain of f before pointwise application.
// Closed endpoints absorb rounding-level spill (a PSD matrix may compute an
// eigenvalue of -1e-16); open endpoints never clamp, since that would mask
// genuine violations of strict positivity. `scale` is a norm of the operand
// supplying the eigenvalue.
inline double project_into_domain(const ScalarFunctionSpec& f, double lambda,
                                  double dom_floor, double scale) {
    const Interval& d = f.domain;
    if (!std::isinf(d.lo)) {
        if (d.lo_open) {
            if (lambda <= d.lo + dom_floor)
                throw DomainError("matrix argument: eigenvalue " + std::to_string(lambda) +
                                  " within dom_floor of open endpoint " +
                                  std::to_string(d.lo) + " of domain " + d.describe() +
                                  " of " + f.id);
        } else if (lambda < d.lo) {
            if (d.lo - lambda <= dom_floor * (1.0 + scale)) return d.lo;
            throw DomainError("matrix argument: eigenvalue " + std::to_string(lambda) +
                              " below domain " + d.describe() + " of " + f.id);
        }
    }
    if (!std::isinf(d.hi)) {
        if (d.hi_open) {
            if (lambda >= d.hi - dom_floor)
                throw DomainError("matrix argument: eigenvalue " + std::to_string(lambda) +
                                  " within dom_floor of open endpoint " +
                                  std::to_string(d.hi) + " of domain " + d.describe() +
                                  " of " + f.id);
        } else if (lambda > d.hi) {
            if (lambda - d.hi <= dom_floor * (1.0 + scale)) return d.hi;
            throw DomainError("matrix argument: eigenvalue " + std::to_string(lambda) +
                              " above domain " + d.describe() + " of " + f.id);
        }
    }
    return lambda;
}

} // namespace opconvex
