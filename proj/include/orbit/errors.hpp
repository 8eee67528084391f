// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace orbit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatches: wrong dimensions, bad block splits, empty operand lists.
struct DimensionError : Error {
    using Error::Error;
};

// A spectrum escaped the domain of the scalar function being applied.
struct DomainError : Error {
    double offending_value;
    DomainError(const std::string& what, double value)
        : Error(what), offending_value(value) {}
};

// A mathematical hypothesis of an operation does not hold for the inputs.
struct PreconditionError : Error {
    using Error::Error;
};

// Numerical failure: non-convergence, or a constructed certificate that
// misses its own validity gate.  Carries the best residual seen.
struct NumericalError : Error {
    double residual;
    explicit NumericalError(const std::string& what, double res = 0.0)
        : Error(what), residual(res) {}
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace orbit
