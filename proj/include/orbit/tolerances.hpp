// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>

namespace orbit {

// Quality gate for unitary/isometry factors: ||U*U - I||_max.
inline constexpr double kTauUnitary = 1e-10;

// Base tolerance for Loewner-order verdicts; always scaled by
// max(1, spectral radius of the compared difference).
inline constexpr double kTauOrder = 1e-8;

// Absolute Hermiticity gate applied to external inputs (files, user data).
inline constexpr double kHermitianInputTol = 1e-12;

// Grace band for eigenvalues falling outside a closed function domain.
inline constexpr double kDomainTol = 1e-9;

inline double order_scale(double spectral_radius) {
    return std::max(1.0, spectral_radius);
}

}  // namespace orbit
