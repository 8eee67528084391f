// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "orbit/matrix.hpp"

namespace orbit {

// Cyclic Jacobi eigensolver for Hermitian matrices, templated on the real
// scalar so margins flagged as negative can be re-verified in long double
// through a code path independent of the primary backend.
template <typename Real>
std::vector<Real> jacobi_hermitian_eigenvalues(std::vector<std::complex<Real>> a, int n,
                                               int max_sweeps = 60) {
    using C = std::complex<Real>;
    auto at = [&](int i, int j) -> C& { return a[i * n + j]; };
    if (n == 1) return {at(0, 0).real()};

    Real norm = 0;
    for (auto& z : a) norm += std::norm(z);
    norm = std::sqrt(norm);
    const Real eps = std::numeric_limits<Real>::epsilon();

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2 * std::norm(at(p, q));
        if (std::sqrt(off) <= 4 * eps * std::max<Real>(norm, Real(1))) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                C apq = at(p, q);
                Real beta = std::abs(apq);
                if (beta <= eps * norm) continue;
                C w = std::conj(apq) / beta;  // apq * w = beta (real)
                Real app = at(p, p).real(), aqq = at(q, q).real();
                Real tau = (aqq - app) / (2 * beta);
                Real t = (tau >= 0 ? Real(1) : Real(-1)) /
                         (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
                Real c = Real(1) / std::sqrt(Real(1) + t * t);
                Real s = t * c;

                // A <- J* A J with J acting on coordinates (p, q) as
                // [[c, s], [-w s, w c]]
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    C akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * (w * akq);
                    at(k, q) = s * akp + c * (w * akq);
                    at(p, k) = std::conj(at(k, p));
                    at(q, k) = std::conj(at(k, q));
                }
                at(p, p) = app - t * beta;
                at(q, q) = aqq + t * beta;
                at(p, q) = C(0);
                at(q, p) = C(0);
            }
        }
    }

    std::vector<Real> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = at(i, i).real();
    std::sort(vals.begin(), vals.end(), std::greater<Real>());
    return vals;
}

inline std::vector<long double> refined_eigenvalues(const HermitianMatrix& m) {
    const int n = m.dim();
    std::vector<std::complex<long double>> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex z = m(i, j);
            a[static_cast<std::size_t>(i) * n + j] =
                std::complex<long double>(z.real(), z.imag());
        }
    return jacobi_hermitian_eigenvalues<long double>(std::move(a), n);
}

inline double refined_min_eigenvalue(const HermitianMatrix& m) {
    auto vals = refined_eigenvalues(m);
    return static_cast<double>(vals.back());
}

inline double refined_spectral_radius(const HermitianMatrix& m) {
    auto vals = refined_eigenvalues(m);
    return static_cast<double>(std::max(std::fabs((double)vals.front()),
                                        std::fabs((double)vals.back())));
}

}  // namespace orbit
