// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbit/matrix.hpp"
#include "orbit/spectral.hpp"
#include "orbit/tolerances.hpp"

namespace orbit {

// Constructive witness for a matrix inequality LHS <= RHS: the unitaries
// that realize the right-hand side, plus the verified residual RHS - LHS.
struct WitnessCertificate {
    std::string statement_id;
    std::vector<Matrix> unitaries;
    HermitianMatrix residual = HermitianMatrix::zero(0);  // set on assembly
    double min_residual_eigenvalue = 0.0;
    double tolerance_used = 0.0;  // absolute threshold after scaling

    bool valid() const { return min_residual_eigenvalue >= -tolerance_used; }
};

// Assemble and verify a certificate; never throws on an invalid residual
// (callers decide whether that is fatal).
inline WitnessCertificate certify(std::string statement_id, std::vector<Matrix> unitaries,
                                  const HermitianMatrix& lhs, const HermitianMatrix& rhs,
                                  double tol = kTauOrder) {
    for (const auto& u : unitaries)
        if (!is_unitary(u))
            throw NumericalError("certify(" + statement_id + "): factor not unitary",
                                 isometry_defect(u));
    HermitianMatrix residual = rhs - lhs;
    SpectralDecomposition sd = spectral_decompose(residual);
    WitnessCertificate cert;
    cert.statement_id = std::move(statement_id);
    cert.unitaries = std::move(unitaries);
    cert.min_residual_eigenvalue = sd.eigenvalues(sd.dim() - 1);
    cert.tolerance_used = tol * order_scale(sd.spectral_radius());
    cert.residual = std::move(residual);
    return cert;
}

// Unitary U with X <= U Y U*, which exists iff the decreasingly ordered
// eigenvalues dominate pairwise: lambda_k(X) <= lambda_k(Y) for all k.
// U maps the eigenframe of Y onto the eigenframe of X.
inline Matrix align_eigenbasis(const HermitianMatrix& x, const HermitianMatrix& y,
                               double tol = kTauOrder) {
    if (x.dim() != y.dim()) throw DimensionError("align_eigenbasis: dimension mismatch");
    SpectralDecomposition dx = spectral_decompose(x);
    SpectralDecomposition dy = spectral_decompose(y);
    double scale = order_scale(std::max(dx.spectral_radius(), dy.spectral_radius()));
    for (int k = 0; k < dx.dim(); ++k)
        if (dx.eigenvalues(k) > dy.eigenvalues(k) + tol * scale)
            throw PreconditionError(
                "align_eigenbasis: eigenvalue dominance fails at index " +
                std::to_string(k) + " (" + std::to_string(dx.eigenvalues(k)) + " > " +
                std::to_string(dy.eigenvalues(k)) + ")");
    return dx.frame * dy.frame.adjoint();
}

// U with U Y U* <= X (the dominated side placed under X).
inline Matrix align_eigenbasis_under(const HermitianMatrix& y, const HermitianMatrix& x,
                                     double tol = kTauOrder) {
    return align_eigenbasis(y, x, tol).adjoint();
}

}  // namespace orbit
