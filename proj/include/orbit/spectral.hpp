// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "orbit/matrix.hpp"
#include "orbit/scalar_function.hpp"
#include "orbit/tolerances.hpp"

namespace orbit {

struct SpectralDecomposition {
    RealVector eigenvalues;  // non-increasing
    Matrix frame;            // orthonormal columns, frame.col(k) <-> eigenvalues[k]

    int dim() const { return static_cast<int>(eigenvalues.size()); }

    double spectral_radius() const {
        return dim() == 0 ? 0.0
                          : std::max(std::fabs(eigenvalues(0)),
                                     std::fabs(eigenvalues(dim() - 1)));
    }

    Matrix reconstruct_raw() const {
        return frame * eigenvalues.asDiagonal() * frame.adjoint();
    }
    HermitianMatrix reconstruct() const {
        return HermitianMatrix::symmetrized(reconstruct_raw());
    }
    // same frame, new eigenvalues
    HermitianMatrix rebuild(const RealVector& vals) const {
        if (vals.size() != eigenvalues.size())
            throw DimensionError("rebuild: eigenvalue count mismatch");
        return HermitianMatrix::symmetrized(frame * vals.asDiagonal() * frame.adjoint());
    }
};

inline SpectralDecomposition spectral_decompose(const HermitianMatrix& a) {
    const int n = a.dim();
    SpectralDecomposition out;
    if (n == 1) {  // exact scalar path
        out.eigenvalues = RealVector::Constant(1, a(0, 0).real());
        out.frame = Matrix::Identity(1, 1);
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat());
    if (es.info() != Eigen::Success)
        throw NumericalError("spectral_decompose: eigensolver failed to converge (dim " +
                             std::to_string(n) + ", max entry " +
                             std::to_string(max_abs(a.mat())) + ")");
    out.eigenvalues = es.eigenvalues().reverse();
    out.frame = es.eigenvectors().rowwise().reverse();
    return out;
}

inline RealVector eigenvalues_desc(const HermitianMatrix& a) {
    return spectral_decompose(a).eigenvalues;
}

inline double min_eigenvalue(const HermitianMatrix& a) {
    auto ev = eigenvalues_desc(a);
    return ev(ev.size() - 1);
}

// f(A) by the functional calculus.  Eigenvalues must lie in dom(f); a
// 1e-9 grace band around closed endpoints is clamped, anything further out
// raises DomainError carrying the offending eigenvalue.
inline HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a) {
    SpectralDecomposition sd = spectral_decompose(a);
    RealVector vals(sd.dim());
    for (int i = 0; i < sd.dim(); ++i) {
        double t = sd.eigenvalues(i);
        if (!f.domain().contains(t, kDomainTol))
            throw DomainError("apply_function: eigenvalue " + std::to_string(t) +
                                  " outside the domain of " + f.name(),
                              t);
        vals(i) = f(f.domain().clamp(t));
    }
    return sd.rebuild(vals);
}

struct OrderVerdict {
    bool holds;
    double min_eigenvalue;   // of the difference Y - X
    double tolerance_used;   // absolute threshold after scaling
};

// Is X <= Y in the Loewner order, within tol * max(1, spectral radius of Y-X)?
inline OrderVerdict loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y,
                                double tol = kTauOrder) {
    if (x.dim() != y.dim()) throw DimensionError("loewner_leq: dimension mismatch");
    SpectralDecomposition d = spectral_decompose(y - x);
    double mn = d.eigenvalues(d.dim() - 1);
    double thr = tol * order_scale(d.spectral_radius());
    return {mn >= -thr, mn, thr};
}

inline HermitianMatrix positive_part(const HermitianMatrix& a) {
    SpectralDecomposition sd = spectral_decompose(a);
    RealVector vals = sd.eigenvalues.cwiseMax(0.0);
    return sd.rebuild(vals);
}

// |A| for Hermitian A
inline HermitianMatrix hermitian_abs(const HermitianMatrix& a) {
    SpectralDecomposition sd = spectral_decompose(a);
    return sd.rebuild(sd.eigenvalues.cwiseAbs());
}

// square root of a positive semidefinite matrix; eigenvalues in a small
// negative roundoff band are clamped to zero
inline HermitianMatrix sqrt_psd(const HermitianMatrix& a, double tol = kTauOrder) {
    SpectralDecomposition sd = spectral_decompose(a);
    double floor = -tol * order_scale(sd.spectral_radius());
    RealVector vals(sd.dim());
    for (int i = 0; i < sd.dim(); ++i) {
        double t = sd.eigenvalues(i);
        if (t < floor)
            throw PreconditionError("sqrt_psd: negative eigenvalue " + std::to_string(t));
        vals(i) = std::sqrt(std::max(t, 0.0));
    }
    return sd.rebuild(vals);
}

struct PolarDecomposition {
    Matrix unitary;      // W
    HermitianMatrix abs; // |X| = (X*X)^{1/2}, so X = W |X|
};

// Polar decomposition of a square matrix via full SVD; on a singular X the
// unitary is completed deterministically by the SVD frames.
inline PolarDecomposition polar_unitary(const Matrix& x) {
    if (x.rows() != x.cols()) throw DimensionError("polar_unitary: matrix not square");
    const int n = static_cast<int>(x.rows());
    if (n == 1) {
        Complex z = x(0, 0);
        double r = std::abs(z);
        Matrix w(1, 1);
        w(0, 0) = r == 0.0 ? Complex(1, 0) : z / r;
        Matrix a(1, 1);
        a(0, 0) = r;
        return {w, HermitianMatrix(a)};
    }
    Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix w = svd.matrixU() * svd.matrixV().adjoint();
    Matrix absx = svd.matrixV() * svd.singularValues().asDiagonal().toDenseMatrix().cast<Complex>() *
                  svd.matrixV().adjoint();
    return {w, HermitianMatrix::symmetrized(absx)};
}

// |X| = (X*X)^{1/2} for a general square matrix
inline HermitianMatrix matrix_abs(const Matrix& x) {
    return polar_unitary(x).abs;
}

}  // namespace orbit
