// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>

#include "orbit/errors.hpp"
#include "orbit/tolerances.hpp"

namespace orbit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;   // general rectangular complex matrix
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Largest deviation of U from having orthonormal columns.
inline double isometry_defect(const Matrix& u) {
    return max_abs(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

inline bool is_unitary(const Matrix& u, double tol = kTauUnitary) {
    return u.rows() == u.cols() && isometry_defect(u) <= tol;
}

// Hermitian matrix with the symmetry enforced at construction.  Entries are
// stored exactly Hermitian: (M + M*)/2 is computed entrywise, which in IEEE
// arithmetic yields a matrix equal to its own adjoint bit-for-bit.
class HermitianMatrix {
public:
    // Strict gate for external data: reject asymmetry beyond an absolute
    // tolerance, then symmetrize.
    explicit HermitianMatrix(const Matrix& m, double abs_tol = kHermitianInputTol)
        : HermitianMatrix(checked(m, abs_tol), 0) {}

    // For products that are Hermitian by algebra but carry roundoff
    // asymmetry proportional to their scale.
    static HermitianMatrix symmetrized(const Matrix& m) {
        if (m.rows() != m.cols())
            throw DimensionError("symmetrized: matrix is not square");
        double defect = max_abs(m - m.adjoint());
        if (defect > 1e-8 * std::max(1.0, max_abs(m)))
            throw PreconditionError(
                "symmetrized: matrix is far from Hermitian (defect " +
                std::to_string(defect) + ")");
        return HermitianMatrix(Matrix(((m + m.adjoint()) / 2.0)), 0);
    }

    static HermitianMatrix identity(int n) {
        return HermitianMatrix(Matrix(Matrix::Identity(n, n)), 0);
    }
    static HermitianMatrix zero(int n) {
        return HermitianMatrix(Matrix(Matrix::Zero(n, n)), 0);
    }
    static HermitianMatrix diagonal(const RealVector& d) {
        Matrix m = Matrix::Zero(d.size(), d.size());
        for (int i = 0; i < d.size(); ++i) m(i, i) = d(i);
        return HermitianMatrix(std::move(m), 0);
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }
    double trace() const { return m_.trace().real(); }

    HermitianMatrix operator+(const HermitianMatrix& o) const {
        require_same_dim(o);
        return HermitianMatrix(Matrix(m_ + o.m_), 0);
    }
    HermitianMatrix operator-(const HermitianMatrix& o) const {
        require_same_dim(o);
        return HermitianMatrix(Matrix(m_ - o.m_), 0);
    }
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a) {
        return HermitianMatrix(Matrix(s * a.m_), 0);
    }

    // A ↦ K* A K, Hermitian for any rectangular K.
    HermitianMatrix conjugate_by(const Matrix& k) const {
        if (k.rows() != m_.rows())
            throw DimensionError("conjugate_by: shape mismatch");
        return symmetrized(k.adjoint() * m_ * k);
    }

private:
    HermitianMatrix(Matrix m, int) : m_(std::move(m)) {
        m_ = (m_ + m_.adjoint().eval()) / 2.0;
    }
    static Matrix checked(const Matrix& m, double abs_tol) {
        if (m.rows() != m.cols())
            throw DimensionError("HermitianMatrix: matrix is not square");
        double defect = max_abs(m - m.adjoint());
        if (defect > abs_tol)
            throw PreconditionError("HermitianMatrix: asymmetry " +
                                    std::to_string(defect) +
                                    " exceeds tolerance");
        return m;
    }
    void require_same_dim(const HermitianMatrix& o) const {
        if (o.dim() != dim())
            throw DimensionError("HermitianMatrix: dimension mismatch");
    }

    Matrix m_;
};

inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

inline HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix::symmetrized(direct_sum(a.mat(), b.mat()));
}

}  // namespace orbit
