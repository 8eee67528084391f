// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "orbit/matrix.hpp"
#include "orbit/random.hpp"
#include "orbit/spectral.hpp"

namespace orbit {

inline Matrix random_ginibre(CounterRng& rng, int rows, int cols) {
    Matrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = rng.cgaussian();
    return g;
}

// Haar-distributed unitary: QR of a Ginibre matrix with the phase convention
// that makes R's diagonal positive (otherwise the distribution is biased).
inline Matrix random_unitary(CounterRng& rng, int dim) {
    if (dim == 1) {
        double phi = rng.uniform(0.0, 2.0 * M_PI);
        Matrix u(1, 1);
        u(0, 0) = Complex(std::cos(phi), std::sin(phi));
        return u;
    }
    Matrix g = random_ginibre(rng, dim, dim);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        double m = std::abs(d);
        q.col(j) *= (m > 0.0) ? d / m : Complex(1.0, 0.0);
    }
    return q;
}

// Hermitian with eigenvalues drawn uniformly from [lo, hi] in a Haar frame.
inline HermitianMatrix random_hermitian_in(CounterRng& rng, int dim, double lo,
                                           double hi) {
    Matrix q = random_unitary(rng, dim);
    RealVector vals(dim);
    for (int i = 0; i < dim; ++i) vals(i) = rng.uniform(lo, hi);
    return HermitianMatrix::symmetrized(q * vals.asDiagonal() * q.adjoint());
}

inline HermitianMatrix random_psd(CounterRng& rng, int dim, double scale = 1.0) {
    Matrix g = random_ginibre(rng, dim, dim);
    return HermitianMatrix::symmetrized(scale / dim * (g * g.adjoint()));
}

// general square matrix with singular values drawn uniformly from [lo, hi]
inline Matrix random_with_singular_values(CounterRng& rng, int dim, double lo,
                                          double hi) {
    Matrix u = random_unitary(rng, dim), v = random_unitary(rng, dim);
    RealVector sv(dim);
    for (int i = 0; i < dim; ++i) sv(i) = rng.uniform(lo, hi);
    return u * sv.asDiagonal() * v.adjoint();
}

inline Matrix random_contraction(CounterRng& rng, int dim) {
    return random_with_singular_values(rng, dim, 0.0, 1.0);
}

inline Matrix random_expansive(CounterRng& rng, int dim) {
    return random_with_singular_values(rng, dim, 1.0, 3.0);
}

// invertible matrix whose condition number is at most omega; singular values
// are log-uniform within a factor of omega.  With omega = 1 this is an exact
// positive multiple of a unitary.
inline Matrix random_conditioned(CounterRng& rng, int dim, double omega) {
    Matrix u = random_unitary(rng, dim), v = random_unitary(rng, dim);
    double s0 = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
    RealVector sv(dim);
    sv(0) = s0;
    for (int i = 1; i < dim; ++i)
        sv(i) = s0 * std::exp(rng.uniform(0.0, std::log(omega)));
    return u * sv.asDiagonal() * v.adjoint();
}

// k blocks Z_i of shape dim x dim stacking to an isometric column:
// sum Z_i* Z_i = I.  Built from the first dim columns of a Haar unitary
// of size k*dim.
inline std::vector<Matrix> random_isometric_column(CounterRng& rng, int k,
                                                   int dim) {
    Matrix big = random_unitary(rng, k * dim);
    Matrix iso = big.leftCols(dim);
    std::vector<Matrix> blocks;
    blocks.reserve(k);
    for (int i = 0; i < k; ++i)
        blocks.push_back(Matrix(iso.middleRows(i * dim, dim)));
    return blocks;
}

// PSD matrix with unit diagonal (a correlation matrix), via normalizing a
// random PSD with a strictly positive diagonal
inline HermitianMatrix random_correlation(CounterRng& rng, int dim) {
    HermitianMatrix base = random_psd(rng, dim);
    Matrix m = base.mat() + 0.05 * Matrix::Identity(dim, dim);
    RealVector d(dim);
    for (int i = 0; i < dim; ++i) d(i) = 1.0 / std::sqrt(m(i, i).real());
    return HermitianMatrix::symmetrized(d.asDiagonal() * m * d.asDiagonal());
}

// PSD with diagonal entries <= 1 (sub-unital Schur multiplier), scaled down
// from a correlation matrix by a random factor in [0.3, 1]
inline HermitianMatrix random_schur_subunital(CounterRng& rng, int dim) {
    double c = rng.uniform(0.3, 1.0);
    return c * random_correlation(rng, dim);
}

inline Vector random_unit_vector(CounterRng& rng, int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.cgaussian();
    double n = v.norm();
    if (n < 1e-12) {
        v.setZero();
        v(0) = Complex(1.0, 0.0);
        return v;
    }
    return Vector(v / n);
}

// arbitrary (non-Hermitian) square matrix with entries of unit scale
inline Matrix random_general(CounterRng& rng, int dim, double scale = 1.0) {
    return scale * random_ginibre(rng, dim, dim);
}

}  // namespace orbit
