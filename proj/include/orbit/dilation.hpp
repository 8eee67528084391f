// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbit/matrix.hpp"
#include "orbit/positive_map.hpp"
#include "orbit/spectral.hpp"

namespace orbit {

// Orthogonal projections P_i on a space of dimension k*d together with an
// isometric embedding i : C^d -> C^{kd} such that i* P_i i recovers the i-th
// member of a PSD partition of unity.
struct DilationResult {
    int big_dim = 0;
    std::vector<Matrix> projections;
    Matrix embedding;  // (k*d) x d, first block of the identity

    int parts() const { return static_cast<int>(projections.size()); }

    HermitianMatrix represent(const RealVector& weights) const {
        if (weights.size() != static_cast<int>(projections.size()))
            throw DimensionError("represent: weight count mismatch");
        Matrix acc = Matrix::Zero(big_dim, big_dim);
        for (int i = 0; i < weights.size(); ++i) acc += weights(i) * projections[i];
        return HermitianMatrix::symmetrized(acc);
    }

    HermitianMatrix compress(const HermitianMatrix& big) const {
        return big.conjugate_by(embedding);
    }
};

namespace detail {

// Deterministic completion of a set of orthonormal rows to a unitary by
// modified Gram-Schmidt over the standard basis.  Candidates whose residual
// against the accumulated rows falls below the sweep threshold are skipped.
inline Matrix complete_rows_to_unitary(const Matrix& rows) {
    const int total = static_cast<int>(rows.cols());
    std::vector<Vector> basis;  // rows kept as column vectors
    basis.reserve(total);
    for (int r = 0; r < rows.rows(); ++r) basis.push_back(rows.row(r).adjoint());

    for (double threshold : {1e-6, 1e-12}) {
        for (int c = 0; c < total && static_cast<int>(basis.size()) < total; ++c) {
            Vector v = Vector::Zero(total);
            v(c) = 1.0;
            for (int pass = 0; pass < 2; ++pass)  // re-orthogonalize once
                for (const auto& b : basis) v -= (b.adjoint() * v)(0, 0) * b;
            double res = v.norm();
            if (res < threshold) continue;
            basis.push_back(v / res);
        }
        if (static_cast<int>(basis.size()) == total) break;
    }
    if (static_cast<int>(basis.size()) != total)
        throw NumericalError("complete_rows_to_unitary: completion fell short (" +
                             std::to_string(basis.size()) + " of " +
                             std::to_string(total) + " rows)");
    Matrix u(total, total);
    for (int r = 0; r < total; ++r) u.row(r) = basis[r].adjoint();
    return u;
}

}  // namespace detail

// Build projections from a PSD partition of unity A_1..A_k on C^d
// (sum A_i = I).  The first block-row of the constructed unitary V is
// [A_1^{1/2} ... A_k^{1/2}]; P_i picks the i-th block column of V.
inline DilationResult naimark_dilate(const std::vector<HermitianMatrix>& parts) {
    if (parts.empty()) throw DimensionError("naimark_dilate: empty partition");
    const int d = parts[0].dim();
    const int k = static_cast<int>(parts.size());
    Matrix sum = Matrix::Zero(d, d);
    for (const auto& a : parts) {
        if (a.dim() != d) throw DimensionError("naimark_dilate: member dims differ");
        double mn = min_eigenvalue(a);
        if (mn < -1e-9)
            throw PreconditionError("naimark_dilate: member not PSD (min eigenvalue " +
                                    std::to_string(mn) + ")");
        sum += a.mat();
    }
    double dev = max_abs(sum - Matrix::Identity(d, d));
    if (dev > 1e-9)
        throw PreconditionError("naimark_dilate: partition does not sum to identity "
                                "(deviation " + std::to_string(dev) + ")");

    const int big = k * d;
    Matrix first_rows(d, big);
    for (int i = 0; i < k; ++i)
        first_rows.middleCols(i * d, d) = sqrt_psd(parts[i]).mat();

    Matrix v = detail::complete_rows_to_unitary(first_rows);
    if (double defect = isometry_defect(v); defect > kTauUnitary)
        throw NumericalError("naimark_dilate: completed matrix not unitary (defect " +
                             std::to_string(defect) + ")", defect);

    DilationResult out;
    out.big_dim = big;
    out.embedding = Matrix::Zero(big, d);
    out.embedding.topRows(d) = Matrix::Identity(d, d);
    out.projections.reserve(k);
    for (int i = 0; i < k; ++i) {
        Matrix block = v.middleCols(i * d, d);  // i-th block column
        out.projections.push_back(block * block.adjoint());
    }
    return out;
}

// Spectral representation of a unital positive map at a fixed Hermitian
// operand: pi(A) = sum lambda_i P_i acts on the dilated space and
// compresses back to Phi(A); the same frame transports f(A) for any f.
struct StinespringReduction {
    DilationResult dilation;
    RealVector eigenvalues;  // merged, non-increasing

    HermitianMatrix dilated(const ScalarFunction& f) const {
        RealVector vals(eigenvalues.size());
        for (int i = 0; i < eigenvalues.size(); ++i) vals(i) = f(eigenvalues(i));
        return dilation.represent(vals);
    }
    HermitianMatrix dilated_input() const { return dilation.represent(eigenvalues); }
    HermitianMatrix recover_input() const { return dilation.compress(dilated_input()); }
    HermitianMatrix recover(const ScalarFunction& f) const {
        return dilation.compress(dilated(f));
    }
};

inline StinespringReduction stinespring_reduce(const PositiveLinearMap& phi,
                                               const HermitianMatrix& a) {
    if (phi.classify_unitality().verdict != Unitality::unital)
        throw PreconditionError("stinespring_reduce: map is not unital");
    SpectralDecomposition sd = spectral_decompose(a);

    // merge near-degenerate eigenvalues so the spectral projections are
    // well conditioned
    std::vector<std::pair<int, int>> groups;  // [begin, end)
    for (int i = 0; i < sd.dim();) {
        int j = i + 1;
        while (j < sd.dim() && sd.eigenvalues(j - 1) - sd.eigenvalues(j) < 1e-10) ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    std::vector<HermitianMatrix> parts;
    RealVector merged(static_cast<int>(groups.size()));
    for (std::size_t g = 0; g < groups.size(); ++g) {
        auto [b, e] = groups[g];
        Matrix q = sd.frame.middleCols(b, e - b);
        HermitianMatrix proj = HermitianMatrix::symmetrized(q * q.adjoint());
        parts.push_back(phi.apply(proj));
        merged(static_cast<int>(g)) = sd.eigenvalues.segment(b, e - b).mean();
    }
    return {naimark_dilate(parts), std::move(merged)};
}

}  // namespace orbit
