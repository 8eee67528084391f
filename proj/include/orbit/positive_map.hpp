// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orbit/matrix.hpp"
#include "orbit/spectral.hpp"
#include "orbit/tolerances.hpp"

namespace orbit {

enum class MapKind { compression, schur, cstar, expectation, extended };
enum class Unitality { unital, sub_unital, neither };

inline const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::compression: return "compression";
        case MapKind::schur: return "schur";
        case MapKind::cstar: return "cstar";
        case MapKind::expectation: return "expectation";
        case MapKind::extended: return "extended";
    }
    return "?";
}

// Positive linear map between matrix algebras, restricted to the concrete
// families the harness exercises: compression by an isometric column,
// Schur multiplier by a PSD matrix, Kraus-type sums Z_i* A Z_i, vector
// expectations, and the unital extension of a sub-unital map.
class PositiveLinearMap {
public:
    // A -> J* A J for an n x d matrix J with orthonormal columns
    static PositiveLinearMap compression(Matrix j) {
        if (j.rows() < j.cols() || j.cols() < 1)
            throw DimensionError("compression: need n x d with n >= d >= 1");
        if (double defect = isometry_defect(j); defect > kTauUnitary)
            throw PreconditionError("compression: columns not orthonormal (defect " +
                                    std::to_string(defect) + ")");
        PositiveLinearMap m(MapKind::compression, static_cast<int>(j.rows()),
                            static_cast<int>(j.cols()));
        m.factors_.push_back(std::move(j));
        return m;
    }

    // A -> Z . A (entrywise product) for PSD Z
    static PositiveLinearMap schur_multiplier(HermitianMatrix z) {
        double mn = min_eigenvalue(z);
        double radius = spectral_decompose(z).spectral_radius();
        if (mn < -kTauOrder * order_scale(radius))
            throw PreconditionError("schur_multiplier: matrix is not PSD (min eigenvalue " +
                                    std::to_string(mn) + ")");
        int n = z.dim();
        PositiveLinearMap m(MapKind::schur, n, n);
        m.schur_ = std::make_shared<HermitianMatrix>(std::move(z));
        return m;
    }

    // A -> sum_i Z_i* A Z_i, all Z_i of the same n x d shape
    static PositiveLinearMap cstar_combination(std::vector<Matrix> zs) {
        if (zs.empty()) throw DimensionError("cstar_combination: empty factor list");
        for (const auto& z : zs)
            if (z.rows() != zs[0].rows() || z.cols() != zs[0].cols())
                throw DimensionError("cstar_combination: factor shapes differ");
        PositiveLinearMap m(MapKind::cstar, static_cast<int>(zs[0].rows()),
                            static_cast<int>(zs[0].cols()));
        m.factors_ = std::move(zs);
        return m;
    }

    // A -> [<h, A h>] for a unit vector h
    static PositiveLinearMap vector_expectation(Vector h) {
        double nrm = h.norm();
        if (std::fabs(nrm - 1.0) > kTauUnitary)
            throw PreconditionError("vector_expectation: vector is not unit (norm " +
                                    std::to_string(nrm) + ")");
        h /= nrm;
        PositiveLinearMap m(MapKind::expectation, static_cast<int>(h.size()), 1);
        m.h_ = std::move(h);
        return m;
    }

    MapKind kind() const { return kind_; }
    int source_dim() const { return source_dim_; }
    int target_dim() const { return target_dim_; }
    const std::vector<Matrix>& factors() const { return factors_; }
    const HermitianMatrix& schur_matrix() const { return *schur_; }
    const Vector& expectation_vector() const { return h_; }

    HermitianMatrix apply(const HermitianMatrix& a) const {
        if (a.dim() != source_dim_)
            throw DimensionError("apply: operand dim " + std::to_string(a.dim()) +
                                 ", map expects " + std::to_string(source_dim_));
        switch (kind_) {
            case MapKind::compression:
                return a.conjugate_by(factors_[0]);
            case MapKind::schur:
                return HermitianMatrix::symmetrized(
                    schur_->mat().cwiseProduct(a.mat()));
            case MapKind::cstar: {
                Matrix acc = Matrix::Zero(target_dim_, target_dim_);
                for (const auto& z : factors_) acc += z.adjoint() * a.mat() * z;
                return HermitianMatrix::symmetrized(acc);
            }
            case MapKind::expectation: {
                Matrix out(1, 1);
                out(0, 0) = (h_.adjoint() * a.mat() * h_)(0, 0);
                return HermitianMatrix::symmetrized(out);
            }
            case MapKind::extended: {
                int n = source_dim_ - 1;
                // leading block of an exactly-Hermitian matrix is Hermitian
                HermitianMatrix top{Matrix(a.mat().topLeftCorner(n, n))};
                double corner = a(n, n).real();
                Matrix out = inner_->apply(top).mat() +
                             corner * (Matrix::Identity(target_dim_, target_dim_) -
                                       inner_identity_->mat());
                return HermitianMatrix::symmetrized(out);
            }
        }
        throw Error("apply: unreachable");
    }

    HermitianMatrix apply_identity() const {
        return apply(HermitianMatrix::identity(source_dim_));
    }

    struct UnitalityReport {
        Unitality verdict;
        HermitianMatrix image_of_identity;
    };

    UnitalityReport classify_unitality() const {
        HermitianMatrix c = apply_identity();
        double dev = max_abs(c.mat() - Matrix::Identity(c.dim(), c.dim()));
        if (dev <= kTauUnitary) return {Unitality::unital, c};
        RealVector ev = eigenvalues_desc(c);
        if (ev(0) <= 1.0 + kTauUnitary) return {Unitality::sub_unital, c};
        return {Unitality::neither, c};
    }

    friend PositiveLinearMap sub_unital_extend(const PositiveLinearMap& psi);

private:
    PositiveLinearMap(MapKind k, int src, int dst)
        : kind_(k), source_dim_(src), target_dim_(dst) {}

    MapKind kind_;
    int source_dim_;
    int target_dim_;
    std::vector<Matrix> factors_;               // compression / cstar
    std::shared_ptr<HermitianMatrix> schur_;    // schur
    Vector h_;                                  // expectation
    std::shared_ptr<PositiveLinearMap> inner_;  // extended
    std::shared_ptr<HermitianMatrix> inner_identity_;
};

// Unital extension of a sub-unital map Psi on M_n: the result acts on
// M_{n+1}, reads only the leading n x n block and the bottom-right scalar b,
// and returns Psi(A) + b (I - Psi(I)).
inline PositiveLinearMap sub_unital_extend(const PositiveLinearMap& psi) {
    auto report = psi.classify_unitality();
    if (report.verdict == Unitality::neither)
        throw PreconditionError("sub_unital_extend: map is not sub-unital");
    PositiveLinearMap m(MapKind::extended, psi.source_dim() + 1, psi.target_dim());
    m.inner_ = std::make_shared<PositiveLinearMap>(psi);
    m.inner_identity_ = std::make_shared<HermitianMatrix>(report.image_of_identity);
    return m;
}

}  // namespace orbit
