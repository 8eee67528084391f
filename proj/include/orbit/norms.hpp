// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "orbit/scalar_function.hpp"
#include "orbit/spectral.hpp"

namespace orbit {

inline RealVector singular_values_desc(const Matrix& m) {
    if (m.rows() == 1 && m.cols() == 1) {
        RealVector out(1);
        out(0) = std::abs(m(0, 0));
        return out;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();  // Eigen returns them sorted descending
}

inline RealVector prefix_sums(const RealVector& v) {
    RealVector out(v.size());
    double acc = 0.0;
    for (int i = 0; i < v.size(); ++i) out(i) = (acc += v(i));
    return out;
}

// Sum of the k largest eigenvalues (signed, not singular values).
inline double sigma_k(const HermitianMatrix& x, int k) {
    if (k < 1 || k > x.dim()) throw DimensionError("sigma_k: index out of range");
    return eigenvalues_desc(x).head(k).sum();
}

// A unitarily invariant norm, evaluated through singular values.
class SymmetricNorm {
  public:
    static SymmetricNorm schatten(double p) {
        if (p < 1.0) throw PreconditionError("schatten: need p >= 1");
        SymmetricNorm n;
        n.kind_ = Kind::schatten;
        n.p_ = p;
        n.name_ = "schatten(" + ScalarFunction::format_double(p) + ")";
        return n;
    }
    static SymmetricNorm ky_fan(int k) {
        if (k < 1) throw PreconditionError("ky_fan: need k >= 1");
        SymmetricNorm n;
        n.kind_ = Kind::ky_fan;
        n.k_ = k;
        n.name_ = "ky-fan(" + std::to_string(k) + ")";
        return n;
    }
    static SymmetricNorm operator_norm() {
        SymmetricNorm n;
        n.kind_ = Kind::op;
        n.name_ = "operator";
        return n;
    }
    static SymmetricNorm trace_norm() {
        SymmetricNorm n;
        n.kind_ = Kind::trace;
        n.name_ = "trace";
        return n;
    }
    // Tr|A| / dim; the norm whose anti-norm limit recovers det^(1/n)
    static SymmetricNorm normalized_trace() {
        SymmetricNorm n;
        n.kind_ = Kind::normalized_trace;
        n.name_ = "normalized-trace";
        return n;
    }

    double operator()(const Matrix& m) const {
        return from_singular(singular_values_desc(m));
    }
    double operator()(const HermitianMatrix& m) const { return (*this)(m.mat()); }

    double from_singular(const RealVector& s) const {
        switch (kind_) {
            case Kind::op:
                return s.size() ? s(0) : 0.0;
            case Kind::trace:
                return s.sum();
            case Kind::normalized_trace:
                return s.size() ? s.sum() / static_cast<double>(s.size()) : 0.0;
            case Kind::ky_fan: {
                int k = std::min<int>(k_, static_cast<int>(s.size()));
                return s.head(k).sum();
            }
            case Kind::schatten: {
                double acc = 0.0;
                for (int i = 0; i < s.size(); ++i) acc += std::pow(s(i), p_);
                return std::pow(acc, 1.0 / p_);
            }
        }
        return 0.0;
    }

    const std::string& name() const { return name_; }

  private:
    enum class Kind { schatten, ky_fan, op, trace, normalized_trace };
    Kind kind_ = Kind::op;
    double p_ = 2.0;
    int k_ = 1;
    std::string name_;
};

// Weak majorization of eigenvalues: sigma_k(X) <= sigma_k(Y) for every k,
// within tol per prefix.
struct MajorizationVerdict {
    bool holds = false;
    double worst_gap = 0.0;  // min over k of sigma_k(Y) - sigma_k(X)
    int worst_index = 0;     // 1-indexed k attaining it
};

inline MajorizationVerdict weakly_majorized_by(const HermitianMatrix& x,
                                               const HermitianMatrix& y,
                                               double tol = kTauOrder) {
    if (x.dim() != y.dim())
        throw DimensionError("weakly_majorized_by: dimension mismatch");
    RealVector px = prefix_sums(eigenvalues_desc(x));
    RealVector py = prefix_sums(eigenvalues_desc(y));
    MajorizationVerdict v;
    v.worst_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < px.size(); ++k) {
        if (py(k) - px(k) < v.worst_gap) {
            v.worst_gap = py(k) - px(k);
            v.worst_index = k + 1;
        }
    }
    double scale = order_scale(std::max(std::fabs(px(px.size() - 1)),
                                        std::fabs(py(py.size() - 1))));
    v.holds = v.worst_gap >= -tol * scale;
    return v;
}

// Derived anti-norm on PSD matrices: ||A^p||^(1/p) for p < 0, extended by 0
// on (numerically) singular input.
inline double anti_norm_derived(const HermitianMatrix& a, double p,
                                const SymmetricNorm& base) {
    if (p >= 0.0) throw PreconditionError("anti_norm_derived: need p < 0");
    SpectralDecomposition sd = spectral_decompose(a);
    double radius = sd.spectral_radius();
    RealVector powered(sd.dim());
    for (int i = 0; i < sd.dim(); ++i) {
        double lam = sd.eigenvalues(i);
        if (lam < -kTauOrder * order_scale(radius))
            throw PreconditionError("anti_norm_derived: operand must be PSD");
        if (lam <= 1e-12 * std::max(1.0, radius)) return 0.0;  // singular limit
        powered(i) = std::pow(lam, p);
    }
    std::sort(powered.data(), powered.data() + powered.size(),
              std::greater<double>());
    return std::pow(base.from_singular(powered), 1.0 / p);
}

// det(A)^(1/n) through the log-domain mean; 0 for singular PSD input.
inline double minkowski_functional(const HermitianMatrix& a) {
    SpectralDecomposition sd = spectral_decompose(a);
    double radius = sd.spectral_radius();
    double acc = 0.0;
    for (int i = 0; i < sd.dim(); ++i) {
        double lam = sd.eigenvalues(i);
        if (lam < -kTauOrder * order_scale(radius))
            throw PreconditionError("minkowski_functional: operand must be PSD");
        if (lam <= 0.0) return 0.0;
        acc += std::log(lam);
    }
    return std::exp(acc / sd.dim());
}

// Determinant of a Hermitian matrix as the product of eigenvalues.
inline double hermitian_determinant(const HermitianMatrix& a) {
    SpectralDecomposition sd = spectral_decompose(a);
    double det = 1.0;
    for (int i = 0; i < sd.dim(); ++i) det *= sd.eigenvalues(i);
    return det;
}

}  // namespace orbit
