// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbit/norms.hpp"
#include "orbit/positive_map.hpp"
#include "orbit/scalar_function.hpp"
#include "orbit/spectral.hpp"

namespace orbit {

// Operand bundle for the scalar/order inequality catalogue.  Each statement
// documents which fields it reads; unused fields are ignored.
struct InequalityOperands {
    std::vector<HermitianMatrix> herms;  // Hermitian operands A, B, ... / H
    std::vector<Matrix> gens;            // general operands Z_i, A_i, ...
    std::optional<PositiveLinearMap> map;
    std::optional<ScalarFunction> f;
    double p = 2.0;      // exponent parameter (antinorm / schatten / powers)
    double omega = 1.0;  // condition-number bound
    int split = 1;       // leading block size for partitioned statements
};

struct StatementEvaluation {
    std::string id;
    bool applicable = true;
    std::string note;             // why not applicable, or extra context
    bool order_statement = false;
    // raw: RHS - LHS for scalars, min eigenvalue of RHS - LHS for orders,
    // worst prefix gap for majorization-type statements.
    double raw_margin = 0.0;
    // raw divided by max(1, statement scale); this is what --tol compares to
    double margin = 0.0;
};

namespace detail {

inline StatementEvaluation na(std::string id, std::string note) {
    StatementEvaluation e;
    e.id = std::move(id);
    e.applicable = false;
    e.note = std::move(note);
    return e;
}

inline StatementEvaluation scalar_eval(std::string id, double lhs, double rhs) {
    StatementEvaluation e;
    e.id = std::move(id);
    e.raw_margin = rhs - lhs;
    e.margin = e.raw_margin / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    return e;
}

inline StatementEvaluation order_eval(std::string id, const HermitianMatrix& lhs,
                                      const HermitianMatrix& rhs) {
    StatementEvaluation e;
    e.id = std::move(id);
    e.order_statement = true;
    SpectralDecomposition sd = spectral_decompose(rhs - lhs);
    e.raw_margin = sd.eigenvalues(sd.dim() - 1);
    e.margin = e.raw_margin / order_scale(sd.spectral_radius());
    return e;
}

inline StatementEvaluation gap_eval(std::string id, double raw, double scale) {
    StatementEvaluation e;
    e.id = std::move(id);
    e.raw_margin = raw;
    e.margin = raw / std::max(1.0, scale);
    return e;
}

inline bool psd_ok(const HermitianMatrix& a) {
    SpectralDecomposition sd = spectral_decompose(a);
    return sd.eigenvalues(sd.dim() - 1) >= -kTauOrder * order_scale(sd.spectral_radius());
}

inline double cond_number(const Matrix& z) {
    RealVector sv = singular_values_desc(z);
    double smin = sv(sv.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

inline bool is_contraction(const Matrix& z) {
    return singular_values_desc(z)(0) <= 1.0 + kTauUnitary;
}

inline bool is_expansive(const Matrix& z) {
    RealVector sv = singular_values_desc(z);
    return sv(sv.size() - 1) >= 1.0 - kTauUnitary;
}

inline bool isometric_column(const std::vector<Matrix>& zs) {
    if (zs.empty()) return false;
    Matrix acc = Matrix::Zero(zs[0].cols(), zs[0].cols());
    for (const auto& z : zs) {
        if (z.cols() != zs[0].cols()) return false;
        acc += z.adjoint() * z;
    }
    return max_abs(acc - Matrix::Identity(acc.rows(), acc.cols())) <= kTauUnitary;
}

// sampled nonnegativity of f over the convex hull of the given spectra
inline bool f_nonneg_on(const ScalarFunction& f,
                        std::initializer_list<const HermitianMatrix*> ms) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto* m : ms) {
        RealVector ev = eigenvalues_desc(*m);
        lo = std::min(lo, ev(ev.size() - 1));
        hi = std::max(hi, ev(0));
    }
    lo = f.domain().clamp(lo);
    hi = f.domain().clamp(hi);
    for (int i = 0; i <= 64; ++i) {
        double t = lo + (hi - lo) * i / 64.0;
        if (!f.domain().contains(t)) continue;
        if (f(t) < -1e-12) return false;
    }
    return true;
}

inline const std::vector<SymmetricNorm>& sampled_norms() {
    static const std::vector<SymmetricNorm> norms = {
        SymmetricNorm::operator_norm(),   SymmetricNorm::trace_norm(),
        SymmetricNorm::normalized_trace(), SymmetricNorm::schatten(1.5),
        SymmetricNorm::schatten(2.0),      SymmetricNorm::schatten(3.0),
        SymmetricNorm::ky_fan(2)};
    return norms;
}

// min over prefixes of (prefix(rhs) - prefix(lhs)), padding shorter side
// with zeros; scale = largest prefix magnitude seen
struct PrefixGap {
    double raw;
    double scale;
};
inline PrefixGap prefix_gap(const RealVector& lhs_vals, const RealVector& rhs_vals) {
    const int n = static_cast<int>(std::max(lhs_vals.size(), rhs_vals.size()));
    double al = 0.0, ar = 0.0, raw = std::numeric_limits<double>::infinity(),
           scale = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k < lhs_vals.size()) al += lhs_vals(k);
        if (k < rhs_vals.size()) ar += rhs_vals(k);
        raw = std::min(raw, ar - al);
        scale = std::max({scale, std::fabs(al), std::fabs(ar)});
    }
    if (n == 0) return {0.0, 0.0};
    return {raw, scale};
}

// sorted singular values of f applied to a Hermitian operand
inline RealVector sv_of_function(const ScalarFunction& f, const HermitianMatrix& a) {
    return singular_values_desc(apply_function(f, a).mat());
}

using Evaluator =
    std::function<StatementEvaluation(const InequalityOperands&)>;

// ---- individual statements -------------------------------------------------

inline StatementEvaluation vn_trace(const InequalityOperands& o) {
    const std::string id = "vn-trace-1.1";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and f");
    const ScalarFunction& f = *o.f;
    if (!f.is_convex() && !f.is_concave()) return na(id, "f must be convex or concave");
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    HermitianMatrix mean = 0.5 * (a + b);
    double tm = apply_function(f, mean).trace();
    double ts = 0.5 * (apply_function(f, a).trace() + apply_function(f, b).trace());
    return f.is_concave() ? scalar_eval(id, ts, tm) : scalar_eval(id, tm, ts);
}

inline StatementEvaluation rotfeld_trace(const InequalityOperands& o) {
    const std::string id = "rotfeld-1.2";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    auto f0 = f.value_at_zero();
    if (!f0) return na(id, "f(0) required");
    double ts = apply_function(f, a + b).trace();
    double tsum = apply_function(f, a).trace() + apply_function(f, b).trace();
    if (f.is_concave() && *f0 >= 0.0) return scalar_eval(id, ts, tsum);
    if (f.is_convex() && *f0 <= 0.0) return scalar_eval(id, tsum, ts);
    return na(id, "need concave f(0)>=0 or convex f(0)<=0");
}

// shared operand plumbing for the C*-combination statements: gens = Z_i,
// herms = A_i; returns L = f(sum Z* A Z) and M = sum Z* f(A) Z
struct CStarParts {
    HermitianMatrix arg, lhs, rhs;
    CStarParts(const ScalarFunction& f, const InequalityOperands& o)
        : arg(HermitianMatrix::zero(static_cast<int>(o.gens[0].cols()))),
          lhs(arg), rhs(arg) {
        const int d = static_cast<int>(o.gens[0].cols());
        Matrix acc_arg = Matrix::Zero(d, d), acc_rhs = Matrix::Zero(d, d);
        for (std::size_t i = 0; i < o.gens.size(); ++i) {
            acc_arg += o.gens[i].adjoint() * o.herms[i].mat() * o.gens[i];
            acc_rhs += o.gens[i].adjoint() *
                       apply_function(f, o.herms[i]).mat() * o.gens[i];
        }
        arg = HermitianMatrix::symmetrized(acc_arg);
        lhs = apply_function(f, arg);
        rhs = HermitianMatrix::symmetrized(acc_rhs);
    }
};

inline bool cstar_shape_ok(const InequalityOperands& o) {
    if (o.gens.empty() || o.gens.size() != o.herms.size()) return false;
    for (std::size_t i = 0; i < o.gens.size(); ++i)
        if (o.gens[i].rows() != o.herms[i].dim()) return false;
    return true;
}

// The two sides of the Jensen comparison: lhs = f applied after averaging,
// rhs = average of f.  Accepted either as (map, A) for a unital positive map
// or as blocks Z_i with sum Z_i* Z_i = I paired with operands A_i.
struct JensenSides {
    bool ok = false;
    std::string why;
    HermitianMatrix lhs = HermitianMatrix::zero(1);
    HermitianMatrix rhs = HermitianMatrix::zero(1);
};

inline JensenSides jensen_sides(const ScalarFunction& f, const InequalityOperands& o) {
    JensenSides s;
    if (o.map && !o.herms.empty()) {
        if (o.map->classify_unitality().verdict != Unitality::unital) {
            s.why = "map must be unital";
            return s;
        }
        HermitianMatrix b = o.map->apply(o.herms[0]);
        s.lhs = apply_function(f, b);
        s.rhs = o.map->apply(apply_function(f, o.herms[0]));
        s.ok = true;
        return s;
    }
    if (cstar_shape_ok(o)) {
        if (!isometric_column(o.gens)) {
            s.why = "Z_i not an isometric column";
            return s;
        }
        CStarParts parts(f, o);
        s.lhs = parts.lhs;
        s.rhs = parts.rhs;
        s.ok = true;
        return s;
    }
    s.why = "needs (map, A) or blocks Z_i with operands A_i";
    return s;
}

inline StatementEvaluation hp_trace(const InequalityOperands& o) {
    const std::string id = "hp-trace-2.6";
    if (!o.f) return na(id, "needs f");
    const ScalarFunction& f = *o.f;
    if (!f.is_convex() && !f.is_concave()) return na(id, "f must be convex or concave");
    JensenSides s = jensen_sides(f, o);
    if (!s.ok) return na(id, s.why);
    double tl = s.lhs.trace(), tr = s.rhs.trace();
    return f.is_convex() ? scalar_eval(id, tl, tr) : scalar_eval(id, tr, tl);
}

inline StatementEvaluation bk_trace(const InequalityOperands& o) {
    const std::string id = "bk-trace-2.7";
    if (!o.f || o.gens.empty() || o.herms.empty()) return na(id, "needs Z, A and f");
    const ScalarFunction& f = *o.f;
    const Matrix& z = o.gens[0];
    const HermitianMatrix& a = o.herms[0];
    if (z.rows() != a.dim() || z.rows() != z.cols())
        return na(id, "Z must be square matching A");
    if (!is_contraction(z)) return na(id, "Z must be a contraction");
    auto f0 = f.value_at_zero();
    if (!f0) return na(id, "f(0) required");
    HermitianMatrix zaz = HermitianMatrix::symmetrized(z.adjoint() * a.mat() * z);
    double tl = apply_function(f, zaz).trace();
    double tr = HermitianMatrix::symmetrized(
                    z.adjoint() * apply_function(f, a).mat() * z)
                    .trace();
    if (f.is_convex() && *f0 <= 0.0) return scalar_eval(id, tl, tr);
    if (f.is_concave() && *f0 >= 0.0) return scalar_eval(id, tr, tl);
    return na(id, "need convex f(0)<=0 or concave f(0)>=0");
}

inline StatementEvaluation det_mean(const InequalityOperands& o) {
    const std::string id = "det-2.3";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!f.is_concave()) return na(id, "f must be concave");
    HermitianMatrix mean = 0.5 * (a + b);
    if (!f_nonneg_on(f, {&a, &b, &mean})) return na(id, "f must be non-negative");
    double rhs = minkowski_functional(apply_function(f, mean));
    double lhs = 0.5 * (minkowski_functional(apply_function(f, a)) +
                        minkowski_functional(apply_function(f, b)));
    return scalar_eval(id, lhs, rhs);
}

inline StatementEvaluation det_schur(const InequalityOperands& o) {
    const std::string id = "det-schur-2.8";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs Z, A and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix &z = o.herms[0], &a = o.herms[1];
    if (z.dim() != a.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(z)) return na(id, "Z must be PSD");
    for (int i = 0; i < z.dim(); ++i)
        if (z(i, i).real() > 1.0 + 1e-10) return na(id, "diag(Z) must be <= 1");
    if (!f.is_concave()) return na(id, "f must be concave");
    auto f0 = f.value_at_zero();
    if (!f0 || *f0 < 0.0) return na(id, "needs 0 in domain and f(0) >= 0");
    HermitianMatrix za = HermitianMatrix::symmetrized(z.mat().cwiseProduct(a.mat()));
    if (!f_nonneg_on(f, {&a, &za})) return na(id, "f must be non-negative");
    double rhs = hermitian_determinant(apply_function(f, za));
    double lhs = hermitian_determinant(HermitianMatrix::symmetrized(
        z.mat().cwiseProduct(apply_function(f, a).mat())));
    return scalar_eval(id, lhs, rhs);
}

inline StatementEvaluation fisher(const InequalityOperands& o) {
    const std::string id = "fisher";
    if (o.herms.empty()) return na(id, "needs a block matrix");
    const HermitianMatrix& h = o.herms[0];
    int n = o.split;
    if (n < 1 || n >= h.dim()) return na(id, "invalid split");
    if (!psd_ok(h)) return na(id, "H must be PSD");
    HermitianMatrix a{Matrix(h.mat().topLeftCorner(n, n))};
    HermitianMatrix b{Matrix(h.mat().bottomRightCorner(h.dim() - n, h.dim() - n))};
    return scalar_eval(id, hermitian_determinant(h),
                       hermitian_determinant(a) * hermitian_determinant(b));
}

inline StatementEvaluation minkowski(const InequalityOperands& o) {
    const std::string id = "minkowski-2.4";
    if (o.herms.size() < 2) return na(id, "needs A, B");
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    return scalar_eval(id, minkowski_functional(a) + minkowski_functional(b),
                       minkowski_functional(a + b));
}

inline StatementEvaluation antinorm(const InequalityOperands& o) {
    const std::string id = "antinorm-2.10";
    if (o.herms.size() < 2) return na(id, "needs A, B");
    if (o.p >= 0.0) return na(id, "needs p < 0");
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    double raw = std::numeric_limits<double>::infinity(), scale = 0.0;
    for (const auto& norm : sampled_norms()) {
        double rhs = anti_norm_derived(a + b, o.p, norm);
        double lhs = anti_norm_derived(a, o.p, norm) +
                     anti_norm_derived(b, o.p, norm);
        raw = std::min(raw, rhs - lhs);
        scale = std::max({scale, std::fabs(lhs), std::fabs(rhs)});
    }
    return gap_eval(id, raw, scale);
}

inline StatementEvaluation rotfeld_norm(const InequalityOperands& o) {
    const std::string id = "rotfeld-norm-3.1";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    if (!f.is_concave()) return na(id, "f must be concave");
    HermitianMatrix s = a + b;
    if (!f_nonneg_on(f, {&a, &b, &s})) return na(id, "f must be non-negative");
    RealVector svs = sv_of_function(f, s);
    RealVector sva = sv_of_function(f, a), svb = sv_of_function(f, b);
    RealVector sum = sva + svb;  // both sorted descending; sum stays sorted
    PrefixGap g = prefix_gap(svs, sum);
    StatementEvaluation e = gap_eval(id, g.raw, g.scale);
    e.note = "prefix-sum dominance == all symmetric norms";
    return e;
}

inline StatementEvaluation block_norm(const InequalityOperands& o) {
    const std::string id = "block-norm-3.5";
    if (o.herms.empty() || !o.f) return na(id, "needs H and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix& h = o.herms[0];
    int n = o.split;
    if (n < 1 || n >= h.dim()) return na(id, "invalid split");
    if (!psd_ok(h)) return na(id, "H must be PSD");
    if (!f.is_concave()) return na(id, "f must be concave");
    if (!f_nonneg_on(f, {&h})) return na(id, "f must be non-negative");
    HermitianMatrix a{Matrix(h.mat().topLeftCorner(n, n))};
    HermitianMatrix b{Matrix(h.mat().bottomRightCorner(h.dim() - n, h.dim() - n))};
    RealVector svh = sv_of_function(f, h);
    RealVector sva = sv_of_function(f, a), svb = sv_of_function(f, b);
    RealVector sum = RealVector::Zero(svh.size());
    for (int k = 0; k < svh.size(); ++k) {
        if (k < sva.size()) sum(k) += sva(k);
        if (k < svb.size()) sum(k) += svb(k);
    }
    PrefixGap g = prefix_gap(svh, sum);
    return gap_eval(id, g.raw, g.scale);
}

inline StatementEvaluation block_trace(const InequalityOperands& o) {
    const std::string id = "block-trace-3.5";
    if (o.herms.empty() || !o.f) return na(id, "needs H and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix& h = o.herms[0];
    int n = o.split;
    if (n < 1 || n >= h.dim()) return na(id, "invalid split");
    if (!psd_ok(h)) return na(id, "H must be PSD");
    if (!f.is_concave()) return na(id, "f must be concave");
    HermitianMatrix a{Matrix(h.mat().topLeftCorner(n, n))};
    HermitianMatrix b{Matrix(h.mat().bottomRightCorner(h.dim() - n, h.dim() - n))};
    double lhs = apply_function(f, h).trace();
    double rhs = apply_function(f, a).trace() + apply_function(f, b).trace();
    return scalar_eval(id, lhs, rhs);
}

inline StatementEvaluation det_subadd(const InequalityOperands& o) {
    const std::string id = "det-3.6";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and g");
    const ScalarFunction& g = *o.f;
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    if (!g.is_convex()) return na(id, "g must be convex");
    auto g0 = g.value_at_zero();
    if (!g0 || std::fabs(*g0) > 1e-12) return na(id, "needs g(0) = 0");
    HermitianMatrix s = a + b;
    if (!f_nonneg_on(g, {&a, &b, &s})) return na(id, "g must be non-negative");
    double rhs = minkowski_functional(apply_function(g, s));
    double lhs = minkowski_functional(apply_function(g, a)) +
                 minkowski_functional(apply_function(g, b));
    return scalar_eval(id, lhs, rhs);
}

inline StatementEvaluation norm_rotfeld(const InequalityOperands& o) {
    const std::string id = "norm-rotfeld-3.11";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    if (!f.is_concave()) return na(id, "f must be concave");
    HermitianMatrix s = a + b;
    if (!f_nonneg_on(f, {&a, &b, &s})) return na(id, "f must be non-negative");
    RealVector lhs = sv_of_function(f, s);
    RealVector rhs = singular_values_desc(
        (apply_function(f, a) + apply_function(f, b)).mat());
    PrefixGap g = prefix_gap(lhs, rhs);
    return gap_eval(id, g.raw, g.scale);
}

inline StatementEvaluation ando_diff(const InequalityOperands& o) {
    const std::string id = "ando-diff-3.11";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and f");
    const ScalarFunction& f = *o.f;
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    if (!f.operator_monotone()) return na(id, "f must be operator monotone");
    if (!f_nonneg_on(f, {&a, &b})) return na(id, "f must be non-negative");
    HermitianMatrix d = hermitian_abs(a - b);
    RealVector lhs =
        singular_values_desc((apply_function(f, a) - apply_function(f, b)).mat());
    RealVector rhs = sv_of_function(f, d);
    PrefixGap g = prefix_gap(lhs, rhs);
    return gap_eval(id, g.raw, g.scale);
}

inline StatementEvaluation poly_subadd(const InequalityOperands& o) {
    const std::string id = "poly-3.12";
    if (o.herms.size() < 2 || !o.f) return na(id, "needs A, B and g");
    const ScalarFunction& g = *o.f;
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    auto m = g.degree();
    if (!m || *m < 1) return na(id, "g must be a polynomial of degree >= 1");
    HermitianMatrix ga = apply_function(g, a), gb = apply_function(g, b),
                    gs = apply_function(g, a + b);
    double inv_m = 1.0 / *m;
    double raw = std::numeric_limits<double>::infinity(), scale = 0.0;
    for (const auto& norm : sampled_norms()) {
        double lhs = std::pow(norm(gs), inv_m);
        double rhs = std::pow(norm(ga), inv_m) + std::pow(norm(gb), inv_m);
        raw = std::min(raw, rhs - lhs);
        scale = std::max({scale, lhs, rhs});
    }
    return gap_eval(id, raw, scale);
}

inline StatementEvaluation schatten_triangle(const InequalityOperands& o) {
    const std::string id = "schatten-triangle";
    if (o.herms.size() < 2) return na(id, "needs A, B");
    if (o.p <= 1.0) return na(id, "needs p > 1");
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    SymmetricNorm norm = SymmetricNorm::schatten(o.p);
    return scalar_eval(id, norm(a + b), norm(a) + norm(b));
}

inline StatementEvaluation expansive_trace(const InequalityOperands& o) {
    const std::string id = "expansive-trace";
    if (!o.f || o.gens.empty() || o.herms.empty()) return na(id, "needs Z, A and f");
    const ScalarFunction& f = *o.f;
    const Matrix& z = o.gens[0];
    const HermitianMatrix& a = o.herms[0];
    if (z.rows() != a.dim() || z.rows() != z.cols())
        return na(id, "Z must be square matching A");
    if (!is_expansive(z)) return na(id, "Z must be expansive");
    if (!psd_ok(a)) return na(id, "A must be PSD");
    if (!f.is_concave()) return na(id, "f must be concave");
    auto f0 = f.value_at_zero();
    if (!f0 || *f0 < 0.0) return na(id, "needs f(0) >= 0");
    HermitianMatrix zaz = HermitianMatrix::symmetrized(z.adjoint() * a.mat() * z);
    double lhs = apply_function(f, zaz).trace();
    double rhs = HermitianMatrix::symmetrized(
                     z.adjoint() * apply_function(f, a).mat() * z)
                     .trace();
    return scalar_eval(id, lhs, rhs);
}

inline StatementEvaluation choi(const InequalityOperands& o) {
    const std::string id = "choi";
    if (!o.f || !o.map || o.herms.empty()) return na(id, "needs map, A and f");
    const ScalarFunction& f = *o.f;
    if (!f.operator_convex() && !f.operator_concave())
        return na(id, "f must be operator convex or concave");
    if (o.map->classify_unitality().verdict != Unitality::unital)
        return na(id, "map must be unital");
    const HermitianMatrix& a = o.herms[0];
    HermitianMatrix image = o.map->apply(a);
    HermitianMatrix f_of_image = apply_function(f, image);
    HermitianMatrix image_of_f = o.map->apply(apply_function(f, a));
    return f.operator_convex() ? order_eval(id, f_of_image, image_of_f)
                               : order_eval(id, image_of_f, f_of_image);
}

inline StatementEvaluation hansen(const InequalityOperands& o) {
    const std::string id = "hansen";
    if (!o.f || o.gens.empty() || o.herms.empty()) return na(id, "needs Z, A and f");
    const ScalarFunction& f = *o.f;
    const Matrix& z = o.gens[0];
    const HermitianMatrix& a = o.herms[0];
    if (z.rows() != a.dim() || z.rows() != z.cols())
        return na(id, "Z must be square matching A");
    if (!is_contraction(z)) return na(id, "Z must be a contraction");
    if (!psd_ok(a)) return na(id, "A must be PSD");
    if (!f.operator_concave()) return na(id, "f must be operator concave");
    auto f0 = f.value_at_zero();
    if (!f0 || *f0 < 0.0) return na(id, "needs 0 in domain and f(0) >= 0");
    HermitianMatrix zaz = HermitianMatrix::symmetrized(z.adjoint() * a.mat() * z);
    HermitianMatrix lhs =
        HermitianMatrix::symmetrized(z.adjoint() * apply_function(f, a).mat() * z);
    return order_eval(id, lhs, apply_function(f, zaz));
}

inline StatementEvaluation operator_convexity(const InequalityOperands& o) {
    const std::string id = "opconv-1.6";
    if (o.herms.size() < 2) return na(id, "needs A, B");
    if (o.p < 1.0 || o.p > 2.0) return na(id, "needs p in [1,2]");
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    ScalarFunction f = make_power(o.p);
    HermitianMatrix lhs = apply_function(f, 0.5 * (a + b));
    HermitianMatrix rhs = 0.5 * (apply_function(f, a) + apply_function(f, b));
    return order_eval(id, lhs, rhs);
}

inline StatementEvaluation orbit_power(const InequalityOperands& o) {
    const std::string id = "orbit-1.7";
    if (o.herms.size() < 2) return na(id, "needs A, B");
    if (o.p <= 1.0) return na(id, "needs p > 1");
    const HermitianMatrix &a = o.herms[0], &b = o.herms[1];
    if (a.dim() != b.dim()) return na(id, "dimension mismatch");
    if (!psd_ok(a) || !psd_ok(b)) return na(id, "operands must be PSD");
    ScalarFunction f = make_power(o.p);
    RealVector lv = eigenvalues_desc(apply_function(f, 0.5 * (a + b)));
    RealVector rv =
        eigenvalues_desc(0.5 * (apply_function(f, a) + apply_function(f, b)));
    double raw = (rv - lv).minCoeff();
    double scale = std::max(std::fabs(lv(0)), std::fabs(rv(0)));
    StatementEvaluation e = gap_eval(id, raw, scale);
    e.order_statement = true;  // eigenvalue dominance == orbit order
    return e;
}

inline StatementEvaluation cond_bound(const InequalityOperands& o) {
    const std::string id = "cond-bound-2.19";
    if (o.gens.empty()) return na(id, "needs invertible A_1..A_m");
    if (o.omega < 1.0) return na(id, "needs omega >= 1");
    const auto dim = o.gens[0].rows();
    Matrix sum = Matrix::Zero(dim, dim);
    Matrix abs_sum = Matrix::Zero(dim, dim);
    for (const auto& z : o.gens) {
        if (z.rows() != dim || z.cols() != dim) return na(id, "shape mismatch");
        if (cond_number(z) > o.omega * (1.0 + 1e-9))
            return na(id, "condition number exceeds omega");
        sum += z;
        abs_sum += matrix_abs(z).mat();
    }
    double c = (o.omega + 1.0) / (2.0 * std::sqrt(o.omega));
    HermitianMatrix rhs = HermitianMatrix::symmetrized(c * abs_sum);
    return order_eval(id, matrix_abs(sum), rhs);
}

inline StatementEvaluation majorization(const InequalityOperands& o) {
    const std::string id = "majorization-2.9";
    if (!o.f) return na(id, "needs f");
    const ScalarFunction& f = *o.f;
    if (!f.is_convex() && !f.is_concave()) return na(id, "f must be convex or concave");
    JensenSides s = jensen_sides(f, o);
    if (!s.ok) return na(id, s.why);
    RealVector lv = eigenvalues_desc(s.lhs), rv = eigenvalues_desc(s.rhs);
    double raw, scale;
    if (f.is_convex()) {
        // weak majorization: descending prefix sums of the averaged side
        // stay below those of the average of f
        RealVector pl = prefix_sums(lv), pr = prefix_sums(rv);
        raw = (pr - pl).minCoeff();
        scale = std::max(std::fabs(pl(pl.size() - 1)), std::fabs(pr(pr.size() - 1)));
    } else {
        // weak supermajorization: ascending prefix sums dominate instead
        RealVector pl = prefix_sums(RealVector(lv.reverse()));
        RealVector pr = prefix_sums(RealVector(rv.reverse()));
        raw = (pl - pr).minCoeff();
        scale = std::max(std::fabs(pl(pl.size() - 1)), std::fabs(pr(pr.size() - 1)));
    }
    return gap_eval(id, raw, scale);
}

inline StatementEvaluation odd_index(const InequalityOperands& o) {
    const std::string id = "odd-index-2.9";
    if (!o.f) return na(id, "needs f");
    const ScalarFunction& f = *o.f;
    if (!f.is_convex()) return na(id, "f must be convex");
    JensenSides s = jensen_sides(f, o);
    if (!s.ok) return na(id, s.why);
    RealVector lv = eigenvalues_desc(s.lhs), rv = eigenvalues_desc(s.rhs);
    double raw = std::numeric_limits<double>::infinity();
    for (int k = 1; 2 * k - 1 <= lv.size(); ++k)
        raw = std::min(raw, rv(k - 1) - lv(2 * k - 2));
    double scale = std::max(std::fabs(lv(0)), std::fabs(rv(0)));
    return gap_eval(id, raw, scale);
}

inline StatementEvaluation triangle_general(const InequalityOperands& o) {
    const std::string id = "triangle-br";
    if (o.gens.size() < 2) return na(id, "needs X, Y");
    const Matrix &x = o.gens[0], &y = o.gens[1];
    if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols())
        return na(id, "operands must be square of equal dims");
    Matrix s = x + y;
    Matrix w = polar_unitary(s).unitary;
    HermitianMatrix right_abs =
        matrix_abs(x.adjoint()) + matrix_abs(y.adjoint());
    HermitianMatrix rhs = HermitianMatrix::symmetrized(
        0.5 * ((matrix_abs(x) + matrix_abs(y)).mat() +
               w.adjoint() * right_abs.mat() * w));
    return order_eval(id, matrix_abs(s), rhs);
}

}  // namespace detail

inline const std::map<std::string, detail::Evaluator>& statement_registry() {
    static const std::map<std::string, detail::Evaluator> reg = {
        {"vn-trace-1.1", detail::vn_trace},
        {"rotfeld-1.2", detail::rotfeld_trace},
        {"hp-trace-2.6", detail::hp_trace},
        {"bk-trace-2.7", detail::bk_trace},
        {"det-2.3", detail::det_mean},
        {"det-schur-2.8", detail::det_schur},
        {"fisher", detail::fisher},
        {"minkowski-2.4", detail::minkowski},
        {"antinorm-2.10", detail::antinorm},
        {"rotfeld-norm-3.1", detail::rotfeld_norm},
        {"block-norm-3.5", detail::block_norm},
        {"block-trace-3.5", detail::block_trace},
        {"det-3.6", detail::det_subadd},
        {"norm-rotfeld-3.11", detail::norm_rotfeld},
        {"ando-diff-3.11", detail::ando_diff},
        {"poly-3.12", detail::poly_subadd},
        {"schatten-triangle", detail::schatten_triangle},
        {"expansive-trace", detail::expansive_trace},
        {"choi", detail::choi},
        {"hansen", detail::hansen},
        {"opconv-1.6", detail::operator_convexity},
        {"orbit-1.7", detail::orbit_power},
        {"cond-bound-2.19", detail::cond_bound},
        {"majorization-2.9", detail::majorization},
        {"odd-index-2.9", detail::odd_index},
        {"triangle-br", detail::triangle_general},
    };
    return reg;
}

inline std::vector<std::string> statement_ids() {
    std::vector<std::string> out;
    for (const auto& [id, fn] : statement_registry()) out.push_back(id);
    return out;
}

inline StatementEvaluation evaluate_inequality(const std::string& id,
                                               const InequalityOperands& ops) {
    auto it = statement_registry().find(id);
    if (it == statement_registry().end()) throw Error("unknown statement id: " + id);
    try {
        return it->second(ops);
    } catch (const DomainError& e) {
        return detail::na(id, std::string("domain: ") + e.what());
    }
}

// The counterexample template showing plain superadditivity of f cannot
// replace concavity: A, B share the trace pair (s, t) but A + B = diag(s, t).
// Returns Tr f(A) + Tr f(B) - Tr f(A+B), negative for f(t) = t^2 at s != t.
inline double trace_subadditivity_margin(double s, double t, const ScalarFunction& f) {
    if (s <= 0.0 || t <= 0.0)
        throw PreconditionError("trace_subadditivity_margin: need s, t > 0");
    double c = std::sqrt(s * t);
    Matrix am(2, 2), bm(2, 2);
    am << 0.5 * s, 0.5 * c, 0.5 * c, 0.5 * t;
    bm << 0.5 * s, -0.5 * c, -0.5 * c, 0.5 * t;
    HermitianMatrix a{am}, b{bm};
    double lhs = apply_function(f, a + b).trace();
    double rhs = apply_function(f, a).trace() + apply_function(f, b).trace();
    return rhs - lhs;
}

}  // namespace orbit
