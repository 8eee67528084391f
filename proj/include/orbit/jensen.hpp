// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbit/positive_map.hpp"
#include "orbit/scalar_function.hpp"
#include "orbit/spectral.hpp"
#include "orbit/witness.hpp"

namespace orbit {

// f(Phi(A)) <= U Phi(f(A)) U* for monotone convex f and unital positive Phi
// (reversed for concave f).  The unitary simply aligns the two eigenframes;
// existence is equivalent to pairwise eigenvalue dominance.
inline WitnessCertificate jensen_witness_monotone(const ScalarFunction& f,
                                                  const PositiveLinearMap& phi,
                                                  const HermitianMatrix& a,
                                                  std::string id = "thm-2.1-monotone") {
    if (!f.is_monotone())
        throw PreconditionError("jensen_witness_monotone: function is not monotone");
    if (!f.is_convex() && !f.is_concave())
        throw PreconditionError("jensen_witness_monotone: function is neither convex nor concave");
    if (phi.classify_unitality().verdict != Unitality::unital)
        throw PreconditionError("jensen_witness_monotone: map is not unital");

    HermitianMatrix b = phi.apply(a);
    HermitianMatrix m = phi.apply(apply_function(f, a));
    HermitianMatrix fb = apply_function(f, b);

    if (f.is_convex()) {
        Matrix u = align_eigenbasis(fb, m);
        HermitianMatrix rhs = m.conjugate_by(u.adjoint());
        return certify(std::move(id), {u}, fb, rhs);
    }
    Matrix u = align_eigenbasis_under(m, fb);
    HermitianMatrix lhs = m.conjugate_by(u.adjoint());
    return certify(std::move(id), {u}, lhs, fb);
}

// Two-unitary form for arbitrary convex (or concave) f: split the spectrum
// of B = Phi(A) at a point r where f changes direction, align each part
// separately, and blend the two alignments with the diag(I, -I) pinching.
inline WitnessCertificate jensen_witness_general(const ScalarFunction& f,
                                                 const PositiveLinearMap& phi,
                                                 const HermitianMatrix& a,
                                                 std::string id = "thm-2.1-general") {
    const bool convex = f.is_convex();
    if (!convex && !f.is_concave())
        throw PreconditionError("jensen_witness_general: function is neither convex nor concave");
    if (phi.classify_unitality().verdict != Unitality::unital)
        throw PreconditionError("jensen_witness_general: map is not unital");

    HermitianMatrix b = phi.apply(a);
    HermitianMatrix m = phi.apply(apply_function(f, a));
    HermitianMatrix fb = apply_function(f, b);
    const int d = b.dim();

    SpectralDecomposition sb = spectral_decompose(b);
    double r = monotone_split(f, sb.eigenvalues(d - 1), sb.eigenvalues(0));

    // eigenvalues are non-increasing: indices [0, p) lie above the split,
    // [p, d) at or below it (within a 1e-12 band assigned to the lower part)
    int p = 0;
    while (p < d && sb.eigenvalues(p) > r + 1e-12) ++p;

    const Matrix& q = sb.frame;
    HermitianMatrix mt = m.conjugate_by(q);  // M in the eigenbasis of B

    auto diag_block = [&](int begin, int len) {
        return HermitianMatrix::diagonal(
            sb.eigenvalues.segment(begin, len).unaryExpr([&](double t) {
                return f(f.domain().clamp(t));
            }));
    };
    auto sub_block = [&](int begin, int len) {
        return HermitianMatrix{Matrix(mt.mat().block(begin, begin, len, len))};
    };

    Matrix w = Matrix::Zero(d, d);
    auto place = [&](int begin, int len, double sign_for_v) -> Matrix {
        HermitianMatrix fpart = diag_block(begin, len);
        HermitianMatrix mpart = sub_block(begin, len);
        Matrix u0 = convex ? align_eigenbasis(fpart, mpart)
                           : align_eigenbasis_under(mpart, fpart);
        w.block(begin, begin, len, len) = u0;
        return u0 * sign_for_v;
    };

    Matrix wv = Matrix::Zero(d, d);
    if (p > 0) wv.topLeftCorner(p, p) = place(0, p, 1.0);
    if (p < d) wv.bottomRightCorner(d - p, d - p) = place(p, d - p, -1.0);

    Matrix u = q * w * q.adjoint();
    Matrix v = q * wv * q.adjoint();

    HermitianMatrix mean = HermitianMatrix::symmetrized(
        (u * m.mat() * u.adjoint() + v * m.mat() * v.adjoint()) / 2.0);
    if (convex) return certify(std::move(id), {u, v}, fb, mean);
    return certify(std::move(id), {u, v}, mean, fb);
}

// ---- triangle-type constructions ------------------------------------------

struct TriangleWitness {
    Matrix w;  // polar unitary of the sum
    WitnessCertificate certificate;
};

// |X + Y| <= ( (|X|+|Y|) + W* (|X|+|Y|) W ) / 2 for normal X, Y.
inline TriangleWitness normal_triangle_witness(const Matrix& x, const Matrix& y,
                                               std::string id = "normal-triangle") {
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
        throw DimensionError("normal_triangle_witness: operands must be square, equal dims");
    auto normality_defect = [](const Matrix& z) {
        return max_abs(z * z.adjoint() - z.adjoint() * z) /
               std::max(1.0, max_abs(z * z.adjoint()));
    };
    if (normality_defect(x) > 1e-9 || normality_defect(y) > 1e-9)
        throw PreconditionError("normal_triangle_witness: operand is not normal");

    Matrix z = x + y;
    Matrix w = polar_unitary(z).unitary;
    HermitianMatrix g = matrix_abs(x) + matrix_abs(y);
    HermitianMatrix rhs =
        HermitianMatrix::symmetrized((g.mat() + g.conjugate_by(w).mat()) / 2.0);
    WitnessCertificate cert = certify(std::move(id), {w}, matrix_abs(z), rhs);
    return {std::move(w), std::move(cert)};
}

// f(|Z|) <= ( P f(|A|+|B|) P* + Q f(|A|+|B|) Q* ) / 2 where Z = A + iB is the
// Cartesian decomposition and f is nondecreasing convex on [0, inf).
inline WitnessCertificate cartesian_triangle_witness(const ScalarFunction& f,
                                                     const Matrix& z,
                                                     std::string id = "prop-2.11") {
    if (z.rows() != z.cols()) throw DimensionError("cartesian_triangle_witness: not square");
    if (!f.is_convex() || !f.is_nondecreasing())
        throw PreconditionError(
            "cartesian_triangle_witness: need a nondecreasing convex function");

    HermitianMatrix a = HermitianMatrix::symmetrized((z + z.adjoint()) / 2.0);
    Matrix bm = (z - z.adjoint()) / Complex(0, 2);
    HermitianMatrix b = HermitianMatrix::symmetrized(bm);

    TriangleWitness core = normal_triangle_witness(a.mat(), Complex(0, 1) * b.mat());
    const Matrix& w = core.w;

    HermitianMatrix g = hermitian_abs(a) + hermitian_abs(b);
    HermitianMatrix mid =
        HermitianMatrix::symmetrized((g.mat() + g.conjugate_by(w).mat()) / 2.0);

    HermitianMatrix absz = matrix_abs(z);
    Matrix u1 = align_eigenbasis(apply_function(f, absz), apply_function(f, mid));

    HermitianMatrix fg = apply_function(f, g);
    HermitianMatrix half =
        HermitianMatrix::symmetrized((fg.mat() + fg.conjugate_by(w).mat()) / 2.0);
    Matrix u2 = align_eigenbasis(apply_function(f, mid), half);

    Matrix pm = u1 * u2;
    Matrix qm = pm * w.adjoint();
    HermitianMatrix rhs = HermitianMatrix::symmetrized(
        (pm * fg.mat() * pm.adjoint() + qm * fg.mat() * qm.adjoint()) / 2.0);
    return certify(std::move(id), {pm, qm}, apply_function(f, absz), rhs);
}

struct PositivePartWitness {
    Matrix w;                    // difference of range and kernel projections
    WitnessCertificate pinch;    // (A+B)_+ against the two-term pinching
    WitnessCertificate composed; // with f applied on both sides
};

// (A+B)_+ <= ( M + W M W ) / 2 with M = A_+ + B_+ and W = E - F, where E is
// the projection onto the range of (A+B)_+ and F onto its complement; then
// f((A+B)_+) <= ( P f(M) P* + Q f(M) Q* ) / 2 for nondecreasing convex f.
inline PositivePartWitness positive_part_witness(const HermitianMatrix& a,
                                                 const HermitianMatrix& b,
                                                 const ScalarFunction& f,
                                                 std::string id = "prop-2.12") {
    if (a.dim() != b.dim()) throw DimensionError("positive_part_witness: dim mismatch");
    if (!f.is_convex() || !f.is_nondecreasing())
        throw PreconditionError("positive_part_witness: need a nondecreasing convex function");

    HermitianMatrix c = a + b;
    SpectralDecomposition sc = spectral_decompose(c);
    double theta = 1e-10 * sc.spectral_radius();
    RealVector signs(sc.dim());
    for (int i = 0; i < sc.dim(); ++i) signs(i) = sc.eigenvalues(i) > theta ? 1.0 : -1.0;
    Matrix w = sc.rebuild(signs).mat();  // E - F, a Hermitian unitary

    HermitianMatrix cpos = positive_part(c);
    HermitianMatrix m = positive_part(a) + positive_part(b);
    HermitianMatrix mid =
        HermitianMatrix::symmetrized((m.mat() + m.conjugate_by(w).mat()) / 2.0);
    WitnessCertificate pinch = certify(id + "-pinch", {w}, cpos, mid);

    Matrix u1 = align_eigenbasis(apply_function(f, cpos), apply_function(f, mid));
    HermitianMatrix fm = apply_function(f, m);
    HermitianMatrix half =
        HermitianMatrix::symmetrized((fm.mat() + fm.conjugate_by(w).mat()) / 2.0);
    Matrix u2 = align_eigenbasis(apply_function(f, mid), half);

    Matrix pm = u1 * u2;
    Matrix qm = pm * w;  // w is self-adjoint
    HermitianMatrix rhs = HermitianMatrix::symmetrized(
        (pm * fm.mat() * pm.adjoint() + qm * fm.mat() * qm.adjoint()) / 2.0);
    WitnessCertificate composed =
        certify(std::move(id), {pm, qm}, apply_function(f, cpos), rhs);
    return {std::move(w), std::move(pinch), std::move(composed)};
}

}  // namespace orbit
