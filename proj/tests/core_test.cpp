// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "orbit.hpp"

using namespace orbit;
using Catch::Approx;

namespace {

HermitianMatrix diag3(double a, double b, double c) {
    RealVector v(3);
    v << a, b, c;
    return HermitianMatrix::diagonal(v);
}

HermitianMatrix diag2(double a, double b) {
    RealVector v(2);
    v << a, b;
    return HermitianMatrix::diagonal(v);
}

}  // namespace

TEST_CASE("hermitian gate rejects asymmetric input") {
    Matrix m(2, 2);
    m << Complex(1, 0), Complex(2, 0), Complex(0, 0), Complex(1, 0);
    CHECK_THROWS_AS(HermitianMatrix{m}, Error);
    // symmetrized() only absorbs roundoff-sized asymmetry
    CHECK_THROWS_AS(HermitianMatrix::symmetrized(m), PreconditionError);
    Matrix r(2, 2);
    r << Complex(1, 0), Complex(2, 1e-10), Complex(2, 1e-10), Complex(1, 0);
    HermitianMatrix s = HermitianMatrix::symmetrized(r);
    CHECK(s(0, 1).real() == Approx(2.0));
    CHECK(s(0, 1).imag() == Approx(0.0).margin(1e-15));
}

TEST_CASE("spectral decomposition sorts descending and reconstructs") {
    HermitianMatrix a = diag3(3.0, 1.0, 2.0);
    SpectralDecomposition sd = spectral_decompose(a);
    CHECK(sd.eigenvalues(0) == Approx(3.0));
    CHECK(sd.eigenvalues(1) == Approx(2.0));
    CHECK(sd.eigenvalues(2) == Approx(1.0));
    CHECK(max_abs(sd.frame.adjoint() * sd.frame - Matrix::Identity(3, 3)) < 1e-12);
    CHECK(max_abs((sd.reconstruct() - a).mat()) < 1e-12);
    CHECK(sd.spectral_radius() == Approx(3.0));
    CHECK(min_eigenvalue(a) == Approx(1.0));
}

TEST_CASE("apply_function matches matrix square") {
    CounterRng rng(3, "core", 0);
    for (int t = 0; t < 20; ++t) {
        HermitianMatrix a = random_hermitian_in(rng, rng.uniform_int(1, 6), 0.0, 3.0);
        HermitianMatrix sq = apply_function(make_power(2.0), a);
        CHECK(max_abs(sq.mat() - a.mat() * a.mat()) < 1e-10);
    }
}

TEST_CASE("apply_function rejects spectrum outside the domain") {
    CHECK_THROWS_AS(apply_function(make_log(), diag2(1.0, -1.0)), DomainError);
    CHECK_THROWS_AS(apply_function(make_power(0.5), diag2(1.0, -0.5)), DomainError);
}

TEST_CASE("polar decomposition of a signed diagonal") {
    HermitianMatrix x = diag2(-2.0, 3.0);
    PolarDecomposition pd = polar_unitary(x.mat());
    CHECK(max_abs(pd.abs.mat() - diag2(2.0, 3.0).mat()) < 1e-12);
    CHECK(pd.unitary(0, 0).real() == Approx(-1.0));
    CHECK(pd.unitary(1, 1).real() == Approx(1.0));
    CHECK(max_abs(pd.unitary * pd.abs.mat() - x.mat()) < 1e-12);
}

TEST_CASE("abs, positive part and psd square root") {
    HermitianMatrix x = diag2(-2.0, 3.0);
    CHECK(max_abs(hermitian_abs(x).mat() - diag2(2.0, 3.0).mat()) < 1e-12);
    CHECK(max_abs(positive_part(x).mat() - diag2(0.0, 3.0).mat()) < 1e-12);
    CHECK(max_abs(sqrt_psd(diag2(4.0, 9.0)).mat() - diag2(2.0, 3.0).mat()) < 1e-12);
    CHECK_THROWS_AS(sqrt_psd(diag2(-1.0, 1.0)), PreconditionError);
}

TEST_CASE("matrix_abs of a general matrix") {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(3, 0), Complex(0, 0), Complex(0, 0);
    RealVector sv = singular_values_desc(m);
    CHECK(sv(0) == Approx(3.0));
    CHECK(sv(1) == Approx(0.0).margin(1e-14));
    CHECK(max_abs(matrix_abs(m).mat() - diag2(0.0, 3.0).mat()) < 1e-12);
}

TEST_CASE("align_eigenbasis certifies dominated spectra and rejects others") {
    CounterRng rng(5, "core-align", 0);
    HermitianMatrix x = diag2(1.0, 0.5);
    Matrix q = random_unitary(rng, 2);
    HermitianMatrix y = HermitianMatrix::symmetrized(
        q * diag2(3.0, 0.8).mat() * q.adjoint());
    Matrix u = align_eigenbasis(x, y);
    CHECK(is_unitary(u));
    OrderVerdict v = loewner_leq(x, HermitianMatrix::symmetrized(
                                        u * y.mat() * u.adjoint()));
    CHECK(v.holds);
    CHECK_THROWS_AS(align_eigenbasis(diag2(5.0, 0.0), diag2(1.0, 1.0)),
                    PreconditionError);
}

TEST_CASE("loewner order verdict on shifted operands") {
    HermitianMatrix a = diag2(1.0, 2.0);
    CHECK(loewner_leq(a, a + HermitianMatrix::identity(2)).holds);
    CHECK_FALSE(loewner_leq(a + HermitianMatrix::identity(2), a).holds);
}

TEST_CASE("scalar function parsing round trips") {
    for (const char* spec :
         {"pow:2", "pow:0.5", "abs", "pos", "affine:2,-1", "log",
          "poly:0,1,2", "pwl:0,0;1,2;4,3.5"}) {
        ScalarFunction f = parse_function(spec);
        CHECK(f.name() == spec);
    }
    CHECK(parse_function("pow:2")(3.0) == Approx(9.0));
    CHECK(parse_function("affine:2,-1")(2.0) == Approx(3.0));
    CHECK(parse_function("poly:0,1,2")(2.0) == Approx(10.0));
    CHECK(parse_function("pwl:0,0;1,2;4,3.5")(2.5) == Approx(2.75));
    CHECK(parse_function("pos")(-2.0) == 0.0);
    CHECK_THROWS_AS(parse_function("nope"), IoError);
    CHECK_THROWS_AS(parse_function("pow:"), IoError);
}

TEST_CASE("scalar function shape flags") {
    CHECK(make_power(2.0).is_convex());
    CHECK(make_power(0.5).is_concave());
    CHECK(make_power(0.5).is_nondecreasing());
    CHECK(make_abs().is_convex());
    CHECK_FALSE(make_abs().is_monotone());
    CHECK(make_log().is_concave());
    ScalarFunction hat = make_piecewise_linear({{0.0, 0.0}, {1.0, 1.0}, {4.0, 0.0}});
    CHECK(hat.is_concave());
    CHECK_FALSE(hat.is_monotone());
    ScalarFunction vee = make_piecewise_linear({{-4.0, 4.0}, {0.0, 0.0}, {5.0, 5.0}});
    CHECK(vee.is_convex());
    CHECK(make_affine(2.0, -1.0).value_at_zero().value() == Approx(-1.0));
}

TEST_CASE("monotone split of a vee-shaped function") {
    CHECK(monotone_split(make_abs(), -2.0, 3.0) == Approx(0.0).margin(1e-9));
    // monotone functions split at the boundary
    double s = monotone_split(make_power(2.0), 0.0, 3.0);
    CHECK(s <= 1e-9);
}

TEST_CASE("chord modification pins zero and keeps the tail") {
    ScalarFunction f = make_affine(0.5, 1.0);  // f(0) = 1
    ScalarFunction c = chord_modified(f, 2.0);
    CHECK(c(0.0) == Approx(0.0).margin(1e-15));
    CHECK(c(2.0) == Approx(f(2.0)));
    CHECK(c(3.0) == Approx(f(3.0)));
    CHECK(c(1.0) == Approx(f(2.0) / 2.0));
    CHECK(c.is_concave());
}

TEST_CASE("ky fan, sigma_k and schatten oracles") {
    CHECK(SymmetricNorm::ky_fan(2)(diag3(3.0, 1.0, 2.0)) == Approx(5.0));
    CHECK(sigma_k(diag3(1.0, -5.0, 3.0), 2) == Approx(4.0));
    CHECK(sigma_k(diag3(1.0, -5.0, 3.0), 3) == Approx(-1.0));
    for (double p : {1.5, 2.0, 3.0})
        CHECK(SymmetricNorm::schatten(p)(HermitianMatrix::identity(3)) ==
              Approx(std::pow(3.0, 1.0 / p)));
    CHECK(SymmetricNorm::trace_norm()(diag2(-2.0, 1.0)) == Approx(3.0));
    CHECK(SymmetricNorm::operator_norm()(diag2(-2.0, 1.0)) == Approx(2.0));
    CHECK(SymmetricNorm::normalized_trace()(diag3(1.0, 2.0, 3.0)) == Approx(2.0));
}

TEST_CASE("weak majorization verdict") {
    MajorizationVerdict v = weakly_majorized_by(diag2(1.0, 1.0), diag2(2.0, 0.0));
    CHECK(v.holds);
    CHECK(v.worst_gap == Approx(0.0).margin(1e-12));
    CHECK_FALSE(weakly_majorized_by(diag2(2.0, 0.5), diag2(2.0, 0.0)).holds);
}

TEST_CASE("prefix sums") {
    RealVector v(3);
    v << 3.0, 2.0, -1.0;
    RealVector p = prefix_sums(v);
    CHECK(p(0) == Approx(3.0));
    CHECK(p(1) == Approx(5.0));
    CHECK(p(2) == Approx(4.0));
}

TEST_CASE("minkowski functional and derived anti-norm") {
    CHECK(minkowski_functional(diag3(1.0, 8.0, 27.0)) == Approx(6.0));
    HermitianMatrix a = diag2(2.0, 8.0);
    CHECK(minkowski_functional(a) == Approx(4.0));
    // p -> 0- limit of the derived anti-norm approaches the functional
    CHECK(std::fabs(anti_norm_derived(a, -1e-4, SymmetricNorm::normalized_trace()) -
                    4.0) < 1e-2);
}

TEST_CASE("refined eigensolver agrees with the double-precision one") {
    CounterRng rng(17, "core-refine", 0);
    for (int t = 0; t < 10; ++t) {
        HermitianMatrix a = random_hermitian_in(rng, rng.uniform_int(1, 7), -2.0, 2.0);
        RealVector ev = eigenvalues_desc(a);
        auto refined = refined_eigenvalues(a);
        REQUIRE(static_cast<int>(refined.size()) == ev.size());
        for (int i = 0; i < ev.size(); ++i)
            CHECK(std::fabs(static_cast<double>(refined[i]) - ev(i)) < 1e-10);
        CHECK(std::fabs(refined_min_eigenvalue(a) - ev(ev.size() - 1)) < 1e-10);
        CHECK(std::fabs(refined_spectral_radius(a) -
                        spectral_decompose(a).spectral_radius()) < 1e-10);
    }
}

TEST_CASE("direct sums stack blocks") {
    HermitianMatrix s = direct_sum(diag2(1.0, 2.0), HermitianMatrix::zero(1));
    CHECK(s.dim() == 3);
    CHECK(s(0, 0).real() == Approx(1.0));
    CHECK(s(2, 2).real() == Approx(0.0));
}

TEST_CASE("counter rng streams are deterministic and disjoint") {
    CounterRng a(42, "stream", 7), b(42, "stream", 7), c(42, "stream", 8),
        d(43, "stream", 7);
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.next_u64() == b.next_u64());
    CounterRng a2(42, "stream", 7);
    CHECK(a2.next_u64() != c.next_u64());
    CHECK(a2.next_u64() != d.next_u64());
    CounterRng e(1, "bounds", 0);
    bool lo_hit = false, hi_hit = false;
    for (int i = 0; i < 200; ++i) {
        double u = e.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        int k = e.uniform_int(2, 4);
        CHECK(k >= 2);
        CHECK(k <= 4);
        lo_hit = lo_hit || k == 2;
        hi_hit = hi_hit || k == 4;
    }
    CHECK(lo_hit);
    CHECK(hi_hit);
}

TEST_CASE("hermitian determinant") {
    CHECK(hermitian_determinant(diag3(2.0, 3.0, 4.0)) == Approx(24.0));
    HermitianMatrix h{[] {
        Matrix m(2, 2);
        m << Complex(1, 0), Complex(0.5, 0), Complex(0.5, 0), Complex(1, 0);
        return m;
    }()};
    CHECK(hermitian_determinant(h) == Approx(0.75));
}
