// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "orbit.hpp"

using namespace orbit;
using Catch::Approx;

namespace {

HermitianMatrix sample_psd3() {
    Matrix m(3, 3);
    m << Complex(2.0, 0), Complex(0.5, 0.1), Complex(0, 0),
        Complex(0.5, -0.1), Complex(1.0, 0), Complex(0.3, 0),
        Complex(0, 0), Complex(0.3, 0), Complex(1.0, 0);
    return HermitianMatrix{m};
}

}  // namespace

TEST_CASE("compression map extracts the compressed block") {
    Matrix j = Matrix::Identity(3, 3).leftCols(2);
    PositiveLinearMap phi = PositiveLinearMap::compression(j);
    CHECK(phi.kind() == MapKind::compression);
    CHECK(phi.source_dim() == 3);
    CHECK(phi.target_dim() == 2);
    HermitianMatrix a = sample_psd3();
    HermitianMatrix out = phi.apply(a);
    CHECK(max_abs(out.mat() - a.mat().topLeftCorner(2, 2)) < 1e-14);
    CHECK(phi.classify_unitality().verdict == Unitality::unital);

    Matrix bad(3, 2);
    bad.setZero();
    bad(0, 0) = 1.0;
    bad(0, 1) = 1.0;  // columns not orthogonal
    CHECK_THROWS_AS(PositiveLinearMap::compression(bad), PreconditionError);
    CHECK_THROWS_AS(PositiveLinearMap::compression(Matrix(j.transpose())),
                    DimensionError);
}

TEST_CASE("schur multiplier applies entrywise and tracks unitality") {
    CounterRng rng(11, "maps-schur", 0);
    HermitianMatrix z = random_correlation(rng, 3);
    PositiveLinearMap phi = PositiveLinearMap::schur_multiplier(z);
    HermitianMatrix a = sample_psd3();
    HermitianMatrix out = phi.apply(a);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(out(i, k) - z(i, k) * a(i, k)) < 1e-14);
    CHECK(phi.classify_unitality().verdict == Unitality::unital);

    HermitianMatrix half = HermitianMatrix::symmetrized(0.5 * z.mat());
    CHECK(PositiveLinearMap::schur_multiplier(half).classify_unitality().verdict ==
          Unitality::sub_unital);

    RealVector neg(2);
    neg << 1.0, -0.5;
    CHECK_THROWS_AS(PositiveLinearMap::schur_multiplier(HermitianMatrix::diagonal(neg)),
                    PreconditionError);
}

TEST_CASE("cstar combination sums conjugations") {
    CounterRng rng(12, "maps-cstar", 0);
    std::vector<Matrix> zs = {random_contraction(rng, 3), random_contraction(rng, 3)};
    PositiveLinearMap phi = PositiveLinearMap::cstar_combination(zs);
    HermitianMatrix a = sample_psd3();
    Matrix expect = zs[0].adjoint() * a.mat() * zs[0] + zs[1].adjoint() * a.mat() * zs[1];
    CHECK(max_abs(phi.apply(a).mat() - expect) < 1e-13);

    // a single unitary factor is unital; a strict expansion is neither
    CHECK(PositiveLinearMap::cstar_combination({random_unitary(rng, 3)})
              .classify_unitality()
              .verdict == Unitality::unital);
    CHECK(PositiveLinearMap::cstar_combination({Matrix(2.0 * Matrix::Identity(2, 2))})
              .classify_unitality()
              .verdict == Unitality::neither);

    std::vector<Matrix> mixed = {Matrix::Identity(2, 2), Matrix::Identity(3, 3)};
    CHECK_THROWS_AS(PositiveLinearMap::cstar_combination(mixed), DimensionError);
    CHECK_THROWS_AS(PositiveLinearMap::cstar_combination({}), DimensionError);
}

TEST_CASE("vector expectation is a unital scalar-valued map") {
    Vector h(2);
    h << Complex(1.0 / std::sqrt(2.0), 0), Complex(0, 1.0 / std::sqrt(2.0));
    PositiveLinearMap phi = PositiveLinearMap::vector_expectation(h);
    CHECK(phi.target_dim() == 1);
    HermitianMatrix a{[] {
        Matrix m(2, 2);
        m << Complex(2, 0), Complex(0, -1), Complex(0, 1), Complex(3, 0);
        return m;
    }()};
    double expect = ((h.adjoint() * a.mat() * h)(0, 0)).real();
    CHECK(phi.apply(a)(0, 0).real() == Approx(expect));
    CHECK(phi.classify_unitality().verdict == Unitality::unital);

    Vector big(2);
    big << Complex(2, 0), Complex(0, 0);
    CHECK_THROWS_AS(PositiveLinearMap::vector_expectation(big), PreconditionError);
}

TEST_CASE("sub-unital maps extend to unital maps on one extra dimension") {
    CounterRng rng(13, "maps-extend", 0);
    Matrix z = 0.6 * random_contraction(rng, 3);
    PositiveLinearMap psi = PositiveLinearMap::cstar_combination({z});
    REQUIRE(psi.classify_unitality().verdict == Unitality::sub_unital);

    PositiveLinearMap ext = sub_unital_extend(psi);
    CHECK(ext.source_dim() == 4);
    CHECK(ext.target_dim() == 3);
    CHECK(ext.classify_unitality().verdict == Unitality::unital);

    HermitianMatrix a = sample_psd3();
    double corner = 0.7;
    RealVector cvec(1);
    cvec << corner;
    HermitianMatrix padded = direct_sum(a, HermitianMatrix::diagonal(cvec));
    HermitianMatrix got = ext.apply(padded);
    Matrix want = psi.apply(a).mat() +
                  corner * (Matrix::Identity(3, 3) - psi.apply_identity().mat());
    CHECK(max_abs(got.mat() - want) < 1e-12);

    PositiveLinearMap neither =
        PositiveLinearMap::cstar_combination({Matrix(2.0 * Matrix::Identity(2, 2))});
    CHECK_THROWS_AS(sub_unital_extend(neither), PreconditionError);
}

TEST_CASE("naimark dilation represents a PSD partition by projections") {
    // partition of the 2x2 identity into two PSD parts
    Matrix pm(2, 2);
    pm << Complex(0.75, 0), Complex(0.25, 0), Complex(0.25, 0), Complex(0.25, 0);
    HermitianMatrix p{pm};
    HermitianMatrix q = HermitianMatrix::symmetrized(Matrix::Identity(2, 2) - pm);
    DilationResult d = naimark_dilate({p, q});
    REQUIRE(d.parts() == 2);
    CHECK(d.big_dim == 4);
    for (const Matrix& proj : d.projections) {
        CHECK(max_abs(proj - proj.adjoint()) < 1e-12);
        CHECK(max_abs(proj * proj - proj) < 1e-10);
    }
    RealVector w(2);
    w << 2.0, -1.0;
    HermitianMatrix back = d.compress(d.represent(w));
    CHECK(max_abs(back.mat() - (2.0 * p.mat() - q.mat())) < 1e-10);

    RealVector not_one(1);
    not_one << 0.5;
    CHECK_THROWS_AS(naimark_dilate({HermitianMatrix::diagonal(not_one)}),
                    PreconditionError);
}

TEST_CASE("stinespring reduction recovers the map on random unital maps") {
    for (int t = 0; t < 20; ++t) {
        CounterRng rng(101, "maps-stine", t);
        int dim = rng.uniform_int(2, 5);
        int src = 0;
        PositiveLinearMap phi = detail::random_unital_map(rng, dim, src);
        HermitianMatrix a = random_hermitian_in(rng, src, 0.1, 3.0);
        StinespringReduction red = stinespring_reduce(phi, a);
        CHECK(max_abs(red.recover_input().mat() - phi.apply(a).mat()) < 1e-8);
        ScalarFunction f = make_power(2.0);
        HermitianMatrix fa = apply_function(f, a);
        CHECK(max_abs(red.recover(f).mat() - phi.apply(fa).mat()) < 1e-7);
    }

    PositiveLinearMap sub = PositiveLinearMap::cstar_combination(
        {Matrix(0.5 * Matrix::Identity(2, 2))});
    CHECK_THROWS_AS(stinespring_reduce(sub, HermitianMatrix::identity(2)),
                    PreconditionError);
}
