// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "orbit.hpp"

using namespace orbit;
using Catch::Approx;

namespace {

HermitianMatrix diag2(double a, double b) {
    RealVector v(2);
    v << a, b;
    return HermitianMatrix::diagonal(v);
}

InequalityOperands two_herms(HermitianMatrix a, HermitianMatrix b, const char* f) {
    InequalityOperands o;
    o.herms = {std::move(a), std::move(b)};
    o.f = parse_function(f);
    return o;
}

}  // namespace

TEST_CASE("trace jensen at the midpoint: convex and concave orientation") {
    InequalityOperands o = two_herms(diag2(0.0, 2.0), diag2(2.0, 0.0), "pow:2");
    StatementEvaluation e = evaluate_inequality("vn-trace-1.1", o);
    REQUIRE(e.applicable);
    // Tr mean(A,B)^2 = 2, mean of Tr squares = 4
    CHECK(e.raw_margin == Approx(2.0));
    CHECK(e.margin == Approx(0.5));

    o.f = parse_function("pow:0.5");
    e = evaluate_inequality("vn-trace-1.1", o);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(2.0 - std::sqrt(2.0)));
}

TEST_CASE("trace subadditivity of concave functions and its convex reverse") {
    InequalityOperands o = two_herms(diag2(1.0, 0.0), diag2(0.0, 1.0), "pow:0.5");
    StatementEvaluation e = evaluate_inequality("rotfeld-1.2", o);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(0.0).margin(1e-12));

    RealVector one(1);
    one << 1.0;
    InequalityOperands c;
    c.herms = {HermitianMatrix::diagonal(one), HermitianMatrix::diagonal(one)};
    c.f = parse_function("pow:2");
    e = evaluate_inequality("rotfeld-1.2", c);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(2.0));  // Tr(A+B)^2 - (Tr A^2 + Tr B^2) = 4 - 2
    CHECK(e.margin == Approx(0.5));

    // hypothesis gate: concave with f(0) < 0 is not covered
    InequalityOperands bad = two_herms(diag2(1.0, 2.0), diag2(2.0, 1.0), "pow:0.5");
    bad.f = bad.f->shifted(-1.0);
    StatementEvaluation nae = evaluate_inequality("rotfeld-1.2", bad);
    CHECK_FALSE(nae.applicable);
}

TEST_CASE("trace jensen under a unital expectation") {
    Vector h(2);
    h << Complex(1.0 / std::sqrt(2.0), 0), Complex(1.0 / std::sqrt(2.0), 0);
    InequalityOperands o;
    o.herms = {diag2(0.0, 2.0)};
    o.map = PositiveLinearMap::vector_expectation(h);
    o.f = parse_function("pow:2");
    StatementEvaluation e = evaluate_inequality("hp-trace-2.6", o);
    REQUIRE(e.applicable);
    // f(mean) = 1 vs mean of f = 2
    CHECK(e.raw_margin == Approx(1.0));
    CHECK(e.margin == Approx(0.5));

    // sub-unital maps are out of hypothesis: not-applicable, never a failure
    o.map = PositiveLinearMap::cstar_combination({Matrix(0.5 * Matrix::Identity(2, 2))});
    e = evaluate_inequality("hp-trace-2.6", o);
    CHECK_FALSE(e.applicable);
    CHECK(e.note == "map must be unital");
}

TEST_CASE("trace jensen for contractions") {
    Matrix ones = Matrix::Ones(2, 2);
    Matrix z = Matrix::Zero(2, 2);
    z(0, 0) = 1.0;
    InequalityOperands o;
    o.herms = {HermitianMatrix{ones}};
    o.gens = {z};
    o.f = parse_function("pow:2");
    StatementEvaluation e = evaluate_inequality("bk-trace-2.7", o);
    REQUIRE(e.applicable);
    // Tr (Z*AZ)^2 = 1 vs Tr Z*(A^2)Z = 2
    CHECK(e.raw_margin == Approx(1.0));

    o.gens = {Matrix(2.0 * Matrix::Identity(2, 2))};  // not a contraction
    CHECK_FALSE(evaluate_inequality("bk-trace-2.7", o).applicable);
}

TEST_CASE("determinant-root concavity of the matrix mean") {
    InequalityOperands o = two_herms(diag2(1.0, 4.0), diag2(4.0, 1.0), "pow:0.5");
    StatementEvaluation e = evaluate_inequality("det-2.3", o);
    REQUIRE(e.applicable);
    // det^(1/2) of sqrt(mean) vs mean of det^(1/2) of the roots
    double rhs = std::sqrt(std::sqrt(2.5) * std::sqrt(2.5));
    double lhs = std::sqrt(2.0);
    CHECK(e.raw_margin == Approx(rhs - lhs));
}

TEST_CASE("determinant comparison under entrywise products") {
    Matrix zm(2, 2);
    zm << Complex(1, 0), Complex(0.6, 0), Complex(0.6, 0), Complex(1, 0);
    Matrix am(2, 2);
    am << Complex(2, 0), Complex(1, 0), Complex(1, 0), Complex(2, 0);
    InequalityOperands o;
    o.herms = {HermitianMatrix{zm}, HermitianMatrix{am}};
    o.f = parse_function("pow:0.5");
    StatementEvaluation e = evaluate_inequality("det-schur-2.8", o);
    REQUIRE(e.applicable);
    HermitianMatrix za =
        HermitianMatrix::symmetrized(zm.cwiseProduct(am));
    double rhs = hermitian_determinant(apply_function(parse_function("pow:0.5"), za));
    double lhs = hermitian_determinant(HermitianMatrix::symmetrized(
        zm.cwiseProduct(apply_function(parse_function("pow:0.5"), HermitianMatrix{am}).mat())));
    CHECK(e.raw_margin == Approx(rhs - lhs));
    CHECK(e.raw_margin >= -1e-12);

    // diagonal entries above one leave the hypothesis
    Matrix big = zm;
    big(0, 0) = 1.5;
    o.herms[0] = HermitianMatrix{big};
    CHECK_FALSE(evaluate_inequality("det-schur-2.8", o).applicable);
}

TEST_CASE("fisher block determinant bound") {
    Matrix hm(2, 2);
    hm << Complex(1, 0), Complex(0.5, 0), Complex(0.5, 0), Complex(1, 0);
    InequalityOperands o;
    o.herms = {HermitianMatrix{hm}};
    o.split = 1;
    StatementEvaluation e = evaluate_inequality("fisher", o);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(0.25));
    CHECK(e.margin == Approx(0.25));
}

TEST_CASE("superadditivity of the normalized determinant root") {
    InequalityOperands o;
    o.herms = {diag2(1.0, 4.0), diag2(4.0, 1.0)};
    StatementEvaluation e = evaluate_inequality("minkowski-2.4", o);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(1.0));  // 5 - (2 + 2)
    CHECK(e.margin == Approx(0.2));
}

TEST_CASE("derived anti-norms stay superadditive") {
    CounterRng rng(41, "st-anti", 0);
    InequalityOperands o;
    o.herms = {random_hermitian_in(rng, 3, 0.5, 2.0),
               random_hermitian_in(rng, 3, 0.5, 2.0)};
    o.p = -1.0;
    StatementEvaluation e = evaluate_inequality("antinorm-2.10", o);
    REQUIRE(e.applicable);
    CHECK(e.margin >= -1e-10);

    o.p = 2.0;
    CHECK_FALSE(evaluate_inequality("antinorm-2.10", o).applicable);
}

TEST_CASE("singular value dominance for concave functions of sums") {
    InequalityOperands o = two_herms(diag2(1.0, 0.0), diag2(0.0, 1.0), "pow:0.5");
    StatementEvaluation e = evaluate_inequality("rotfeld-norm-3.1", o);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(0.0).margin(1e-12));

    // no monotonicity requirement: a concave hat function is in hypothesis
    CounterRng rng(42, "st-rotnorm", 0);
    InequalityOperands hat;
    hat.herms = {random_psd(rng, 3, 1.0), random_psd(rng, 3, 1.0)};
    hat.f = parse_function("pwl:0,0;1,1;12,0");
    e = evaluate_inequality("rotfeld-norm-3.1", hat);
    REQUIRE(e.applicable);
    CHECK(e.margin >= -1e-10);
}

TEST_CASE("block statements match the sum statement through an embedding") {
    CounterRng rng(43, "st-block", 0);
    for (int t = 0; t < 6; ++t) {
        int n = rng.uniform_int(1, 3);
        HermitianMatrix a = random_psd(rng, n, 2.0);
        HermitianMatrix b = random_psd(rng, n, 2.0);
        // H = G* G for G = [A^(1/2)  B^(1/2)] stacked; diagonal blocks are A, B
        // and the nonzero spectrum of H agrees with that of A + B
        Matrix g(2 * n, n);
        g.topRows(n) = sqrt_psd(a).mat();
        g.bottomRows(n) = sqrt_psd(b).mat();
        HermitianMatrix h = HermitianMatrix::symmetrized(g * g.adjoint());

        InequalityOperands block;
        block.herms = {h};
        block.split = n;
        block.f = parse_function("pow:0.5");

        InequalityOperands sum = two_herms(a, b, "pow:0.5");

        StatementEvaluation eb = evaluate_inequality("block-trace-3.5", block);
        StatementEvaluation es = evaluate_inequality("rotfeld-1.2", sum);
        REQUIRE(eb.applicable);
        REQUIRE(es.applicable);
        CHECK(eb.raw_margin == Approx(es.raw_margin).margin(1e-8));

        StatementEvaluation en = evaluate_inequality("block-norm-3.5", block);
        REQUIRE(en.applicable);
        CHECK(en.margin >= -1e-10);
    }
}

TEST_CASE("determinant-root subadditivity for convex functions vanishing at zero") {
    InequalityOperands o = two_herms(diag2(1.0, 2.0), diag2(2.0, 1.0), "pow:2");
    StatementEvaluation e = evaluate_inequality("det-3.6", o);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(5.0));  // 9 - (2 + 2)

    o.f = parse_function("poly:1,0,1");  // g(0) = 1 breaks the hypothesis
    CHECK_FALSE(evaluate_inequality("det-3.6", o).applicable);
}

TEST_CASE("operator monotone difference bound applies only when justified") {
    CounterRng rng(44, "st-ando", 0);
    InequalityOperands o;
    o.herms = {random_psd(rng, 3, 2.0), random_psd(rng, 3, 2.0)};
    o.f = parse_function("pow:0.5");
    StatementEvaluation e = evaluate_inequality("ando-diff-3.11", o);
    REQUIRE(e.applicable);
    CHECK(e.margin >= -1e-10);

    o.f = parse_function("pow:2");  // convex, not operator monotone
    CHECK_FALSE(evaluate_inequality("ando-diff-3.11", o).applicable);

    InequalityOperands nr;
    nr.herms = o.herms;
    nr.f = parse_function("pow:0.5");
    StatementEvaluation en = evaluate_inequality("norm-rotfeld-3.11", nr);
    REQUIRE(en.applicable);
    CHECK(en.margin >= -1e-10);
}

TEST_CASE("eigenvalue majorization between the two jensen sides") {
    Vector h(2);
    h << Complex(1.0 / std::sqrt(2.0), 0), Complex(1.0 / std::sqrt(2.0), 0);
    InequalityOperands o;
    o.herms = {diag2(0.0, 2.0)};
    o.map = PositiveLinearMap::vector_expectation(h);
    o.f = parse_function("pow:2");
    StatementEvaluation e = evaluate_inequality("majorization-2.9", o);
    REQUIRE(e.applicable);
    CHECK(e.raw_margin == Approx(1.0));  // scalar case reduces to the trace gap

    StatementEvaluation eo = evaluate_inequality("odd-index-2.9", o);
    REQUIRE(eo.applicable);
    CHECK(eo.raw_margin == Approx(1.0));
}

TEST_CASE("condition-number triangle bound and its sharpness functional") {
    CounterRng rng(45, "st-cond", 0);
    // unitaries have condition number 1 and attain the bound with omega = 1
    Matrix u = random_unitary(rng, 3);
    std::vector<Matrix> as = {u, 2.0 * u, 0.5 * u};
    InequalityOperands o;
    o.gens = as;
    o.omega = 1.0;
    StatementEvaluation e = evaluate_inequality("cond-bound-2.19", o);
    REQUIRE(e.applicable);
    CHECK(e.margin >= -1e-10);
    CHECK(cond_sharpness_ratio(as, 1.0) == Approx(1.0).margin(1e-10));

    RealVector sv(3);
    sv << 4.0, 1.0, 1.0;
    o.gens = {u, HermitianMatrix::diagonal(sv).mat()};
    o.omega = 2.0;  // condition number 4 exceeds the declared omega
    CHECK_FALSE(evaluate_inequality("cond-bound-2.19", o).applicable);
}

TEST_CASE("unknown statement ids are reported as errors") {
    InequalityOperands o;
    CHECK_THROWS_AS(evaluate_inequality("no-such-statement", o), Error);
}

TEST_CASE("domain escapes surface as not-applicable rather than failures") {
    InequalityOperands o = two_herms(diag2(1.0, 2.0), diag2(2.0, 1.0), "pwl:0,0;1,1;2,0");
    // spectrum of A+B is {3, 3}, outside the hat's domain [0, 2]
    StatementEvaluation e = evaluate_inequality("rotfeld-1.2", o);
    CHECK_FALSE(e.applicable);
}

TEST_CASE("counterexample template: plain superadditivity cannot replace concavity") {
    CHECK(trace_subadditivity_margin(4.0, 1.0, parse_function("pow:2")) ==
          Approx(-4.5).margin(1e-10));
    CHECK(trace_subadditivity_margin(4.0, 1.0, parse_function("pow:0.5")) >= 0.0);
    CHECK(trace_subadditivity_margin(3.0, 3.0, parse_function("pow:2")) ==
          Approx(0.0).margin(1e-10));
    CHECK_THROWS_AS(trace_subadditivity_margin(0.0, 1.0, parse_function("pow:2")),
                    PreconditionError);
}

TEST_CASE("every registered statement answers on its generated operands") {
    // smoke: exercise each evaluator through the suite generator pairing
    for (const std::string& suite : suite_ids()) {
        CounterRng rng(46, "st-smoke-" + suite, 0);
        SuiteInstance inst = generate_instance(suite, 2, rng);
        TrialOutcome e = evaluate_suite_instance(suite, inst);
        INFO(suite << ": " << e.note);
        if (e.applicable) CHECK(e.margin >= -1e-9);
    }
}
