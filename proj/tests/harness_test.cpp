// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "orbit.hpp"

using namespace orbit;
using Catch::Approx;

TEST_CASE("generator conformance") {
    for (int t = 0; t < 100; ++t) {
        CounterRng rng(51, "gen-conf", t);
        int dim = rng.uniform_int(1, 6);

        CHECK(is_unitary(random_unitary(rng, dim), 1e-10));

        RealVector ev = eigenvalues_desc(random_hermitian_in(rng, dim, -1.5, 2.5));
        CHECK(ev(0) <= 2.5 + 1e-9);
        CHECK(ev(ev.size() - 1) >= -1.5 - 1e-9);

        CHECK(min_eigenvalue(random_psd(rng, dim, 2.0)) >= -1e-12);

        RealVector sv = singular_values_desc(
            random_with_singular_values(rng, dim, 0.5, 3.0));
        CHECK(sv(0) <= 3.0 + 1e-9);
        CHECK(sv(sv.size() - 1) >= 0.5 - 1e-9);

        CHECK(singular_values_desc(random_contraction(rng, dim))(0) <= 1.0 + 1e-10);
        RealVector esv = singular_values_desc(random_expansive(rng, dim));
        CHECK(esv(esv.size() - 1) >= 1.0 - 1e-10);

        double omega = 1.0 + rng.uniform(0.0, 3.0);
        RealVector csv = singular_values_desc(random_conditioned(rng, dim, omega));
        CHECK(csv(0) / csv(csv.size() - 1) <= omega * (1.0 + 1e-9));
        RealVector usv = singular_values_desc(random_conditioned(rng, dim, 1.0));
        CHECK(usv(0) / usv(usv.size() - 1) <= 1.0 + 1e-9);

        int k = rng.uniform_int(2, 3);
        auto zs = random_isometric_column(rng, k, dim);
        Matrix acc = Matrix::Zero(dim, dim);
        for (const Matrix& z : zs) acc += z.adjoint() * z;
        CHECK(max_abs(acc - Matrix::Identity(dim, dim)) < 1e-10);

        HermitianMatrix corr = random_correlation(rng, dim);
        CHECK(min_eigenvalue(corr) >= -1e-10);
        for (int i = 0; i < dim; ++i) CHECK(corr(i, i).real() == Approx(1.0));

        HermitianMatrix sub = random_schur_subunital(rng, dim);
        CHECK(min_eigenvalue(sub) >= -1e-10);
        for (int i = 0; i < dim; ++i) CHECK(sub(i, i).real() <= 1.0 + 1e-12);

        CHECK(random_unit_vector(rng, dim).norm() == Approx(1.0));

        int src = 0;
        PositiveLinearMap phi = detail::random_unital_map(rng, dim, src);
        CHECK(max_abs(phi.apply_identity().mat() -
                      Matrix::Identity(phi.target_dim(), phi.target_dim())) < 1e-10);
    }
}

TEST_CASE("operand digests are stable, short and sensitive") {
    CounterRng rng(52, "digest", 0);
    InequalityOperands ops;
    ops.herms = {random_psd(rng, 3, 1.0)};
    ops.f = parse_function("pow:2");
    ops.p = 2.5;

    std::string d1 = operands_digest(ops);
    std::string d2 = operands_digest(ops);
    CHECK(d1 == d2);
    CHECK(d1.size() == 16);
    CHECK(d1.find_first_not_of("0123456789abcdef") == std::string::npos);

    InequalityOperands bumped = ops;
    bumped.herms[0] = bumped.herms[0] + HermitianMatrix::symmetrized(
                                            1e-9 * Matrix::Identity(3, 3));
    CHECK(operands_digest(bumped) != d1);

    InequalityOperands other = ops;
    other.p = 2.5000001;
    CHECK(operands_digest(other) != d1);
}

TEST_CASE("suite runs are deterministic for a fixed config") {
    SuiteConfig cfg;
    cfg.trials = 40;
    cfg.seed = 99;
    cfg.dim_lo = 1;
    cfg.dim_hi = 5;
    SuiteReport r1 = run_suite("thm-3.1", cfg);
    SuiteReport r2 = run_suite("thm-3.1", cfg);
    CHECK(strip_timing(suite_report_to_json(r1)).dump() ==
          strip_timing(suite_report_to_json(r2)).dump());
    CHECK(r1.trials == 40);
    CHECK(r1.evaluated == r2.evaluated);
    CHECK(r1.worst_margin == r2.worst_margin);
}

TEST_CASE("an empty suite run passes vacuously") {
    SuiteConfig cfg;
    cfg.trials = 0;
    SuiteReport r = run_suite("vn-trace-1.1", cfg);
    CHECK(r.passed());
    CHECK(r.evaluated == 0);
    CHECK(std::isinf(r.worst_margin));
    Json j = suite_report_to_json(r);
    CHECK_FALSE(j.contains("worst_margin"));
}

TEST_CASE("function overrides reach the instance generator") {
    CounterRng rng(53, "override", 0);
    SuiteInstance inst =
        generate_instance("thm-3.1", 3, rng, parse_function("pow:0.5"));
    REQUIRE(inst.ops.f.has_value());
    CHECK(inst.ops.f->name() == "pow:0.5");
}

TEST_CASE("unknown suites and conjectures are rejected") {
    SuiteConfig cfg;
    cfg.trials = 1;
    CHECK_THROWS_AS(run_suite("no-such-suite", cfg), Error);
    CHECK_THROWS_AS(fuzz_conjecture("no-such-conjecture", 10, 1), Error);
}

TEST_CASE("conjecture fuzzing is deterministic and flags its intent") {
    for (const std::string& id : conjecture_ids()) {
        FuzzReport a = fuzz_conjecture(id, 60, 7);
        FuzzReport b = fuzz_conjecture(id, 60, 7);
        CHECK(strip_timing(fuzz_report_to_json(a)).dump() ==
              strip_timing(fuzz_report_to_json(b)).dump());
        CHECK(a.budget == 60);
        bool refutes = a.findings_refute;
        if (id == "monotony-deletion-3.13")
            CHECK_FALSE(refutes);  // findings would be sought witnesses
        else
            CHECK(refutes);
    }
}

TEST_CASE("matrix json round trips") {
    CounterRng rng(54, "io-mat", 0);
    HermitianMatrix a = random_hermitian_in(rng, 3, -2.0, 2.0);
    Json j = matrix_to_json(a.mat());
    CHECK(j.contains("dim"));
    Matrix back = matrix_from_json(j);
    CHECK(max_abs(back - a.mat()) == 0.0);

    Matrix rect = random_ginibre(rng, 2, 4);
    Json jr = matrix_to_json(rect);
    CHECK(jr.contains("rows"));
    CHECK(jr.contains("cols"));
    CHECK(max_abs(matrix_from_json(jr) - rect) == 0.0);

    Json bad = matrix_to_json(a.mat());
    bad["entries"][0][0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(matrix_from_json(bad), IoError);
}

TEST_CASE("map json round trips for every concrete kind") {
    CounterRng rng(55, "io-map", 0);
    HermitianMatrix probe = random_hermitian_in(rng, 3, -1.0, 1.0);
    std::vector<PositiveLinearMap> maps;
    Matrix q = random_unitary(rng, 3);
    maps.push_back(PositiveLinearMap::compression(Matrix(q.leftCols(2))));
    maps.push_back(PositiveLinearMap::schur_multiplier(random_correlation(rng, 3)));
    maps.push_back(PositiveLinearMap::cstar_combination(
        {random_contraction(rng, 3), random_contraction(rng, 3)}));
    maps.push_back(PositiveLinearMap::vector_expectation(random_unit_vector(rng, 3)));

    for (const PositiveLinearMap& m : maps) {
        PositiveLinearMap back = map_from_json(map_to_json(m));
        CHECK(back.kind() == m.kind());
        CHECK(max_abs(back.apply(probe).mat() - m.apply(probe).mat()) < 1e-14);
    }

    PositiveLinearMap ext = sub_unital_extend(PositiveLinearMap::cstar_combination(
        {Matrix(0.5 * Matrix::Identity(2, 2))}));
    CHECK_THROWS_AS(map_to_json(ext), IoError);
}

TEST_CASE("operand bundles round trip") {
    CounterRng rng(56, "io-ops", 0);
    InequalityOperands ops;
    ops.herms = {random_psd(rng, 2, 1.0), random_psd(rng, 2, 1.0)};
    ops.gens = {random_contraction(rng, 2)};
    ops.map = PositiveLinearMap::schur_multiplier(random_correlation(rng, 2));
    ops.f = parse_function("pow:0.5");
    ops.p = -1.5;
    ops.omega = 3.0;
    ops.split = 1;

    InequalityOperands back = operands_from_json(operands_to_json(ops));
    REQUIRE(back.herms.size() == 2);
    REQUIRE(back.gens.size() == 1);
    REQUIRE(back.map.has_value());
    REQUIRE(back.f.has_value());
    CHECK(max_abs(back.herms[0].mat() - ops.herms[0].mat()) == 0.0);
    CHECK(max_abs(back.gens[0] - ops.gens[0]) == 0.0);
    CHECK(back.f->name() == "pow:0.5");
    CHECK(back.p == -1.5);
    CHECK(back.omega == 3.0);
    CHECK(back.split == 1);
    CHECK(operands_digest(back) == operands_digest(ops));
}

TEST_CASE("witness certificates serialize with their input digest") {
    CounterRng rng(57, "io-cert", 0);
    SuiteInstance inst = generate_instance("thm-3.1", 3, rng);
    WitnessCertificate cert = compute_witness("thm-3.1", inst.ops);
    Json j = certificate_to_json(cert, operands_digest(inst.ops));
    CHECK(j.at("statement_id") == "thm-3.1");
    CHECK(j.at("valid") == cert.valid());
    CHECK(j.at("unitaries").size() == cert.unitaries.size());
    CHECK(j.at("input_hashes").at("operands") == operands_digest(inst.ops));
    CHECK(j.at("residual_min_eigenvalue").get<double>() ==
          Approx(cert.min_residual_eigenvalue));
    CHECK(j.at("tolerance").get<double>() == Approx(cert.tolerance_used));
}

TEST_CASE("json files round trip through the filesystem") {
    Json j;
    j["hello"] = 42;
    j["vec"] = {1.0, 2.5};
    std::string path = "/tmp/orbit_io_test.json";
    write_json_file(path, j);
    Json back = read_json_file(path);
    CHECK(back == j);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("/tmp/orbit_no_such_file.json"), IoError);
}
