// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: randomized verification suites, explicit order
// certificates, conjecture fuzzing, and the two-by-two trace-subadditivity
// reproduction.  Exit codes: 0 pass, 1 violation, 2 usage or I/O error.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbit.hpp"

namespace {

std::pair<int, int> parse_dim_range(const std::string& s) {
    try {
        std::size_t used = 0;
        auto pos = s.find("..");
        if (pos == std::string::npos) {
            int d = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {d, d};
        }
        int lo = std::stoi(s.substr(0, pos), &used);
        if (used != pos) throw std::invalid_argument(s);
        std::string tail = s.substr(pos + 2);
        int hi = std::stoi(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw orbit::IoError("bad dimension range '" + s + "' (want lo..hi or a single value)");
    }
}

std::vector<std::string> select_suites(const std::string& spec) {
    const std::vector<std::string> all = orbit::suite_ids();
    if (spec == "all") return all;
    std::vector<std::string> picked;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (std::find(all.begin(), all.end(), tok) == all.end())
            throw orbit::IoError("unknown suite id: " + tok);
        picked.push_back(tok);
    }
    if (picked.empty()) throw orbit::IoError("no suites selected");
    return picked;
}

int run_verify(const std::string& suite_spec, const std::string& dim_spec, int trials,
               std::uint64_t seed, double tol, const std::string& fn_spec,
               const std::string& out_path) {
    auto [lo, hi] = parse_dim_range(dim_spec);
    if (lo < 1 || hi < lo) throw orbit::IoError("dimension range must satisfy 1 <= lo <= hi");
    if (trials < 0) throw orbit::IoError("trials must be nonnegative");

    orbit::SuiteConfig cfg;
    cfg.dim_lo = lo;
    cfg.dim_hi = hi;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.tol = tol;
    if (!fn_spec.empty()) cfg.function_override = orbit::parse_function(fn_spec);

    const std::vector<std::string> ids = select_suites(suite_spec);
    orbit::Json reports = orbit::Json::array();
    bool all_pass = true;
    for (const auto& id : ids) {
        orbit::SuiteReport rep = orbit::run_suite(id, cfg);
        all_pass = all_pass && rep.passed();
        std::printf("%-22s %s  trials=%d evaluated=%d failures=%zu", id.c_str(),
                    rep.passed() ? "PASS" : "FAIL", rep.trials, rep.evaluated,
                    rep.failures.size());
        if (std::isfinite(rep.worst_margin))
            std::printf(" worst_margin=%.3e", rep.worst_margin);
        std::printf("\n");
        reports.push_back(orbit::suite_report_to_json(rep));
    }
    if (!out_path.empty()) {
        orbit::Json out =
            ids.size() == 1 ? reports[0] : orbit::Json{{"reports", reports}};
        orbit::write_json_file(out_path, out);
    }
    return all_pass ? 0 : 1;
}

int run_witness(const std::string& stmt, const std::string& input_path,
                const std::string& out_path) {
    orbit::InequalityOperands ops =
        orbit::operands_from_json(orbit::read_json_file(input_path));
    orbit::WitnessCertificate cert = orbit::compute_witness(stmt, ops);
    orbit::Json j = orbit::certificate_to_json(cert, orbit::operands_digest(ops));
    if (!out_path.empty()) orbit::write_json_file(out_path, j);
    std::printf("%s: %s  min_residual_eig=%.6e tolerance=%.3e unitaries=%zu\n",
                stmt.c_str(), cert.valid() ? "CERTIFIED" : "VIOLATION",
                cert.min_residual_eigenvalue, cert.tolerance_used,
                cert.unitaries.size());
    return cert.valid() ? 0 : 1;
}

int run_fuzz(const std::string& conjecture, int budget, std::uint64_t seed,
             const std::string& out_path) {
    const auto& ids = orbit::conjecture_ids();
    if (std::find(ids.begin(), ids.end(), conjecture) == ids.end())
        throw orbit::IoError("unknown conjecture id: " + conjecture);
    if (budget < 0) throw orbit::IoError("budget must be nonnegative");

    orbit::FuzzReport rep = orbit::fuzz_conjecture(conjecture, budget, seed);
    std::printf("%s: budget=%d findings=%zu%s\n", conjecture.c_str(), rep.budget,
                rep.findings.size(),
                rep.findings_refute ? "" : " (findings are sought witnesses)");
    for (const auto& f : rep.findings)
        std::printf("  trial=%d margin=%.6e hash=%s %s\n", f.trial, f.margin,
                    f.operands_digest.c_str(), f.note.c_str());
    if (!out_path.empty())
        orbit::write_json_file(out_path, orbit::fuzz_report_to_json(rep));
    // findings on the refuting conjectures are genuine violations; on the
    // witness-seeking one they are the expected output
    return rep.findings_refute && !rep.findings.empty() ? 1 : 0;
}

int run_repro(double s, double t, const std::string& fn_spec) {
    orbit::ScalarFunction f = orbit::parse_function(fn_spec);
    double margin = orbit::trace_subadditivity_margin(s, t, f);
    std::printf("s=%g t=%g function=%s margin=%.12g (%s)\n", s, t, f.name().c_str(),
                margin, margin >= -orbit::kTauOrder ? "subadditive" : "violated");
    return margin >= -orbit::kTauOrder ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized verifier for unitary-orbit matrix inequalities"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run randomized statement suites");
    std::string suite_spec = "all", dim_spec = "1..8", fn_spec, verify_out;
    int trials = 100;
    std::uint64_t seed = 2026;
    double tol = orbit::kTauOrder;
    verify->add_option("--suite", suite_spec, "comma-separated suite ids, or 'all'");
    verify->add_option("--dim", dim_spec, "dimension range lo..hi");
    verify->add_option("--trials", trials, "trials per suite");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--tol", tol, "normalized margin threshold");
    verify->add_option("--function", fn_spec, "fix the scalar function, e.g. pow:2");
    verify->add_option("--out", verify_out, "write the JSON report here");

    auto* witness = app.add_subcommand("witness", "order certificate for explicit operands");
    std::string stmt, input_path, witness_out;
    witness->add_option("--statement", stmt, "statement id")->required();
    witness->add_option("--input", input_path, "operand bundle JSON")->required();
    witness->add_option("--out", witness_out, "write the certificate here");

    auto* fuzz = app.add_subcommand("fuzz", "search for conjecture counterexamples");
    std::string conjecture, fuzz_out;
    int budget = 1000;
    std::uint64_t fuzz_seed = 2026;
    fuzz->add_option("--conjecture", conjecture, "conjecture id")->required();
    fuzz->add_option("--budget", budget, "number of trials");
    fuzz->add_option("--seed", fuzz_seed, "master seed");
    fuzz->add_option("--out", fuzz_out, "write the findings here");

    auto* repro = app.add_subcommand("repro-3.10", "two-by-two trace-subadditivity margin");
    double s = 4.0, t = 1.0;
    std::string repro_fn = "pow:2";
    repro->add_option("--s", s, "first diagonal weight");
    repro->add_option("--t", t, "second diagonal weight");
    repro->add_option("--function", repro_fn, "scalar function, e.g. pow:2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify)
            return run_verify(suite_spec, dim_spec, trials, seed, tol, fn_spec, verify_out);
        if (*witness) return run_witness(stmt, input_path, witness_out);
        if (*fuzz) return run_fuzz(conjecture, budget, fuzz_seed, fuzz_out);
        if (*repro) return run_repro(s, t, repro_fn);
    } catch (const orbit::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
