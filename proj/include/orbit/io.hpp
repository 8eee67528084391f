// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbit/positive_map.hpp"
#include "orbit/scalar_function.hpp"
#include "orbit/suite.hpp"
#include "orbit/witness.hpp"

namespace orbit {

using Json = nlohmann::json;

// ---- matrices -----------------------------------------------------------------
//
// Square matrices serialize as { "dim": n, "entries": [[[re,im], ...], ...] }
// row-major; rectangular ones use "rows"/"cols" instead of "dim".  Readers
// reject NaN and infinity.

namespace detail {

inline Complex entry_from_json(const Json& e) {
    double re, im;
    if (e.is_number()) {
        re = e.get<double>();
        im = 0.0;
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        re = e[0].get<double>();
        im = e[1].get<double>();
    } else {
        throw IoError("matrix entry must be a number or [re, im]");
    }
    if (!std::isfinite(re) || !std::isfinite(im))
        throw IoError("matrix entries must be finite");
    return {re, im};
}

}  // namespace detail

inline Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        entries.push_back(std::move(row));
    }
    Json out;
    if (m.rows() == m.cols()) {
        out["dim"] = m.rows();
    } else {
        out["rows"] = m.rows();
        out["cols"] = m.cols();
    }
    out["entries"] = std::move(entries);
    return out;
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("matrix must be a JSON object");
    long rows, cols;
    if (j.contains("dim")) {
        rows = cols = j.at("dim").get<long>();
    } else if (j.contains("rows") && j.contains("cols")) {
        rows = j.at("rows").get<long>();
        cols = j.at("cols").get<long>();
    } else {
        throw IoError("matrix needs \"dim\" or \"rows\"/\"cols\"");
    }
    if (rows < 1 || cols < 1) throw IoError("matrix dimensions must be positive");
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != rows)
        throw IoError("entries row count does not match");
    Matrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Json& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != cols)
            throw IoError("entries column count does not match");
        for (long c = 0; c < cols; ++c)
            m(i, c) = detail::entry_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

inline Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw IoError("vector must be a JSON array");
    Vector v(static_cast<long>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<long>(i)) = detail::entry_from_json(j[i]);
    return v;
}

inline Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (int i = 0; i < v.size(); ++i)
        out.push_back(Json::array({v(i).real(), v(i).imag()}));
    return out;
}

// ---- positive maps --------------------------------------------------------------
//
// {"kind":"compression","J":matrix} | {"kind":"schur","Z":matrix} |
// {"kind":"cstar","Zs":[matrix,...]} | {"kind":"expectation","h":vector}

inline Json map_to_json(const PositiveLinearMap& phi) {
    Json out;
    switch (phi.kind()) {
        case MapKind::compression:
            out["kind"] = "compression";
            out["J"] = matrix_to_json(phi.factors()[0]);
            break;
        case MapKind::schur:
            out["kind"] = "schur";
            out["Z"] = matrix_to_json(phi.schur_matrix().mat());
            break;
        case MapKind::cstar: {
            out["kind"] = "cstar";
            Json zs = Json::array();
            for (const auto& z : phi.factors()) zs.push_back(matrix_to_json(z));
            out["Zs"] = std::move(zs);
            break;
        }
        case MapKind::expectation:
            out["kind"] = "expectation";
            out["h"] = vector_to_json(phi.expectation_vector());
            break;
        case MapKind::extended:
            throw IoError("extended maps have no serialized form");
    }
    return out;
}

inline PositiveLinearMap map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw IoError("map descriptor needs a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "compression") return PositiveLinearMap::compression(matrix_from_json(j.at("J")));
    if (kind == "schur")
        return PositiveLinearMap::schur_multiplier(HermitianMatrix{matrix_from_json(j.at("Z"))});
    if (kind == "cstar") {
        std::vector<Matrix> zs;
        for (const auto& z : j.at("Zs")) zs.push_back(matrix_from_json(z));
        return PositiveLinearMap::cstar_combination(std::move(zs));
    }
    if (kind == "expectation")
        return PositiveLinearMap::vector_expectation(vector_from_json(j.at("h")));
    throw IoError("unknown map kind: " + kind);
}

// ---- operand bundles --------------------------------------------------------------
//
// { "herms": [matrix,...], "gens": [matrix,...], "map": descriptor,
//   "function": "pow:0.5", "p": 2.0, "omega": 1.0, "split": 1 }
// with every field optional.

inline InequalityOperands operands_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("operand bundle must be a JSON object");
    InequalityOperands ops;
    if (j.contains("herms"))
        for (const auto& m : j.at("herms"))
            ops.herms.emplace_back(matrix_from_json(m));
    if (j.contains("gens"))
        for (const auto& m : j.at("gens")) ops.gens.push_back(matrix_from_json(m));
    if (j.contains("map")) ops.map = map_from_json(j.at("map"));
    if (j.contains("function"))
        ops.f = parse_function(j.at("function").get<std::string>());
    if (j.contains("p")) ops.p = j.at("p").get<double>();
    if (j.contains("omega")) ops.omega = j.at("omega").get<double>();
    if (j.contains("split")) ops.split = j.at("split").get<int>();
    return ops;
}

inline Json operands_to_json(const InequalityOperands& ops) {
    Json out;
    Json herms = Json::array(), gens = Json::array();
    for (const auto& a : ops.herms) herms.push_back(matrix_to_json(a.mat()));
    for (const auto& g : ops.gens) gens.push_back(matrix_to_json(g));
    if (!herms.empty()) out["herms"] = std::move(herms);
    if (!gens.empty()) out["gens"] = std::move(gens);
    if (ops.map) out["map"] = map_to_json(*ops.map);
    if (ops.f) out["function"] = ops.f->name();
    out["p"] = ops.p;
    out["omega"] = ops.omega;
    out["split"] = ops.split;
    return out;
}

// ---- certificates -----------------------------------------------------------------

inline Json certificate_to_json(const WitnessCertificate& cert,
                                const std::string& input_hash) {
    Json out;
    out["statement_id"] = cert.statement_id;
    Json us = Json::array();
    for (const auto& u : cert.unitaries) us.push_back(matrix_to_json(u));
    out["unitaries"] = std::move(us);
    out["residual_min_eigenvalue"] = cert.min_residual_eigenvalue;
    out["tolerance"] = cert.tolerance_used;
    out["input_hashes"] = Json::object({{"operands", input_hash}});
    out["valid"] = cert.valid();
    return out;
}

// ---- reports ----------------------------------------------------------------------

inline Json config_to_json(const SuiteConfig& cfg) {
    Json out;
    out["dims"] = std::to_string(cfg.dim_lo) + ".." + std::to_string(cfg.dim_hi);
    out["trials"] = cfg.trials;
    out["seed"] = cfg.seed;
    out["tol"] = cfg.tol;
    if (cfg.function_override) out["function"] = cfg.function_override->name();
    return out;
}

inline Json suite_report_to_json(const SuiteReport& rep) {
    Json out;
    out["suite"] = rep.suite;
    out["trials"] = rep.trials;
    out["evaluated"] = rep.evaluated;
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
        Json one;
        one["trial"] = f.trial;
        one["seed"] = f.seed;
        one["operands_hash"] = f.operands_digest;
        one["statement_id"] = f.statement_id;
        one["margin"] = f.margin;
        one["raw_margin"] = f.raw_margin;
        if (!f.note.empty()) one["note"] = f.note;
        fails.push_back(std::move(one));
    }
    out["failures"] = std::move(fails);
    if (std::isfinite(rep.worst_margin)) {
        out["worst_margin"] = rep.worst_margin;
        out["worst_raw_margin"] = rep.worst_raw_margin;
    }
    out["wall_ms"] = rep.wall_ms;  // timestamp-class; excluded from determinism
    out["config"] = config_to_json(rep.config);
    return out;
}

inline Json fuzz_report_to_json(const FuzzReport& rep) {
    Json out;
    out["conjecture"] = rep.conjecture;
    out["budget"] = rep.budget;
    out["seed"] = rep.seed;
    out["findings_refute"] = rep.findings_refute;
    Json fs = Json::array();
    for (const auto& f : rep.findings) {
        Json one;
        one["trial"] = f.trial;
        one["operands_hash"] = f.operands_digest;
        one["margin"] = f.margin;
        one["note"] = f.note;
        fs.push_back(std::move(one));
    }
    out["findings"] = std::move(fs);
    if (std::isfinite(rep.worst)) out["worst"] = rep.worst;
    out["wall_ms"] = rep.wall_ms;
    return out;
}

// strips fields that legitimately vary between identical runs
inline Json strip_timing(Json j) {
    j.erase("wall_ms");
    return j;
}

// ---- files ------------------------------------------------------------------------

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace orbit
