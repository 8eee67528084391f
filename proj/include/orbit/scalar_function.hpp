// Copyright 2026 the orbit developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbit/errors.hpp"
#include "orbit/random.hpp"

namespace orbit {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    static Interval real_line() { return {}; }
    static Interval closed(double a, double b) { return {a, b, false, false}; }
    static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }
    static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }

    bool lo_finite() const { return std::isfinite(lo); }
    bool hi_finite() const { return std::isfinite(hi); }

    // grace widens closed endpoints only; open endpoints stay strict
    bool contains(double t, double grace = 0.0) const {
        if (lo_finite()) {
            if (lo_open ? (t <= lo) : (t < lo - grace)) return false;
        }
        if (hi_finite()) {
            if (hi_open ? (t >= hi) : (t > hi + grace)) return false;
        }
        return true;
    }

    // clamp onto closed endpoints; precondition: contains(t, grace) held
    double clamp(double t) const {
        if (lo_finite() && !lo_open && t < lo) return lo;
        if (hi_finite() && !hi_open && t > hi) return hi;
        return t;
    }
};

enum class Convexity { convex, concave, affine, neither };
enum class Monotonicity { nondecreasing, nonincreasing, none };

// A scalar function together with the shape metadata the matrix-level
// constructions branch on.  The catalogue below covers the common cases;
// arbitrary functions can be described directly through the constructor.
class ScalarFunction {
public:
    ScalarFunction(std::string name, std::function<double(double)> eval,
                   Interval domain, Convexity convexity, Monotonicity monotonicity)
        : name_(std::move(name)),
          eval_(std::move(eval)),
          domain_(domain),
          convexity_(convexity),
          monotonicity_(monotonicity) {
        if (domain_.contains(0.0)) value_at_zero_ = eval_(0.0);
    }

    double operator()(double t) const { return eval_(t); }

    const std::string& name() const { return name_; }
    const Interval& domain() const { return domain_; }
    Convexity convexity() const { return convexity_; }
    Monotonicity monotonicity() const { return monotonicity_; }

    bool is_convex() const {
        return convexity_ == Convexity::convex || convexity_ == Convexity::affine;
    }
    bool is_concave() const {
        return convexity_ == Convexity::concave || convexity_ == Convexity::affine;
    }
    bool is_monotone() const { return monotonicity_ != Monotonicity::none; }
    bool is_nondecreasing() const { return monotonicity_ == Monotonicity::nondecreasing; }

    std::optional<double> value_at_zero() const { return value_at_zero_; }
    std::optional<double> declared_split() const { return split_point_; }
    const std::optional<std::vector<double>>& breakpoints() const { return breakpoints_; }
    std::optional<int> degree() const { return degree_; }

    bool operator_convex() const { return op_convex_; }
    bool operator_concave() const { return op_concave_; }
    bool operator_monotone() const { return op_monotone_; }

    ScalarFunction with_split(double r) const {
        ScalarFunction f = *this;
        f.split_point_ = r;
        return f;
    }
    ScalarFunction with_breakpoints(std::vector<double> xs) const {
        ScalarFunction f = *this;
        f.breakpoints_ = std::move(xs);
        return f;
    }
    ScalarFunction with_operator_flags(bool conv, bool conc, bool mono) const {
        ScalarFunction f = *this;
        f.op_convex_ = conv;
        f.op_concave_ = conc;
        f.op_monotone_ = mono;
        return f;
    }
    ScalarFunction with_degree(int m) const {
        ScalarFunction f = *this;
        f.degree_ = m;
        return f;
    }

    ScalarFunction negated() const {
        Convexity c = convexity_;
        if (c == Convexity::convex) c = Convexity::concave;
        else if (c == Convexity::concave) c = Convexity::convex;
        Monotonicity m = monotonicity_;
        if (m == Monotonicity::nondecreasing) m = Monotonicity::nonincreasing;
        else if (m == Monotonicity::nonincreasing) m = Monotonicity::nondecreasing;
        auto e = eval_;
        ScalarFunction f("neg(" + name_ + ")", [e](double t) { return -e(t); },
                         domain_, c, m);
        f.split_point_ = split_point_;
        f.breakpoints_ = breakpoints_;
        f.op_convex_ = op_concave_;
        f.op_concave_ = op_convex_;
        return f;
    }

    ScalarFunction shifted(double c) const {
        auto e = eval_;
        ScalarFunction f(name_ + (c >= 0 ? "+" : "") + format_double(c),
                         [e, c](double t) { return e(t) + c; }, domain_,
                         convexity_, monotonicity_);
        f.split_point_ = split_point_;
        f.breakpoints_ = breakpoints_;
        f.op_convex_ = op_convex_;
        f.op_concave_ = op_concave_;
        f.op_monotone_ = op_monotone_;
        return f;
    }

    static std::string format_double(double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }

private:
    std::string name_;
    std::function<double(double)> eval_;
    Interval domain_;
    Convexity convexity_;
    Monotonicity monotonicity_;
    std::optional<double> value_at_zero_;
    std::optional<double> split_point_;
    std::optional<std::vector<double>> breakpoints_;
    std::optional<int> degree_;
    bool op_convex_ = false;
    bool op_concave_ = false;
    bool op_monotone_ = false;
};

// ---- catalogue -----------------------------------------------------------

inline ScalarFunction make_power(double p) {
    if (p == 0.0) throw PreconditionError("power: exponent must be nonzero");
    Interval dom = p > 0 ? Interval::nonnegative() : Interval::positive();
    Convexity conv;
    Monotonicity mono;
    if (p > 0 && p < 1) {
        conv = Convexity::concave;
        mono = Monotonicity::nondecreasing;
    } else if (p == 1.0) {
        conv = Convexity::affine;
        mono = Monotonicity::nondecreasing;
    } else if (p > 1) {
        conv = Convexity::convex;
        mono = Monotonicity::nondecreasing;
    } else {  // p < 0
        conv = Convexity::convex;
        mono = Monotonicity::nonincreasing;
    }
    ScalarFunction f("pow:" + ScalarFunction::format_double(p),
                     [p](double t) { return std::pow(t, p); }, dom, conv, mono);
    bool op_conv = (p >= 1 && p <= 2) || (p >= -1 && p < 0);
    bool op_conc = p > 0 && p <= 1;
    bool op_mono = p > 0 && p <= 1;
    f = f.with_operator_flags(op_conv, op_conc, op_mono);
    if (p >= 1 && p == std::floor(p) && p < 64) f = f.with_degree(static_cast<int>(p));
    return f;
}

inline ScalarFunction make_abs() {
    ScalarFunction f("abs", [](double t) { return std::fabs(t); },
                     Interval::real_line(), Convexity::convex, Monotonicity::none);
    return f.with_split(0.0).with_breakpoints({0.0});
}

inline ScalarFunction make_positive_part() {
    ScalarFunction f("pos", [](double t) { return t > 0 ? t : 0.0; },
                     Interval::real_line(), Convexity::convex,
                     Monotonicity::nondecreasing);
    return f.with_breakpoints({0.0});
}

inline ScalarFunction make_log() {
    ScalarFunction f("log", [](double t) { return std::log(t); },
                     Interval::positive(), Convexity::concave,
                     Monotonicity::nondecreasing);
    return f.with_operator_flags(false, true, true);
}

inline ScalarFunction make_affine(double slope, double intercept) {
    ScalarFunction f("affine:" + ScalarFunction::format_double(slope) + "," +
                         ScalarFunction::format_double(intercept),
                     [slope, intercept](double t) { return slope * t + intercept; },
                     Interval::real_line(), Convexity::affine,
                     slope >= 0 ? Monotonicity::nondecreasing
                                : Monotonicity::nonincreasing);
    return f.with_operator_flags(true, true, slope >= 0)
        .with_degree(slope != 0.0 ? 1 : 0);
}

// coefficients in ascending degree order, all nonnegative
inline ScalarFunction make_polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) throw PreconditionError("polynomial: no coefficients");
    int deg = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0)
            throw PreconditionError("polynomial: coefficient " +
                                    std::to_string(i) + " is negative");
        if (coeffs[i] != 0.0) deg = static_cast<int>(i);
    }
    std::string name = "poly:";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        name += (i ? "," : "") + ScalarFunction::format_double(coeffs[i]);
    auto eval = [coeffs](double t) {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
        return acc;
    };
    ScalarFunction f(name, eval, Interval::nonnegative(),
                     deg <= 1 ? Convexity::affine : Convexity::convex,
                     Monotonicity::nondecreasing);
    return f.with_operator_flags(deg <= 2, deg <= 1, deg <= 1).with_degree(deg);
}

// breakpoints (x, y) with strictly increasing x; domain is [x_first, x_last]
inline ScalarFunction make_piecewise_linear(std::vector<std::pair<double, double>> pts) {
    if (pts.size() < 2) throw PreconditionError("piecewise-linear: need at least 2 points");
    std::vector<double> xs, ys, slopes;
    for (auto& p : pts) {
        if (!xs.empty() && p.first <= xs.back())
            throw PreconditionError("piecewise-linear: x values must strictly increase");
        xs.push_back(p.first);
        ys.push_back(p.second);
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        slopes.push_back((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]));

    bool nondec_slopes = true, noninc_slopes = true, all_equal = true;
    bool nonneg = true, nonpos = true;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        if (slopes[i] < 0) nonneg = false;
        if (slopes[i] > 0) nonpos = false;
        if (i) {
            if (slopes[i] < slopes[i - 1] - 1e-12) nondec_slopes = false;
            if (slopes[i] > slopes[i - 1] + 1e-12) noninc_slopes = false;
            if (slopes[i] != slopes[i - 1]) all_equal = false;
        }
    }
    Convexity conv = all_equal              ? Convexity::affine
                     : nondec_slopes        ? Convexity::convex
                     : noninc_slopes        ? Convexity::concave
                                            : Convexity::neither;
    Monotonicity mono = nonneg   ? Monotonicity::nondecreasing
                        : nonpos ? Monotonicity::nonincreasing
                                 : Monotonicity::none;

    std::string name = "pwl:";
    for (std::size_t i = 0; i < xs.size(); ++i)
        name += (i ? ";" : "") + ScalarFunction::format_double(xs[i]) + "," +
                ScalarFunction::format_double(ys[i]);

    auto eval = [xs, ys, slopes](double t) {
        std::size_t seg = 0;
        while (seg + 2 < xs.size() && t > xs[seg + 1]) ++seg;
        return ys[seg] + slopes[seg] * (t - xs[seg]);
    };
    ScalarFunction f(name, eval, Interval::closed(xs.front(), xs.back()), conv, mono);
    return f.with_breakpoints(xs);
}

// Accepted forms: pow:<p> | abs | pos | log | poly:c0,c1,... |
// pwl:x,y;x,y;... | affine:slope,intercept
inline ScalarFunction parse_function(const std::string& spec) {
    auto bad = [&](const std::string& why) -> IoError {
        return IoError("function spec '" + spec + "': " + why);
    };
    std::string head = spec, args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    auto parse_numbers = [&](const std::string& s, char sep) {
        std::vector<double> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, sep)) {
            if (tok.empty()) throw bad("empty numeric field");
            std::size_t used = 0;
            double v;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw bad("cannot parse number '" + tok + "'");
            }
            if (used != tok.size()) throw bad("trailing characters in '" + tok + "'");
            if (!std::isfinite(v)) throw bad("non-finite number");
            out.push_back(v);
        }
        if (out.empty()) throw bad("no numbers given");
        return out;
    };

    try {
        if (head == "abs") return make_abs();
        if (head == "pos") return make_positive_part();
        if (head == "log") return make_log();
        if (head == "pow") {
            auto v = parse_numbers(args, ',');
            if (v.size() != 1) throw bad("pow takes exactly one exponent");
            return make_power(v[0]);
        }
        if (head == "poly") return make_polynomial(parse_numbers(args, ','));
        if (head == "affine") {
            auto v = parse_numbers(args, ',');
            if (v.size() != 2) throw bad("affine takes slope,intercept");
            return make_affine(v[0], v[1]);
        }
        if (head == "pwl") {
            std::vector<std::pair<double, double>> pts;
            std::stringstream ss(args);
            std::string tok;
            while (std::getline(ss, tok, ';')) {
                auto v = parse_numbers(tok, ',');
                if (v.size() != 2) throw bad("each pwl breakpoint is x,y");
                pts.emplace_back(v[0], v[1]);
            }
            return make_piecewise_linear(pts);
        }
    } catch (const PreconditionError& e) {
        throw bad(e.what());
    }
    throw bad("unknown function kind '" + head + "'");
}

// ---- split point ---------------------------------------------------------

// Point r in [lo, hi] such that f is monotone on both [lo, r] and [r, hi].
// For monotone f this is the left endpoint; for convex (concave) f it is the
// leftmost minimizer (maximizer) over the hull.
inline double monotone_split(const ScalarFunction& f, double lo, double hi) {
    if (hi < lo) throw PreconditionError("monotone_split: empty hull");
    if (f.is_monotone() || hi - lo < 1e-15) return lo;
    if (!f.is_convex() && !f.is_concave())
        throw PreconditionError("monotone_split: function is neither convex nor concave");

    const double sign = f.is_convex() ? 1.0 : -1.0;
    auto g = [&](double t) { return sign * f(t); };  // minimize g

    if (auto r = f.declared_split()) return std::min(std::max(*r, lo), hi);

    if (f.breakpoints()) {
        double best_x = lo, best_v = g(lo);
        for (double x : *f.breakpoints()) {
            if (x <= lo || x >= hi) continue;
            if (double v = g(x); v < best_v) {
                best_v = v;
                best_x = x;
            }
        }
        if (double v = g(hi); v < best_v) {
            best_v = v;
            best_x = hi;
        }
        // leftmost point attaining the minimum (plateau rule)
        double a = lo, b = best_x;
        if (g(lo) <= best_v) return lo;
        for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
            double m = (a + b) / 2;
            (g(m) <= best_v ? b : a) = m;
        }
        return b;
    }

    // golden-section to 1e-10
    const double phi = 0.61803398874989484820;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    while (b - a > 1e-10) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = g(x2);
        }
    }
    double xstar = (a + b) / 2, vstar = g(xstar);
    // plateau rule: walk to the leftmost point with the same value
    if (g(lo) <= vstar) return lo;
    double l = lo, r = xstar;
    for (int it = 0; it < 200 && r - l > 1e-12; ++it) {
        double m = (l + r) / 2;
        (g(m) <= vstar ? r : l) = m;
    }
    return r;
}

// ---- sampled shape checks (used by property tests and generators) --------

inline bool sampled_convexity_ok(const ScalarFunction& f, double lo, double hi,
                                 CounterRng& rng, int triples = 1000,
                                 double tol = 1e-9) {
    if (f.convexity() == Convexity::neither) return true;
    for (int i = 0; i < triples; ++i) {
        double x = rng.uniform(lo, hi), y = rng.uniform(lo, hi);
        double th = rng.uniform();
        double m = th * x + (1 - th) * y;
        double chord = th * f(x) + (1 - th) * f(y);
        double v = f(m);
        double scale = std::max({1.0, std::fabs(chord), std::fabs(v)});
        if (f.is_convex() && v > chord + tol * scale) return false;
        if (f.is_concave() && v < chord - tol * scale) return false;
    }
    return true;
}

inline bool sampled_monotonicity_ok(const ScalarFunction& f, double lo, double hi,
                                    CounterRng& rng, int pairs = 1000,
                                    double tol = 1e-9) {
    if (!f.is_monotone()) return true;
    for (int i = 0; i < pairs; ++i) {
        double x = rng.uniform(lo, hi), y = rng.uniform(lo, hi);
        if (x > y) std::swap(x, y);
        double fx = f(x), fy = f(y);
        double scale = std::max({1.0, std::fabs(fx), std::fabs(fy)});
        if (f.is_nondecreasing() && fx > fy + tol * scale) return false;
        if (!f.is_nondecreasing() && fx < fy - tol * scale) return false;
    }
    return true;
}

}  // namespace orbit
