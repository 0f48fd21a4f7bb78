#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace panchro {

// Free constants left unspecified by the estimates; callers may override.
// c_prime also serves as the implicit constant inside O(.)/o(.) regime
// conditions. alpha is accepted for completeness (it is a tuning knob
// inside one derivation and folds into c in the published formula).
struct BoundsConstants {
    double c = 1.0;
    double c_prime = 1.0;
    double c1 = 1.0;
    double c2 = 1.0;
    double alpha = 1.0;
};

inline BoundsConstants constants_from_map(const std::map<std::string, double>& m) {
    BoundsConstants k;
    for (const auto& [name, value] : m) {
        if (!(value > 0.0))
            throw std::invalid_argument("constants: '" + name + "' must be positive");
        if (name == "c") k.c = value;
        else if (name == "c_prime" || name == "c'") k.c_prime = value;
        else if (name == "c1") k.c1 = value;
        else if (name == "c2") k.c2 = value;
        else if (name == "alpha") k.alpha = value;
        else throw std::invalid_argument("constants: unknown name '" + name + "'");
    }
    return k;
}

enum class BoundKind { lower, upper };

// value == exp(log_value) conceptually; value saturates to +inf when the
// quantity exceeds double range while log_value stays finite, and value 0
// is represented with log_value == -inf. log_value is NaN only for
// negative formula values (possible when r > n), which are reported, not
// hidden.
struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::lower;
    double value = 0.0;
    double log_value = 0.0;
    bool constant_free = false;
    bool applicable = false;
};

struct BoundsReport {
    std::size_t n = 0, r = 0;
    std::vector<BoundEntry> entries;
};

namespace detail {

inline BoundEntry from_log(std::string name, BoundKind kind, double log_value,
                           bool constant_free, bool applicable) {
    return BoundEntry{std::move(name), kind, std::exp(log_value), log_value,
                      constant_free, applicable};
}

inline BoundEntry from_value(std::string name, BoundKind kind, double value,
                             bool constant_free, bool applicable) {
    const double lv = value > 0.0 ? std::log(value)
                      : value == 0.0 ? -std::numeric_limits<double>::infinity()
                                     : std::numeric_limits<double>::quiet_NaN();
    return BoundEntry{std::move(name), kind, value, lv, constant_free, applicable};
}

}  // namespace detail

// Evaluates every published estimate at (n, r). Formulas with free
// constants use the supplied values (default 1.0) and are flagged
// constant_free = false. `applicable` mirrors each estimate's stated
// parameter regime; out-of-regime entries are still evaluated and
// reported, never omitted.
inline BoundsReport evaluate_bounds(std::size_t n, std::size_t r,
                                    const BoundsConstants& k = {}) {
    if (n < 2 || r < 2) throw std::invalid_argument("bounds: need n >= 2, r >= 2");
    for (double v : {k.c, k.c_prime, k.c1, k.c2, k.alpha})
        if (!(v > 0.0)) throw std::invalid_argument("bounds: constants must be positive");

    const double x = double(n), y = double(r);
    const double amp = x * std::log(y / (y - 1.0));  // n ln(r/(r-1)), the shared growth term
    const bool n_ge_r = n >= r;

    BoundsReport rep;
    rep.n = n;
    rep.r = r;
    auto& E = rep.entries;

    E.push_back(detail::from_log("lower_evident", BoundKind::lower,
                                 -std::log(y) + amp, true, true));
    E.push_back(detail::from_log("lower_thm2", BoundKind::lower,
                                 -1.0 + std::log((y - 1.0) / (x - 1.0)) + (x - 1.0) / (y - 1.0),
                                 true, n_ge_r));
    E.push_back(detail::from_log(
        "lower_thm2_sharp", BoundKind::lower,
        std::log((y - 1.0) / (x - 1.0)) + x * std::log((x * y - y) / (x * y - x)), true,
        n_ge_r));
    E.push_back(detail::from_value("lower_prop4", BoundKind::lower, double(n / r), true, true));
    E.push_back(detail::from_log(
        "lower_thm2prime", BoundKind::lower,
        std::log(k.c) +
            std::log(std::max(std::pow(x, 0.25) / (y * std::sqrt(y)), 1.0 / std::sqrt(x))) +
            amp,
        false, n_ge_r && y <= k.c * x / std::log(x)));
    E.push_back(detail::from_log(
        "lower_thm2doubleprime", BoundKind::lower, std::log(k.c) + std::log(y / x) + x / y,
        false, n_ge_r && y * y >= x && y <= k.c_prime * x / std::log(x)));
    E.push_back(detail::from_log(
        "lower_shabanov", BoundKind::lower,
        std::log(k.c) - 2.0 * std::log(y) + std::log(x / std::log(x)) / 3.0 + amp, false,
        r < n));
    E.push_back(detail::from_log(
        "lower_rozovskaya", BoundKind::lower,
        std::log(k.c) - 2.0 * std::log(y) + 0.5 * std::log(x / std::log(x)) + amp, false,
        y <= x / (2.0 * std::log(x))));
    E.push_back(detail::from_log("kostochka_lower", BoundKind::lower,
                                 -std::log(y) + k.c1 * x / y, false, true));
    E.push_back(detail::from_log("kostochka_upper", BoundKind::upper,
                                 std::log(y) + k.c2 * x / y, false, true));
    E.push_back(detail::from_log(
        "shabanov_upper1", BoundKind::upper,
        std::log(k.c) + 2.0 * std::log(x) + std::log(std::log(y)) - 2.0 * std::log(y) + amp,
        false, r >= 3 && y <= k.c_prime * std::sqrt(x)));
    E.push_back(detail::from_log(
        "shabanov_upper2", BoundKind::upper,
        std::log(k.c) + 1.5 * std::log(x) + std::log(std::log(y)) - std::log(y) + amp, false,
        y <= k.c_prime * std::pow(x, 2.0 / 3.0) && x <= k.c_prime * y * y));
    E.push_back(detail::from_log(
        "shabanov_upper3", BoundKind::upper,
        std::log(k.c) + std::log(std::max(x * x / y, std::pow(x, 1.5))) +
            std::log(std::log(y)) + amp,
        false, true));
    E.push_back(detail::from_log(
        "upper_thm1", BoundKind::upper,
        std::log(k.c) + 2.0 * std::log(x) + std::log(std::log(y)) - std::log(y) + amp, false,
        true));
    {
        // c (n/r)^2 ln(n/r) e^{n/r}: zero exactly at n == r, negative for n < r.
        const double t = x / y;
        const double lt = std::log(t);
        BoundEntry e;
        if (lt > 0.0) {
            e = detail::from_log("upper_corollary", BoundKind::upper,
                                 std::log(k.c) + 2.0 * lt + std::log(lt) + t, false, false);
        } else {
            e = detail::from_value("upper_corollary", BoundKind::upper,
                                   k.c * t * t * lt * std::exp(t), false, false);
        }
        e.applicable = n >= 2 * r && x < y * y;  // needs a usable k = n/r in [2, r]
        E.push_back(e);
    }
    return rep;
}

// One report per grid cell, in the given order.
inline std::vector<BoundsReport> bounds_table(
    const std::vector<std::pair<std::size_t, std::size_t>>& cells,
    const BoundsConstants& k = {}) {
    if (cells.empty()) throw std::invalid_argument("bounds table: empty grid");
    std::vector<BoundsReport> out;
    out.reserve(cells.size());
    for (const auto& [n, r] : cells) out.push_back(evaluate_bounds(n, r, k));
    return out;
}

}  // namespace panchro
