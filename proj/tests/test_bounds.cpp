#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "panchro/bounds.hpp"
#include "panchro/constructions.hpp"
#include "panchro/oracle.hpp"

using namespace panchro;

namespace {

const BoundEntry& entry(const BoundsReport& rep, const std::string& name) {
    for (const BoundEntry& e : rep.entries)
        if (e.name == name) return e;
    throw std::runtime_error("missing entry " + name);
}

// direct-arithmetic evaluation, independent of the log-space implementation
std::map<std::string, double> direct_values(double n, double r, double c = 1.0,
                                            double c1 = 1.0, double c2 = 1.0) {
    const double grow = std::pow(r / (r - 1.0), n);
    std::map<std::string, double> v;
    v["lower_evident"] = (1.0 / r) * grow;
    v["lower_thm2"] = std::exp(-1.0) * ((r - 1.0) / (n - 1.0)) * std::exp((n - 1.0) / (r - 1.0));
    v["lower_thm2_sharp"] =
        ((r - 1.0) / (n - 1.0)) * std::pow((n * r - r) / (n * r - n), n);
    v["lower_prop4"] = std::floor(n / r);
    v["lower_thm2prime"] =
        c * std::max(std::pow(n, 0.25) / (r * std::sqrt(r)), 1.0 / std::sqrt(n)) * grow;
    v["lower_thm2doubleprime"] = c * (r / n) * std::exp(n / r);
    v["lower_shabanov"] = c * (1.0 / (r * r)) * std::cbrt(n / std::log(n)) * grow;
    v["lower_rozovskaya"] = c * (1.0 / (r * r)) * std::sqrt(n / std::log(n)) * grow;
    v["kostochka_lower"] = (1.0 / r) * std::exp(c1 * n / r);
    v["kostochka_upper"] = r * std::exp(c2 * n / r);
    v["shabanov_upper1"] = c * n * n * std::log(r) / (r * r) * grow;
    v["shabanov_upper2"] = c * std::pow(n, 1.5) * std::log(r) / r * grow;
    v["shabanov_upper3"] = c * std::max(n * n / r, std::pow(n, 1.5)) * std::log(r) * grow;
    v["upper_thm1"] = c * n * n * std::log(r) / r * grow;
    v["upper_corollary"] = c * (n / r) * (n / r) * std::log(n / r) * std::exp(n / r);
    return v;
}

}  // namespace

TEST_CASE("entry names, order, kinds, constant-freeness") {
    const BoundsReport rep = evaluate_bounds(6, 2);
    const std::vector<std::string> names{
        "lower_evident",     "lower_thm2",          "lower_thm2_sharp", "lower_prop4",
        "lower_thm2prime",   "lower_thm2doubleprime", "lower_shabanov", "lower_rozovskaya",
        "kostochka_lower",   "kostochka_upper",     "shabanov_upper1",  "shabanov_upper2",
        "shabanov_upper3",   "upper_thm1",          "upper_corollary"};
    REQUIRE(rep.entries.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(rep.entries[i].name == names[i]);
        const bool is_lower = names[i].rfind("lower", 0) == 0 || names[i] == "kostochka_lower";
        CHECK(rep.entries[i].kind == (is_lower ? BoundKind::lower : BoundKind::upper));
        const bool cf = names[i] == "lower_evident" || names[i] == "lower_thm2" ||
                        names[i] == "lower_thm2_sharp" || names[i] == "lower_prop4";
        CHECK(rep.entries[i].constant_free == cf);
    }
}

TEST_CASE("documented spot values") {
    const BoundsReport a = evaluate_bounds(3, 2);
    CHECK(entry(a, "lower_evident").value == doctest::Approx(4.0));
    CHECK(entry(a, "lower_prop4").value == doctest::Approx(1.0));
    CHECK(entry(a, "lower_thm2").value == doctest::Approx(std::exp(1.0) / 2.0).epsilon(1e-9));
    CHECK(entry(a, "lower_thm2_sharp").value == doctest::Approx(32.0 / 27.0).epsilon(1e-9));

    const BoundsReport b = evaluate_bounds(2, 2);
    CHECK(entry(b, "lower_evident").value == doctest::Approx(2.0));
    CHECK(entry(b, "lower_thm2").value == doctest::Approx(1.0));
    CHECK(entry(b, "lower_thm2_sharp").value == doctest::Approx(1.0));
    // n == r: the corollary formula is exactly zero, carried as log -inf
    CHECK(entry(b, "upper_corollary").value == 0.0);
    CHECK(std::isinf(entry(b, "upper_corollary").log_value));
    CHECK(entry(b, "upper_corollary").log_value < 0);
}

TEST_CASE("log-space values match direct arithmetic where finite") {
    for (std::size_t n = 2; n <= 20; ++n)
        for (std::size_t r = 2; r <= n; ++r) {
            const BoundsReport rep = evaluate_bounds(n, r);
            const auto direct = direct_values(double(n), double(r));
            for (const BoundEntry& e : rep.entries) {
                const double d = direct.at(e.name);
                if (d > 0.0) {
                    CHECK(e.value == doctest::Approx(d).epsilon(1e-9));
                    CHECK(std::exp(e.log_value) == doctest::Approx(d).epsilon(1e-9));
                } else {
                    CHECK(e.value == d);  // exact zero at n == r for the corollary
                }
            }
        }
}

TEST_CASE("growth term survives in log space when values get large") {
    const BoundsReport rep = evaluate_bounds(200, 2);
    const double amp = 200.0 * std::log(2.0);  // about 138.63
    CHECK(entry(rep, "lower_evident").log_value ==
          doctest::Approx(amp - std::log(2.0)).epsilon(1e-12));
    CHECK(std::isfinite(entry(rep, "lower_evident").log_value));

    // far out the linear value saturates while the log stays finite
    const BoundsReport big = evaluate_bounds(1500, 2);
    const BoundEntry& ev = entry(big, "lower_evident");
    CHECK(std::isinf(ev.value));
    CHECK(ev.value > 0);
    CHECK(std::isfinite(ev.log_value));
    CHECK(ev.log_value == doctest::Approx(1499.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("applicability flags follow the stated regimes") {
    const BoundsReport a = evaluate_bounds(4, 2);
    CHECK(entry(a, "lower_evident").applicable);
    CHECK(entry(a, "lower_thm2").applicable);
    CHECK(entry(a, "lower_thm2prime").applicable);        // 2 <= 4/ln 4
    CHECK(entry(a, "lower_thm2doubleprime").applicable);  // sqrt(4) <= 2 <= 4/ln 4
    CHECK(entry(a, "lower_shabanov").applicable);         // r < n
    CHECK_FALSE(entry(a, "lower_rozovskaya").applicable); // 2 > 4/(2 ln 4)
    CHECK_FALSE(entry(a, "shabanov_upper1").applicable);  // needs r >= 3
    CHECK(entry(a, "shabanov_upper2").applicable);        // 2 <= 4^(2/3), 4 <= 4
    CHECK(entry(a, "shabanov_upper3").applicable);
    CHECK(entry(a, "upper_thm1").applicable);
    CHECK_FALSE(entry(a, "upper_corollary").applicable);  // needs n < r^2

    const BoundsReport b = evaluate_bounds(8, 3);
    CHECK(entry(b, "upper_corollary").applicable);        // 8 >= 6 and 8 < 9
    const BoundsReport c = evaluate_bounds(9, 3);
    CHECK_FALSE(entry(c, "upper_corollary").applicable);  // 9 < 9 fails

    const BoundsReport d = evaluate_bounds(20, 2);
    CHECK_FALSE(entry(d, "lower_thm2doubleprime").applicable);  // r < sqrt(20)
    CHECK(entry(d, "lower_rozovskaya").applicable);             // 2 <= 20/(2 ln 20)

    // out-of-regime entries are evaluated, not omitted
    CHECK(evaluate_bounds(3, 2).entries.size() == 15);

    // r > n is allowed by the evaluator; regime flags handle it
    const BoundsReport e = evaluate_bounds(2, 3);
    CHECK_FALSE(entry(e, "lower_thm2").applicable);
    CHECK(entry(e, "lower_evident").applicable);
}

TEST_CASE("constants scale their bounds and are validated") {
    const BoundsConstants k = constants_from_map({{"c", 2.0}, {"c'", 3.0}});
    CHECK(k.c == 2.0);
    CHECK(k.c_prime == 3.0);
    CHECK(constants_from_map({{"c_prime", 4.0}}).c_prime == 4.0);
    CHECK_THROWS_AS(constants_from_map({{"bogus", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(constants_from_map({{"c", 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(constants_from_map({{"c", -1.0}}), std::invalid_argument);

    const BoundsReport base = evaluate_bounds(7, 2);
    const BoundsReport scaled = evaluate_bounds(7, 2, k);
    CHECK(entry(scaled, "upper_thm1").value ==
          doctest::Approx(2.0 * entry(base, "upper_thm1").value).epsilon(1e-12));
    // constant-free entries do not move
    CHECK(entry(scaled, "lower_evident").value == entry(base, "lower_evident").value);
    CHECK(entry(scaled, "lower_thm2").value == entry(base, "lower_thm2").value);
    // c' relaxes regime cuts: r = 3 fits under c' * sqrt(8) only when c' > 3/sqrt(8)
    const BoundsReport strict = evaluate_bounds(8, 3);
    CHECK_FALSE(entry(strict, "shabanov_upper1").applicable);
    const BoundsReport relaxed = evaluate_bounds(8, 3, constants_from_map({{"c'", 2.0}}));
    CHECK(entry(relaxed, "shabanov_upper1").applicable);

    BoundsConstants bad;
    bad.c1 = 0.0;
    CHECK_THROWS_AS(evaluate_bounds(5, 2, bad), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_bounds(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_bounds(5, 1), std::invalid_argument);
}

TEST_CASE("kostochka constants act in the exponent") {
    const BoundsConstants k = constants_from_map({{"c1", 2.0}, {"c2", 0.5}});
    const BoundsReport rep = evaluate_bounds(6, 2, k);
    CHECK(entry(rep, "kostochka_lower").value ==
          doctest::Approx(0.5 * std::exp(2.0 * 3.0)).epsilon(1e-12));
    CHECK(entry(rep, "kostochka_upper").value ==
          doctest::Approx(2.0 * std::exp(0.5 * 3.0)).epsilon(1e-12));
}

TEST_CASE("grid report is clean on the desk-scale grid") {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t n = 2; n <= 20; ++n)
        for (std::size_t r = 2; r <= n; ++r) cells.emplace_back(n, r);
    const std::vector<BoundsReport> table = bounds_table(cells);
    REQUIRE(table.size() == 190);
    for (const BoundsReport& rep : table)
        for (const BoundEntry& e : rep.entries) {
            CHECK(std::isfinite(e.value));  // nothing overflows at this scale
            CHECK_FALSE(std::isnan(e.log_value));
            if (!std::isfinite(e.log_value)) {
                CHECK(e.log_value < 0);
                CHECK(e.value == 0.0);  // -inf only as the exact log of zero
            }
        }

    CHECK_THROWS_AS(bounds_table({}), std::invalid_argument);
    const std::vector<BoundsReport> one = bounds_table({{3, 2}});
    REQUIRE(one.size() == 1);
    const BoundsReport direct = evaluate_bounds(3, 2);
    for (std::size_t i = 0; i < direct.entries.size(); ++i) {
        CHECK(one[0].entries[i].name == direct.entries[i].name);
        CHECK(one[0].entries[i].value == direct.entries[i].value);
    }
}

TEST_CASE("instances below the constant-free thresholds are always colorable") {
    // p(n, r) >= these bounds, so any hypergraph with fewer edges has a coloring
    const std::vector<std::pair<std::size_t, std::size_t>> cells{
        {6, 2}, {10, 2}, {14, 2}, {6, 3}, {9, 3}, {14, 3}};
    for (const auto& [n, r] : cells) {
        const BoundsReport rep = evaluate_bounds(n, r);
        const double evident = entry(rep, "lower_evident").value;
        const double thm2 = entry(rep, "lower_thm2").value;
        const double prop4 = entry(rep, "lower_prop4").value;
        const std::size_t cap = 25;
        const std::size_t m_evident =
            std::min<std::size_t>(cap, std::size_t(std::ceil(evident)) - 1);
        const std::size_t m_thm2 = std::min<std::size_t>(cap, std::size_t(thm2));
        const std::size_t m_prop4 = std::size_t(prop4);
        for (std::uint64_t seed = 0; seed < 6; ++seed)
            for (std::size_t m : {m_evident, m_thm2, m_prop4}) {
                if (m == 0) continue;
                const Hypergraph h =
                    sample_uniform_edges(n, 2 * n, m, derive_seed(1000 + n * 10 + r, seed));
                CHECK(decide_panchromatic(h, r).status == OracleStatus::colorable);
            }
    }
}
