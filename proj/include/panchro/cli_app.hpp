#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "panchro/bounds.hpp"
#include "panchro/colorers.hpp"
#include "panchro/constructions.hpp"
#include "panchro/experiment.hpp"
#include "panchro/hypergraph.hpp"
#include "panchro/json_io.hpp"
#include "panchro/oracle.hpp"
#include "panchro/turan.hpp"

namespace panchro {

namespace cli_detail {

// exit codes: 0 ok/true, 1 disproof/false, 2 undecided or budget blown,
// 64 any malformed input (files, flags, parameters)
inline constexpr int exit_ok = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_undecided = 2;
inline constexpr int exit_input = 64;

inline std::string provenance_path(const std::string& out_path) {
    const std::string suffix = ".json";
    if (out_path.size() > suffix.size() &&
        out_path.compare(out_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return out_path.substr(0, out_path.size() - suffix.size()) + ".provenance.json";
    return out_path + ".provenance.json";
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    const auto to_num = [](const std::string& part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("range parts must be non-negative integers: '" + part + "'");
        return std::size_t(std::stoull(part));
    };
    if (colon == std::string::npos) {
        const std::size_t v = to_num(s);
        return {v, v};
    }
    const std::size_t lo = to_num(s.substr(0, colon));
    const std::size_t hi = to_num(s.substr(colon + 1));
    if (lo > hi) throw input_error("empty range: '" + s + "'");
    return {lo, hi};
}

inline std::map<std::string, double> parse_constants(const std::vector<std::string>& kvs) {
    std::map<std::string, double> m;
    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw input_error("constants must be key=value: '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        char* end = nullptr;
        const double d = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            throw input_error("constant '" + key + "' has non-numeric value '" + val + "'");
        m[key] = d;
    }
    return m;
}

inline std::uint64_t node_budget_from_env_or(std::uint64_t fallback) {
    const char* env = std::getenv("PANCHROMA_NODE_BUDGET");
    if (!env) return fallback;
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("PANCHROMA_NODE_BUDGET must be a non-negative integer, got '" + s +
                          "'");
    return std::stoull(s);
}

inline json attempt_totals_json(const ColorerOutcome& oc) {
    AttemptStats totals;
    for (const AttemptStats& s : oc.stats) {
        totals.bad_pairs += s.bad_pairs;
        totals.conflicts += s.conflicts;
        totals.bad_colors += s.bad_colors;
    }
    return json{{"attempts", oc.attempts},
                {"bad_pairs", totals.bad_pairs},
                {"conflicts", totals.conflicts},
                {"bad_colors", totals.bad_colors}};
}

}  // namespace cli_detail

// Full command-line surface; returns the process exit code. Streams are
// injected so tests can drive it in-process.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"panchromatic colorings of n-uniform hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
    app.add_option("--seed", seed, "base seed for all randomized procedures");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "bounds output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // ---- construct ----
    CLI::App* construct = app.add_subcommand("construct", "build witness hypergraphs");
    construct->require_subcommand(1);

    std::size_t c_n = 0, c_r = 0, c_t = 1, c_m = 2, c_k = 2;
    std::uint64_t raw_budget = 1'000'000;
    std::size_t c_nv = 0;  // 0 -> default n^2
    std::uint64_t c_ne = 0;
    std::uint64_t max_attempts = 10'000;
    std::string in_path;

    CLI::App* thm5 = construct->add_subcommand("thm5", "cyclic shift system witness");
    thm5->add_option("--n", c_n, "uniformity")->required();
    thm5->add_option("--r", c_r, "colors defeated")->required();
    thm5->add_option("--t", c_t, "block size (divides n)")->capture_default_str();
    thm5->add_option("--raw-edge-budget", raw_budget, "refuse above this raw edge count")
        ->capture_default_str();

    CLI::App* blowup = construct->add_subcommand("blowup", "replace vertices by m clones");
    blowup->add_option("--input", in_path, "base hypergraph JSON")->required();
    blowup->add_option("--m", c_m, "clones per vertex")->required();

    CLI::App* rturan = construct->add_subcommand(
        "random-turan", "verified random covering system (resamples until valid)");
    rturan->add_option("--n", c_n, "uniformity")->required();
    rturan->add_option("--r", c_r, "covering parameter")->required();
    rturan->add_option("--num-vertices", c_nv, "vertex count (default n^2)");
    rturan->add_option("--num-edges", c_ne, "draws per attempt (default: covering scale)");
    rturan->add_option("--max-attempts", max_attempts, "resampling budget")
        ->capture_default_str();

    CLI::App* corollary = construct->add_subcommand(
        "corollary", "chained witness: covering base, blow-up, shrink");
    corollary->add_option("--n", c_n, "uniformity")->required();
    corollary->add_option("--r", c_r, "colors defeated")->required();
    corollary->add_option("--k", c_k, "base covering parameter (2 <= k <= r)")->required();
    corollary->add_option("--base-vertices", c_nv, "base stage vertex count (default n1^2)");
    corollary->add_option("--max-attempts", max_attempts, "resampling budget")
        ->capture_default_str();

    // ---- color ----
    CLI::App* color = app.add_subcommand("color", "find a panchromatic coloring");
    std::string method_name;
    std::size_t r = 0, palette = 0;
    std::uint64_t node_budget = 0;
    bool node_budget_set = false;
    color->add_option("--input", in_path, "hypergraph JSON")->required();
    color->add_option("--method", method_name, "greedy | alteration | simplex | exact")
        ->required();
    color->add_option("--r", r, "number of colors")->required();
    color->add_option("--palette", palette, "simplex working palette (default r+ceil(r^2/n))");
    color->add_option("--max-attempts", max_attempts, "retry budget for randomized methods")
        ->capture_default_str();
    color->add_option("--node-budget", node_budget, "exact oracle node budget")
        ->each([&](const std::string&) { node_budget_set = true; });

    // ---- verify ----
    CLI::App* verify = app.add_subcommand("verify", "check colorings and properties");
    std::string coloring_path;
    bool check_turan = false, check_exact = false;
    verify->add_option("--input", in_path, "hypergraph JSON")->required();
    verify->add_option("--coloring", coloring_path, "coloring JSON to test");
    verify->add_flag("--turan", check_turan, "check the covering property at --r");
    verify->add_flag("--exact", check_exact, "decide colorability at --r");
    verify->add_option("--r", r, "number of colors");
    verify->add_option("--node-budget", node_budget, "exact oracle node budget")
        ->each([&](const std::string&) { node_budget_set = true; });

    // ---- bounds ----
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate published estimates");
    std::string n_range, r_range;
    std::vector<std::string> constant_kvs;
    bounds->add_option("--n-range", n_range, "n range, A:B or single value")->required();
    bounds->add_option("--r-range", r_range, "r range, A:B or single value")->required();
    bounds->add_option("--constants", constant_kvs,
                       "free constants, key=value (c, c_prime, c1, c2, alpha)");

    // ---- experiment ----
    CLI::App* experiment = app.add_subcommand("experiment", "seeded trial sweeps");
    std::uint64_t trials = 1;
    std::size_t e_n = 0, e_r = 0, e_nv = 0;
    std::uint64_t e_ne = 0;
    experiment->add_option("--method", method_name, "greedy | alteration | simplex | exact")
        ->required();
    experiment->add_option("--r", e_r, "number of colors")->required();
    experiment->add_option("--trials", trials, "number of trials")->required();
    experiment->add_option("--n", e_n, "uniformity (random family)");
    experiment->add_option("--num-vertices", e_nv, "vertex count (default 2n)");
    experiment->add_option("--num-edges", e_ne, "edges per instance (random family)");
    experiment->add_option("--input", in_path, "fixed instance JSON (file family)");
    experiment->add_option("--palette", palette, "simplex palette override");
    experiment->add_option("--max-attempts", max_attempts, "retry budget")
        ->capture_default_str();
    experiment->add_option("--node-budget", node_budget, "exact oracle node budget")
        ->each([&](const std::string&) { node_budget_set = true; });

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("panchro");
        for (const std::string& a : args) argv.push_back(a.c_str());
        try {
            app.parse(int(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_input;
        }

        const std::uint64_t budget = node_budget_set
                                         ? node_budget
                                         : node_budget_from_env_or(default_node_budget);

        if (construct->parsed()) {
            std::optional<Hypergraph> witness;
            json provenance;
            if (thm5->parsed()) {
                witness = shift_witness(ShiftParams{c_n, c_r, c_t, raw_budget});
                provenance = provenance_to_json(std::vector<ProvenanceStep>{
                    {"shift_witness",
                     {{"n", c_n},
                      {"r", c_r},
                      {"t", c_t},
                      {"num_vertices", witness->num_vertices()},
                      {"num_edges", witness->num_edges()}}}});
            } else if (blowup->parsed()) {
                const Hypergraph base = load_hypergraph(in_path);
                witness = blow_up(base, c_m);
                provenance = provenance_to_json(std::vector<ProvenanceStep>{
                    {"blow_up",
                     {{"m", c_m},
                      {"num_vertices", witness->num_vertices()},
                      {"uniformity", witness->uniformity()},
                      {"num_edges", witness->num_edges()}}}});
            } else if (rturan->parsed()) {
                const std::size_t nv = c_nv ? c_nv : c_n * c_n;
                const std::uint64_t ne = c_ne ? c_ne : covering_edge_scale(c_n, c_r);
                const LasVegasResult lv =
                    las_vegas_turan(c_n, c_r, nv, std::size_t(ne), seed, max_attempts);
                provenance = provenance_to_json(std::vector<ProvenanceStep>{
                    {"random_covering",
                     {{"n", c_n},
                      {"r", c_r},
                      {"num_vertices", nv},
                      {"num_edges", ne},
                      {"seed", seed},
                      {"attempts", lv.attempts}}}});
                if (!lv.witness) {
                    err << "no covering system found in " << lv.attempts << " attempts\n";
                    return exit_undecided;
                }
                witness = lv.witness;
            } else {  // corollary
                ChainedWitness cw = chained_witness(
                    c_n, c_r, c_k, seed,
                    c_nv ? std::optional<std::size_t>(c_nv) : std::nullopt, max_attempts);
                provenance = provenance_to_json(cw);
                if (!cw.witness) {
                    err << "random stage failed after " << cw.attempts << " attempts\n";
                    return exit_undecided;
                }
                witness = std::move(cw.witness);
            }
            emit(hypergraph_to_json(*witness).dump(2) + "\n", out_path, out);
            if (!out_path.empty())
                write_text_file(provenance_path(out_path), provenance.dump(2) + "\n");
            else
                err << provenance.dump(2) << "\n";
            return exit_ok;
        }

        if (color->parsed()) {
            const Hypergraph h = load_hypergraph(in_path);
            const Method method = method_from_name(method_name);
            std::optional<Coloring> coloring;
            json stats;
            int code = exit_undecided;
            if (method == Method::exact) {
                const OracleResult orc = decide_panchromatic(h, r, budget);
                stats = json{{"method", method_name},
                             {"nodes", orc.nodes},
                             {"status", orc.status == OracleStatus::colorable ? "colorable"
                                        : orc.status == OracleStatus::uncolorable
                                            ? "uncolorable"
                                            : "undecided"}};
                if (orc.status == OracleStatus::colorable) {
                    coloring = orc.coloring;
                    code = exit_ok;
                } else if (orc.status == OracleStatus::uncolorable) {
                    code = exit_false;
                }
            } else {
                ColorerOutcome oc;
                if (method == Method::greedy) {
                    oc = greedy_colorer(h, r);
                } else if (method == Method::alteration) {
                    oc = alteration_colorer(h, r, seed, max_attempts);
                } else {
                    const std::size_t pal =
                        palette ? palette : simplex_palette(h.uniformity(), r);
                    oc = simplex_colorer(h, r, pal, seed, max_attempts);
                }
                stats = attempt_totals_json(oc);
                stats["method"] = method_name;
                if (oc.coloring) {
                    coloring = std::move(oc.coloring);
                    code = exit_ok;
                }
            }
            if (coloring) {
                emit(coloring_to_json(*coloring).dump(2) + "\n", out_path, out);
                (out_path.empty() ? err : out) << stats.dump(2) << "\n";
            } else {
                (out_path.empty() ? err : out) << stats.dump(2) << "\n";
            }
            return code;
        }

        if (verify->parsed()) {
            const Hypergraph h = load_hypergraph(in_path);
            const int modes = int(!coloring_path.empty()) + int(check_turan) + int(check_exact);
            if (modes != 1)
                throw input_error(
                    "verify: pass exactly one of --coloring FILE, --turan, --exact");
            if (!coloring_path.empty()) {
                const Coloring c = load_coloring(coloring_path);
                std::optional<Violation> v;
                try {
                    v = first_violation(h, c);
                } catch (const std::invalid_argument& ex) {
                    throw input_error(std::string("verify: ") + ex.what());
                }
                json verdict{{"panchromatic", !v.has_value()}};
                if (v)
                    verdict["violation"] = json{{"edge_index", v->edge_index},
                                                {"missing_color", v->missing_color}};
                emit(verdict.dump(2) + "\n", out_path, out);
                return v ? exit_false : exit_ok;
            }
            if (r < 2) throw input_error("verify: --turan/--exact need --r >= 2");
            if (check_turan) {
                const bool holds = has_turan_property(h, r);
                emit(json{{"turan", holds}}.dump(2) + "\n", out_path, out);
                return holds ? exit_ok : exit_false;
            }
            const OracleResult orc = decide_panchromatic(h, r, budget);
            json verdict{{"nodes", orc.nodes},
                         {"status", orc.status == OracleStatus::colorable ? "colorable"
                                    : orc.status == OracleStatus::uncolorable ? "uncolorable"
                                                                              : "undecided"}};
            if (orc.coloring) verdict["coloring"] = coloring_to_json(*orc.coloring);
            emit(verdict.dump(2) + "\n", out_path, out);
            return orc.status == OracleStatus::colorable     ? exit_ok
                   : orc.status == OracleStatus::uncolorable ? exit_false
                                                             : exit_undecided;
        }

        if (bounds->parsed()) {
            const auto [n_lo, n_hi] = parse_range(n_range);
            const auto [r_lo, r_hi] = parse_range(r_range);
            const BoundsConstants k = constants_from_map(parse_constants(constant_kvs));
            std::vector<std::pair<std::size_t, std::size_t>> cells;
            for (std::size_t n = n_lo; n <= n_hi; ++n)
                for (std::size_t rr = r_lo; rr <= r_hi; ++rr)
                    if (rr <= n) cells.emplace_back(n, rr);  // r > n cells are skipped
            if (cells.empty()) throw input_error("bounds: grid is empty after r <= n filter");
            const std::vector<BoundsReport> table = bounds_table(cells, k);
            if (format == "json") {
                json rows = json::array();
                for (const BoundsReport& rep : table) rows.push_back(bounds_report_to_json(rep));
                emit(rows.dump(2) + "\n", out_path, out);
            } else {
                emit(bounds_table_csv(table), out_path, out);
            }
            return exit_ok;
        }

        // experiment
        ExperimentSpec spec;
        spec.method = method_from_name(method_name);
        spec.n = e_n;
        spec.r = e_r;
        spec.num_vertices = e_nv;
        spec.num_edges = std::size_t(e_ne);
        spec.trials = trials;
        spec.seed = seed;
        spec.palette = palette;
        spec.max_attempts = max_attempts;
        spec.node_budget = budget;
        if (!in_path.empty()) spec.fixed_instance = load_hypergraph(in_path);
        const ExperimentReport rep = run_experiment(spec);

        std::vector<std::uint64_t> attempts;
        attempts.reserve(rep.rows.size());
        for (const TrialRow& row : rep.rows) attempts.push_back(row.attempts);
        std::sort(attempts.begin(), attempts.end());
        const auto pct = [&](double p) {
            const std::size_t i = std::size_t(p * double(attempts.size() - 1) + 0.5);
            return attempts[std::min(i, attempts.size() - 1)];
        };
        const json aggregate{{"trials", rep.rows.size()},
                             {"successes", rep.successes},
                             {"impossible", rep.impossibles},
                             {"undecided", rep.undecideds},
                             {"success_rate", double(rep.successes) / double(rep.rows.size())},
                             {"attempts_p50", pct(0.50)},
                             {"attempts_p90", pct(0.90)},
                             {"attempts_max", attempts.back()},
                             {"wall_ms", rep.wall_ms}};
        if (out_path.empty()) {
            out << experiment_csv(rep);
            err << aggregate.dump(2) << "\n";
        } else {
            write_text_file(out_path + ".csv", experiment_csv(rep));
            write_text_file(out_path + ".json", aggregate.dump(2) + "\n");
        }
        return exit_ok;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

}  // namespace panchro
