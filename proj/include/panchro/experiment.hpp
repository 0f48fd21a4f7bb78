#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "panchro/colorers.hpp"
#include "panchro/constructions.hpp"
#include "panchro/hypergraph.hpp"
#include "panchro/oracle.hpp"
#include "panchro/rng.hpp"

namespace panchro {

enum class Method { greedy, alteration, simplex, exact };

inline Method method_from_name(const std::string& name) {
    if (name == "greedy") return Method::greedy;
    if (name == "alteration") return Method::alteration;
    if (name == "simplex") return Method::simplex;
    if (name == "exact") return Method::exact;
    throw std::invalid_argument("unknown method '" + name + "'");
}

enum class TrialOutcome { success, impossible, undecided };

inline const char* outcome_name(TrialOutcome o) {
    switch (o) {
        case TrialOutcome::success: return "success";
        case TrialOutcome::impossible: return "impossible";
        default: return "undecided";
    }
}

struct ExperimentSpec {
    Method method = Method::greedy;
    std::size_t n = 0, r = 0;
    std::size_t num_vertices = 0;  // 0 -> 2n
    std::size_t num_edges = 0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::size_t palette = 0;  // simplex only; 0 -> r + ceil(r^2/n)
    std::uint64_t max_attempts = 10'000;
    std::uint64_t node_budget = default_node_budget;
    std::optional<Hypergraph> fixed_instance;  // bypasses random generation
};

struct TrialRow {
    std::uint64_t trial = 0;          // 0-based
    std::uint64_t instance_seed = 0;  // 0 when a fixed instance is used
    std::uint64_t method_seed = 0;
    TrialOutcome outcome = TrialOutcome::undecided;
    std::uint64_t attempts = 0;
    AttemptStats totals;  // summed over attempts; oracle nodes land in attempts=1 rows
    std::uint64_t nodes = 0;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<TrialRow> rows;
    std::uint64_t successes = 0, impossibles = 0, undecideds = 0;
    double wall_ms = 0.0;  // aggregate only; never in per-trial rows
};

// Runs `trials` independent seeded trials. Trial t draws its instance from
// derive_seed(derive_seed(seed, t), 0) and its method randomness from
// derive_seed(derive_seed(seed, t), 1), so the instance stream is invariant
// under method/palette changes. Budget exhaustion is reported as
// `undecided`, never as `impossible`; only the exact oracle can report
// `impossible`.
inline ExperimentReport run_experiment(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("experiment: need trials >= 1");
    if (!spec.fixed_instance && spec.n < 1)
        throw std::invalid_argument("experiment: random family needs n >= 1");
    ExperimentReport rep;
    rep.spec = spec;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t t = 0; t < spec.trials; ++t) {
        TrialRow row;
        row.trial = t;
        const std::uint64_t trial_seed = derive_seed(spec.seed, t);
        row.method_seed = derive_seed(trial_seed, 1);

        Hypergraph h = [&] {
            if (spec.fixed_instance) return *spec.fixed_instance;
            row.instance_seed = derive_seed(trial_seed, 0);
            const std::size_t nv = spec.num_vertices ? spec.num_vertices : 2 * spec.n;
            return random_uniform_hypergraph(spec.n, nv, spec.num_edges, row.instance_seed);
        }();

        switch (spec.method) {
            case Method::greedy: {
                const ColorerOutcome oc = greedy_colorer(h, spec.r);
                row.outcome = oc.coloring ? TrialOutcome::success : TrialOutcome::undecided;
                row.attempts = oc.attempts;
                break;
            }
            case Method::alteration: {
                const ColorerOutcome oc =
                    alteration_colorer(h, spec.r, row.method_seed, spec.max_attempts);
                row.outcome = oc.coloring ? TrialOutcome::success : TrialOutcome::undecided;
                row.attempts = oc.attempts;
                for (const AttemptStats& s : oc.stats) {
                    row.totals.bad_pairs += s.bad_pairs;
                    row.totals.conflicts += s.conflicts;
                    row.totals.bad_colors += s.bad_colors;
                }
                break;
            }
            case Method::simplex: {
                const std::size_t palette =
                    spec.palette ? spec.palette : simplex_palette(h.uniformity(), spec.r);
                const ColorerOutcome oc =
                    simplex_colorer(h, spec.r, palette, row.method_seed, spec.max_attempts);
                row.outcome = oc.coloring ? TrialOutcome::success : TrialOutcome::undecided;
                row.attempts = oc.attempts;
                for (const AttemptStats& s : oc.stats) {
                    row.totals.bad_pairs += s.bad_pairs;
                    row.totals.conflicts += s.conflicts;
                    row.totals.bad_colors += s.bad_colors;
                }
                break;
            }
            case Method::exact: {
                const OracleResult orc = decide_panchromatic(h, spec.r, spec.node_budget);
                row.outcome = orc.status == OracleStatus::colorable ? TrialOutcome::success
                              : orc.status == OracleStatus::uncolorable
                                  ? TrialOutcome::impossible
                                  : TrialOutcome::undecided;
                row.attempts = 1;
                row.nodes = orc.nodes;
                break;
            }
        }
        switch (row.outcome) {
            case TrialOutcome::success: ++rep.successes; break;
            case TrialOutcome::impossible: ++rep.impossibles; break;
            case TrialOutcome::undecided: ++rep.undecideds; break;
        }
        rep.rows.push_back(row);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

// Byte-identical across reruns of the same spec: no timing data in rows.
inline std::string experiment_csv(const ExperimentReport& rep) {
    std::ostringstream os;
    os << "trial,instance_seed,method_seed,outcome,attempts,bad_pairs,conflicts,bad_colors,"
          "nodes\n";
    for (const TrialRow& r : rep.rows)
        os << r.trial << ',' << r.instance_seed << ',' << r.method_seed << ','
           << outcome_name(r.outcome) << ',' << r.attempts << ',' << r.totals.bad_pairs << ','
           << r.totals.conflicts << ',' << r.totals.bad_colors << ',' << r.nodes << '\n';
    return os.str();
}

}  // namespace panchro
