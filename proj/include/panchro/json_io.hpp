#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "panchro/bounds.hpp"
#include "panchro/constructions.hpp"
#include "panchro/hypergraph.hpp"

namespace panchro {

// Thrown for malformed input files; the CLI maps it to exit code 64.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// ------------------------------------------------------------------
// Hypergraph: {"n": ..., "num_vertices": ..., "edges": [[...], ...]}
// ------------------------------------------------------------------

inline json hypergraph_to_json(const Hypergraph& h) {
    json edges = json::array();
    for (const Edge& e : h.edges()) edges.push_back(e);
    return json{{"n", h.uniformity()},
                {"num_vertices", h.num_vertices()},
                {"edges", std::move(edges)}};
}

namespace detail {

inline std::uint64_t require_uint(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_unsigned())
        throw input_error(std::string("expected non-negative integer field '") + field + "'");
    return j[field].get<std::uint64_t>();
}

}  // namespace detail

inline Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object()) throw input_error("hypergraph: expected a JSON object");
    const std::uint64_t n = detail::require_uint(j, "n");
    const std::uint64_t nv = detail::require_uint(j, "num_vertices");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw input_error("hypergraph: expected array field 'edges'");
    std::vector<Edge> edges;
    edges.reserve(j["edges"].size());
    for (const json& je : j["edges"]) {
        if (!je.is_array()) throw input_error("hypergraph: each edge must be an array");
        Edge e;
        e.reserve(je.size());
        for (const json& jv : je) {
            if (!jv.is_number_unsigned())
                throw input_error("hypergraph: vertex indices must be non-negative integers");
            const std::uint64_t v = jv.get<std::uint64_t>();
            if (v >= nv) throw input_error("hypergraph: vertex index out of range");
            e.push_back(Vertex(v));
        }
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(std::size_t(nv), std::size_t(n), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw input_error(std::string("hypergraph: ") + ex.what());
    }
}

// ------------------------------------------------------------------
// Coloring: {"r": ..., "assignment": [...]}
// ------------------------------------------------------------------

inline json coloring_to_json(const Coloring& c) {
    return json{{"r", c.num_colors}, {"assignment", c.assignment}};
}

inline Coloring coloring_from_json(const json& j) {
    if (!j.is_object()) throw input_error("coloring: expected a JSON object");
    const std::uint64_t r = detail::require_uint(j, "r");
    if (r == 0) throw input_error("coloring: r must be >= 1");
    if (!j.contains("assignment") || !j["assignment"].is_array())
        throw input_error("coloring: expected array field 'assignment'");
    Coloring c;
    c.num_colors = std::size_t(r);
    c.assignment.reserve(j["assignment"].size());
    for (const json& jv : j["assignment"]) {
        if (!jv.is_number_unsigned())
            throw input_error("coloring: colors must be non-negative integers");
        const std::uint64_t q = jv.get<std::uint64_t>();
        if (q >= r) throw input_error("coloring: color value out of range");
        c.assignment.push_back(ColorId(q));
    }
    return c;
}

// ------------------------------------------------------------------
// Provenance and bounds reports
// ------------------------------------------------------------------

inline json provenance_to_json(const ChainedWitness& w) {
    json steps = json::array();
    for (const ProvenanceStep& s : w.steps) {
        json params = json::object();
        for (const auto& [key, value] : s.params) params[key] = value;
        steps.push_back(json{{"op", s.op}, {"params", std::move(params)}});
    }
    json claim{{"n", w.n}, {"r", w.r}, {"statement", "no panchromatic r-coloring"}};
    if (w.witness) claim["num_edges"] = w.witness->num_edges();
    return json{{"steps", std::move(steps)},
                {"attempts", w.attempts},
                {"succeeded", w.witness.has_value()},
                {"claim", std::move(claim)}};
}

inline json provenance_to_json(const std::vector<ProvenanceStep>& steps) {
    json out = json::array();
    for (const ProvenanceStep& s : steps) {
        json params = json::object();
        for (const auto& [key, value] : s.params) params[key] = value;
        out.push_back(json{{"op", s.op}, {"params", std::move(params)}});
    }
    return json{{"steps", std::move(out)}};
}

// JSON cannot carry IEEE infinities; they are emitted as strings ("inf",
// "-inf", "nan") in the json format and as bare tokens in CSV.
inline json finite_or_string(double v) {
    if (std::isfinite(v)) return json(v);
    if (std::isnan(v)) return json("nan");
    return json(v > 0 ? "inf" : "-inf");
}

inline json bounds_report_to_json(const BoundsReport& rep) {
    json entries = json::array();
    for (const BoundEntry& e : rep.entries)
        entries.push_back(json{{"name", e.name},
                               {"kind", e.kind == BoundKind::lower ? "lower" : "upper"},
                               {"value", finite_or_string(e.value)},
                               {"log_value", finite_or_string(e.log_value)},
                               {"constant_free", e.constant_free},
                               {"applicable", e.applicable}});
    return json{{"n", rep.n}, {"r", rep.r}, {"entries", std::move(entries)}};
}

namespace detail {

inline std::string csv_double(double v) {
    if (std::isnan(v)) return "nan";
    if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace detail

inline std::string bounds_table_csv(const std::vector<BoundsReport>& reports) {
    std::ostringstream os;
    os << "n,r,name,kind,value,log_value,constant_free,applicable\n";
    for (const BoundsReport& rep : reports)
        for (const BoundEntry& e : rep.entries)
            os << rep.n << ',' << rep.r << ',' << e.name << ','
               << (e.kind == BoundKind::lower ? "lower" : "upper") << ','
               << detail::csv_double(e.value) << ',' << detail::csv_double(e.log_value) << ','
               << (e.constant_free ? "true" : "false") << ','
               << (e.applicable ? "true" : "false") << '\n';
    return os.str();
}

// ------------------------------------------------------------------
// File helpers
// ------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw input_error("invalid JSON in file: " + path);
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
    if (!out) throw input_error("failed writing file: " + path);
}

inline Hypergraph load_hypergraph(const std::string& path) {
    return hypergraph_from_json(load_json_file(path));
}

inline Coloring load_coloring(const std::string& path) {
    return coloring_from_json(load_json_file(path));
}

}  // namespace panchro
