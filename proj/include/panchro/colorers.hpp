#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "panchro/hypergraph.hpp"
#include "panchro/rng.hpp"

namespace panchro {

struct AttemptStats {
    std::uint64_t bad_pairs = 0;   // (edge, color) misses in the palette coloring
    std::uint64_t conflicts = 0;   // vertices demanded for two different colors
    std::uint64_t bad_colors = 0;  // palette colors discarded
};

struct ColorerOutcome {
    std::optional<Coloring> coloring;  // r-coloring, verified panchromatic
    std::uint64_t attempts = 0;
    std::vector<AttemptStats> stats;   // one entry per attempt, in order
};

// ------------------------------------------------------------------
// Greedy: guaranteed whenever |E| <= floor(n/r)
// ------------------------------------------------------------------

// Walks edges in canonical order; in each edge the r smallest-indexed
// still-uncolored vertices receive colors 0..r-1. Each edge consumes r
// fresh vertices out of its n, so with |E| <= floor(n/r) the supply never
// runs out. Leftover vertices get color 0. Failure (an edge with fewer
// than r fresh vertices) is reported as "no coloring found" — it proves
// nothing about colorability.
inline ColorerOutcome greedy_colorer(const Hypergraph& h, std::size_t r) {
    if (r < 1) throw std::invalid_argument("greedy: need r >= 1");
    if (r > h.uniformity()) throw std::invalid_argument("greedy: need r <= uniformity");
    ColorerOutcome out;
    out.attempts = 1;
    out.stats.push_back({});
    std::vector<ColorId> col(h.num_vertices(), 0);
    std::vector<std::uint8_t> done(h.num_vertices(), 0);
    for (const Edge& e : h.edges()) {
        ColorId next = 0;
        for (Vertex v : e) {
            if (next == ColorId(r)) break;
            if (!done[v]) { col[v] = next++; done[v] = 1; }
        }
        if (next < ColorId(r)) return out;
    }
    Coloring c{r, std::move(col)};
    if (!is_panchromatic(h, c))
        throw std::logic_error("greedy: verification failed");  // unreachable by construction
    out.coloring = std::move(c);
    return out;
}

// ------------------------------------------------------------------
// Alteration: random a-coloring, discard the bad colors
// ------------------------------------------------------------------

// Working palette a = max(r+1, ceil((n-1)r/(n-r))), the size at which a
// uniformly random a-coloring misses few enough colors per edge.
inline std::size_t alteration_palette(std::size_t n, std::size_t r) {
    if (r < 2 || r >= n) throw std::invalid_argument("alteration: need 2 <= r < n");
    const std::size_t a = ((n - 1) * r + (n - r) - 1) / (n - r);
    return std::max(r + 1, a);
}

// One attempt: color uniformly from the palette, mark every color that some
// edge misses as bad, accept iff at least r good colors remain. The r
// smallest good colors are kept and relabeled 0..r-1; every other color
// collapses onto the smallest kept one, which can only add occurrences, so
// the result stays panchromatic.
inline std::optional<Coloring> alteration_attempt(const Hypergraph& h, std::size_t r,
                                                  std::size_t palette, Rng& rng,
                                                  AttemptStats& stats) {
    std::vector<ColorId> col(h.num_vertices());
    for (ColorId& q : col) q = ColorId(rng.below(palette));
    const std::vector<Violation> misses = find_missing_pairs(h, Coloring{palette, col});
    stats.bad_pairs = misses.size();
    std::vector<std::uint8_t> bad(palette, 0);
    for (const Violation& v : misses) bad[v.missing_color] = 1;
    std::size_t bad_count = 0;
    for (std::uint8_t b : bad) bad_count += b;
    stats.bad_colors = bad_count;
    if (palette - bad_count < r) return std::nullopt;

    std::vector<ColorId> rank(palette, 0);  // non-kept colors -> smallest kept (rank 0)
    std::size_t kept = 0;
    for (std::size_t q = 0; q < palette && kept < r; ++q)
        if (!bad[q]) rank[q] = ColorId(kept++);
    std::vector<ColorId> relabeled(h.num_vertices());
    for (std::size_t v = 0; v < col.size(); ++v) relabeled[v] = rank[col[v]];
    Coloring c{r, std::move(relabeled)};
    if (!is_panchromatic(h, c))
        throw std::logic_error("alteration: verification failed");  // unreachable
    return c;
}

// Las Vegas wrapper; attempt i draws from derive_seed(seed, i).
inline ColorerOutcome alteration_colorer(const Hypergraph& h, std::size_t r,
                                         std::uint64_t seed,
                                         std::uint64_t max_attempts = 10'000) {
    const std::size_t a = alteration_palette(h.uniformity(), r);
    ColorerOutcome out;
    for (std::uint64_t i = 1; i <= max_attempts; ++i) {
        Rng rng(derive_seed(seed, i));
        AttemptStats st;
        std::optional<Coloring> c = alteration_attempt(h, r, a, rng, st);
        out.stats.push_back(st);
        out.attempts = i;
        if (c) { out.coloring = std::move(c); return out; }
    }
    return out;
}

// ------------------------------------------------------------------
// Simplex-skeleton colorer
// ------------------------------------------------------------------

// A point on the 1-skeleton of the (palette-1)-simplex: it lies on the unit
// segment between simplex vertices u < w, at `param` from u.
struct SkeletonPoint {
    ColorId u = 0, w = 1;
    double param = 0.0;  // in [0, 1]
};

// Shortest-path distance along the skeleton from p to simplex vertex v:
// off the carrying segment the path exits through the nearer endpoint.
inline double skeleton_dist(const SkeletonPoint& p, ColorId v) {
    if (v == p.u) return p.param;
    if (v == p.w) return 1.0 - p.param;
    return 1.0 + std::min(p.param, 1.0 - p.param);
}

// One uniform point per hypergraph vertex: a uniformly chosen segment, then
// a uniform offset. Draw order (segment, then offset, vertex by vertex) is
// part of the seeded contract.
inline std::vector<SkeletonPoint> sample_skeleton_points(std::size_t num_points,
                                                         std::size_t palette, Rng& rng) {
    if (palette < 2) throw std::invalid_argument("skeleton: need palette >= 2");
    std::vector<std::pair<ColorId, ColorId>> segs;
    segs.reserve(palette * (palette - 1) / 2);
    for (ColorId u = 0; u + 1 < ColorId(palette); ++u)
        for (ColorId w = u + 1; w < ColorId(palette); ++w) segs.emplace_back(u, w);
    std::vector<SkeletonPoint> pts(num_points);
    for (SkeletonPoint& p : pts) {
        const auto [u, w] = segs[std::size_t(rng.below(segs.size()))];
        p = SkeletonPoint{u, w, rng.unit()};
    }
    return pts;
}

struct ConflictTriple {
    Vertex vertex = 0;
    ColorId color_a = 0, color_b = 0;  // color_a < color_b
};

// For each edge and palette color, the demanded vertex: the edge vertex
// whose point lies nearest that simplex vertex (ties -> smallest index).
struct DemandMap {
    std::size_t palette = 0;
    std::vector<Vertex> demanded;           // [edge * palette + color]
    std::vector<ConflictTriple> conflicts;  // vertex ascending, color pair lex
};

inline DemandMap build_demand_map(const Hypergraph& h,
                                  const std::vector<SkeletonPoint>& pts,
                                  std::size_t palette) {
    if (pts.size() != h.num_vertices())
        throw std::invalid_argument("demand map: one point per vertex required");
    DemandMap dm;
    dm.palette = palette;
    dm.demanded.assign(h.num_edges() * palette, 0);
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
        const Edge& e = h.edge(ei);
        for (std::size_t q = 0; q < palette; ++q) {
            Vertex best = e[0];
            double best_d = skeleton_dist(pts[e[0]], ColorId(q));
            for (std::size_t i = 1; i < e.size(); ++i) {
                const double d = skeleton_dist(pts[e[i]], ColorId(q));
                if (d < best_d) { best_d = d; best = e[i]; }
            }
            dm.demanded[ei * palette + q] = best;
        }
    }
    std::vector<std::vector<ColorId>> at(h.num_vertices());
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei)
        for (std::size_t q = 0; q < palette; ++q)
            at[dm.demanded[ei * palette + q]].push_back(ColorId(q));
    for (Vertex v = 0; v < Vertex(h.num_vertices()); ++v) {
        auto& qs = at[v];
        std::sort(qs.begin(), qs.end());
        qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
        for (std::size_t i = 0; i < qs.size(); ++i)
            for (std::size_t j = i + 1; j < qs.size(); ++j)
                dm.conflicts.push_back(ConflictTriple{v, qs[i], qs[j]});
    }
    return dm;
}

// Palette that keeps the expected conflict count small: r + ceil(r^2/n).
inline std::size_t simplex_palette(std::size_t n, std::size_t r) {
    if (n < 1 || r < 2) throw std::invalid_argument("simplex palette: need n >= 1, r >= 2");
    return r + (r * r + n - 1) / n;
}

// One attempt: embed vertices on the skeleton, build demands, discard both
// colors of every conflict, accept iff >= r good colors remain. Kept colors
// are the r smallest good ones; each edge's demanded vertex for a kept
// color takes that color (consistent: a vertex demanded two kept colors
// would be a conflict), everything else takes the smallest kept color.
inline std::optional<Coloring> simplex_attempt(const Hypergraph& h, std::size_t r,
                                               std::size_t palette, Rng& rng,
                                               AttemptStats& stats) {
    const std::vector<SkeletonPoint> pts =
        sample_skeleton_points(h.num_vertices(), palette, rng);
    const DemandMap dm = build_demand_map(h, pts, palette);

    std::vector<std::uint8_t> bad(palette, 0);
    for (const ConflictTriple& t : dm.conflicts) {
        bad[t.color_a] = 1;
        bad[t.color_b] = 1;
    }
    std::size_t conflict_vertices = 0;
    for (std::size_t i = 0; i < dm.conflicts.size(); ++i)
        if (i == 0 || dm.conflicts[i].vertex != dm.conflicts[i - 1].vertex)
            ++conflict_vertices;
    stats.conflicts = conflict_vertices;
    std::size_t bad_count = 0;
    for (std::uint8_t b : bad) bad_count += b;
    stats.bad_colors = bad_count;
    if (palette - bad_count < r) return std::nullopt;

    std::vector<ColorId> rank(palette, 0);
    std::vector<std::uint8_t> kept(palette, 0);
    std::size_t taken = 0;
    for (std::size_t q = 0; q < palette && taken < r; ++q)
        if (!bad[q]) { rank[q] = ColorId(taken++); kept[q] = 1; }

    std::vector<ColorId> col(h.num_vertices(), 0);  // default: smallest kept color
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei)
        for (std::size_t q = 0; q < palette; ++q)
            if (kept[q]) col[dm.demanded[ei * palette + q]] = rank[q];
    Coloring c{r, std::move(col)};
    if (!is_panchromatic(h, c))
        throw std::logic_error("simplex: verification failed");  // unreachable
    return c;
}

// Las Vegas wrapper; attempt i draws from derive_seed(seed, i).
inline ColorerOutcome simplex_colorer(const Hypergraph& h, std::size_t r, std::size_t palette,
                                      std::uint64_t seed, std::uint64_t max_attempts = 10'000) {
    if (r < 2) throw std::invalid_argument("simplex: need r >= 2");
    if (palette < r) throw std::invalid_argument("simplex: need palette >= r");
    ColorerOutcome out;
    for (std::uint64_t i = 1; i <= max_attempts; ++i) {
        Rng rng(derive_seed(seed, i));
        AttemptStats st;
        std::optional<Coloring> c = simplex_attempt(h, r, palette, rng, st);
        out.stats.push_back(st);
        out.attempts = i;
        if (c) { out.coloring = std::move(c); return out; }
    }
    return out;
}

}  // namespace panchro
