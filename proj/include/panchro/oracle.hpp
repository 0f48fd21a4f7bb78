#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "panchro/hypergraph.hpp"

namespace panchro {

enum class OracleStatus { colorable, uncolorable, undecided };

struct OracleResult {
    OracleStatus status = OracleStatus::undecided;
    std::optional<Coloring> coloring;  // present iff status == colorable
    std::uint64_t nodes = 0;           // (vertex, color) assignments attempted
};

inline constexpr std::uint64_t default_node_budget = 100'000'000;

namespace detail {

// Backtracking search over one connected component.
// Returns 1 = coloring found (written into `assignment` at global indices),
// 0 = search space exhausted (no coloring), -1 = node budget exhausted.
inline int solve_component(const Hypergraph& h, std::size_t r,
                           const std::vector<Vertex>& verts,
                           const std::vector<std::size_t>& edge_ids,
                           std::uint64_t budget, std::uint64_t& nodes,
                           std::vector<ColorId>& assignment) {
    const std::size_t nv = verts.size();
    const std::size_t ne = edge_ids.size();

    std::vector<std::uint32_t> local(h.num_vertices(), 0);
    for (std::size_t i = 0; i < nv; ++i) local[verts[i]] = std::uint32_t(i);

    std::vector<std::vector<std::uint32_t>> incident(nv);
    for (std::size_t j = 0; j < ne; ++j)
        for (Vertex v : h.edge(edge_ids[j])) incident[local[v]].push_back(std::uint32_t(j));

    // Assign most-constrained vertices first: descending edge degree,
    // ties by ascending vertex index (verts is ascending, so local order
    // mirrors global order).
    std::vector<std::uint32_t> order(nv);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (incident[a].size() != incident[b].size())
            return incident[a].size() > incident[b].size();
        return a < b;
    });

    // Per-edge live state; an edge stays completable iff
    // uncolored + distinct-colors-present >= r.
    std::vector<std::uint32_t> uncolored(ne, std::uint32_t(h.uniformity()));
    std::vector<std::uint32_t> distinct(ne, 0);
    std::vector<std::uint32_t> cnt(ne * r, 0);
    const ColorId none = ColorId(r);
    std::vector<ColorId> col(nv, none);

    // used[d] = number of colors in use before depth d; a fresh color may
    // only be the next unused one, which cuts color-permutation symmetry.
    std::vector<std::uint32_t> used(nv + 1, 0);
    std::vector<ColorId> next_color(nv + 1, 0);

    const auto apply = [&](std::uint32_t v, ColorId q) {
        for (std::uint32_t e : incident[v]) {
            --uncolored[e];
            if (cnt[e * r + q]++ == 0) ++distinct[e];
        }
    };
    const auto undo = [&](std::uint32_t v, ColorId q) {
        for (std::uint32_t e : incident[v]) {
            ++uncolored[e];
            if (--cnt[e * r + q] == 0) --distinct[e];
        }
    };

    std::size_t d = 0;
    next_color[0] = 0;
    used[0] = 0;
    for (;;) {
        if (d == nv) {
            for (std::size_t i = 0; i < nv; ++i) assignment[verts[i]] = col[i];
            return 1;
        }
        const std::uint32_t v = order[d];
        const ColorId cmax = ColorId(std::min<std::size_t>(used[d], r - 1));
        ColorId q = next_color[d];
        bool placed = false;
        for (; q <= cmax; ++q) {
            if (++nodes > budget) return -1;
            apply(v, q);
            bool ok = true;
            for (std::uint32_t e : incident[v])
                if (uncolored[e] + distinct[e] < r) { ok = false; break; }
            if (ok) {
                col[v] = q;
                next_color[d] = q + 1;
                ++d;
                next_color[d] = 0;
                used[d] = used[d - 1] + (q == used[d - 1] ? 1 : 0);
                placed = true;
                break;
            }
            undo(v, q);
        }
        if (placed) continue;
        if (d == 0) return 0;
        --d;
        const std::uint32_t pv = order[d];
        undo(pv, col[pv]);
        col[pv] = none;  // next_color[d] already points past the undone color
    }
}

}  // namespace detail

// Exact decision: does h admit a panchromatic r-coloring? Exhaustive
// backtracking with per-edge pruning, independent connected components
// (solved smallest first), and color-symmetry breaking. A blown node budget
// yields `undecided`, never a wrong answer.
inline OracleResult decide_panchromatic(const Hypergraph& h, std::size_t r,
                                        std::uint64_t node_budget = default_node_budget) {
    if (r < 1) throw std::invalid_argument("oracle: need r >= 1");
    const std::size_t V = h.num_vertices();
    OracleResult res;

    if (h.num_edges() == 0 || r == 1) {
        res.status = OracleStatus::colorable;
        res.coloring = Coloring{r, std::vector<ColorId>(V, 0)};
        return res;
    }
    if (h.uniformity() < r) {  // an edge cannot hold r distinct colors
        res.status = OracleStatus::uncolorable;
        return res;
    }

    // Union-find over vertices sharing an edge.
    std::vector<Vertex> parent(V);
    std::iota(parent.begin(), parent.end(), Vertex(0));
    const auto find = [&](Vertex x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    std::vector<std::uint32_t> degree(V, 0);
    for (const Edge& e : h.edges()) {
        for (Vertex v : e) ++degree[v];
        const Vertex root = find(e[0]);
        for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = root;
    }

    struct Component {
        std::vector<Vertex> verts;
        std::vector<std::size_t> edge_ids;
    };
    std::vector<Component> comps;
    std::vector<std::int32_t> comp_of_root(V, -1);
    for (Vertex v = 0; v < V; ++v) {
        if (degree[v] == 0) continue;  // isolated vertices take color 0
        const Vertex root = find(v);
        if (comp_of_root[root] < 0) {
            comp_of_root[root] = std::int32_t(comps.size());
            comps.emplace_back();
        }
        comps[std::size_t(comp_of_root[root])].verts.push_back(v);
    }
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei)
        comps[std::size_t(comp_of_root[find(h.edge(ei)[0])])].edge_ids.push_back(ei);

    // Small components first: cheap refutations come before big searches.
    std::vector<std::size_t> comp_order(comps.size());
    std::iota(comp_order.begin(), comp_order.end(), std::size_t(0));
    std::sort(comp_order.begin(), comp_order.end(), [&](std::size_t a, std::size_t b) {
        if (comps[a].verts.size() != comps[b].verts.size())
            return comps[a].verts.size() < comps[b].verts.size();
        return comps[a].verts[0] < comps[b].verts[0];
    });

    std::vector<ColorId> assignment(V, 0);
    for (std::size_t ci : comp_order) {
        const int st = detail::solve_component(h, r, comps[ci].verts, comps[ci].edge_ids,
                                               node_budget, res.nodes, assignment);
        if (st == 0) { res.status = OracleStatus::uncolorable; return res; }
        if (st < 0) { res.status = OracleStatus::undecided; return res; }
    }
    res.status = OracleStatus::colorable;
    res.coloring = Coloring{r, std::move(assignment)};
    return res;
}

}  // namespace panchro
