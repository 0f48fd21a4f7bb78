#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "panchro/hypergraph.hpp"
#include "panchro/rng.hpp"
#include "panchro/turan.hpp"

namespace panchro {

namespace detail {

// C(n, k), saturating at `cap` (also on intermediate overflow).
inline std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t res = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t tmp;
        if (__builtin_mul_overflow(res, n - k + i, &tmp)) return cap;
        res = tmp / i;  // exact: product of i consecutive integers is divisible by i!
        if (res >= cap) return cap;
    }
    return res;
}

inline std::uint64_t mul_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    std::uint64_t tmp;
    if (__builtin_mul_overflow(a, b, &tmp)) return cap;
    return std::min(tmp, cap);
}

// ln C(n, k)
inline double lchoose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t(0));
    for (;;) {
        fn(const_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// ------------------------------------------------------------------
// Shift system witness
// ------------------------------------------------------------------

struct ShiftParams {
    std::size_t n = 0;  // uniformity, divisible by t
    std::size_t r = 0;  // color count the witness defeats
    std::size_t t = 1;  // block size knob
    std::uint64_t raw_edge_budget = 1'000'000;
};

// Vertices are k positions x (r*t) lines, index = pos * (r*t) + line, with
// k = ceil((r/(r-1))^t) * (n/t). Edges: for every t-subset A of lines, every
// shift vector in [0,k)^t and every (n/t)-subset B of positions, the set
// { ((b + shift_a) mod k, a) : a in A, b in B }. Cyclic shifts force some
// line of any r-coloring to use a color on at most floor(k/r) positions,
// and some edge avoids that color entirely, so no panchromatic r-coloring
// exists. Raw edge count is checked against the budget before enumeration.
inline Hypergraph shift_witness(const ShiftParams& p) {
    const std::size_t n = p.n, r = p.r, t = p.t;
    if (n < 1 || r < 2 || t < 1 || n % t != 0)
        throw std::invalid_argument("shift witness: need n >= 1, r >= 2, t >= 1, t | n");

    using u128 = unsigned __int128;
    u128 num = 1, den = 1;
    for (std::size_t i = 0; i < t; ++i) {
        num *= r;
        den *= (r - 1);
        if (num > (u128(1) << 96))
            throw std::length_error("shift witness: (r/(r-1))^t out of range");
    }
    const u128 kq = (num + den - 1) / den;  // ceil((r/(r-1))^t)
    const u128 k128 = kq * (n / t);
    if (k128 > (u128(1) << 24))
        throw std::length_error("shift witness: position count k out of range");
    const std::size_t k = std::size_t(k128);
    const std::size_t lines = r * t;
    const std::size_t num_vertices = k * lines;
    if (num_vertices > (std::size_t(1) << 28))
        throw std::length_error("shift witness: vertex count out of range");

    const std::uint64_t cap = ~std::uint64_t(0);
    std::uint64_t raw = detail::choose_capped(lines, t, cap);
    std::uint64_t kt = 1;
    for (std::size_t i = 0; i < t; ++i) kt = detail::mul_capped(kt, k, cap);
    raw = detail::mul_capped(raw, kt, cap);
    raw = detail::mul_capped(raw, detail::choose_capped(k, n / t, cap), cap);
    if (raw > p.raw_edge_budget)
        throw std::length_error("shift witness: raw edge count " +
                                (raw == cap ? std::string(">= 2^64") : std::to_string(raw)) +
                                " exceeds budget " + std::to_string(p.raw_edge_budget));

    std::vector<Edge> edges;
    edges.reserve(std::size_t(raw));
    const std::size_t b = n / t;
    detail::for_each_combination(lines, t, [&](const std::vector<std::size_t>& A) {
        std::vector<std::size_t> shift(t, 0);
        for (;;) {
            detail::for_each_combination(k, b, [&](const std::vector<std::size_t>& B) {
                Edge e;
                e.reserve(n);
                for (std::size_t ai = 0; ai < t; ++ai)
                    for (std::size_t bi : B) {
                        const std::size_t pos = (bi + shift[ai]) % k;
                        e.push_back(Vertex(pos * lines + A[ai]));
                    }
                std::sort(e.begin(), e.end());
                edges.push_back(std::move(e));
            });
            std::size_t i = 0;
            while (i < t && ++shift[i] == k) { shift[i] = 0; ++i; }
            if (i == t) break;
        }
    });
    return Hypergraph(num_vertices, n, std::move(edges));
}

// ------------------------------------------------------------------
// Blow-up
// ------------------------------------------------------------------

// Replace every vertex by m clones (vertex v -> block {v*m, ..., v*m+m-1})
// and every edge by the union of its blocks. An (n,r)-witness becomes an
// (nm, rm)-witness with the same edge count.
inline Hypergraph blow_up(const Hypergraph& base, std::size_t m) {
    if (m < 1) throw std::invalid_argument("blow up: need m >= 1");
    std::vector<Edge> edges;
    edges.reserve(base.num_edges());
    for (const Edge& e : base.edges()) {
        Edge big;
        big.reserve(e.size() * m);
        for (Vertex v : e)
            for (std::size_t i = 0; i < m; ++i) big.push_back(Vertex(std::size_t(v) * m + i));
        edges.push_back(std::move(big));
    }
    // Block expansion preserves lexicographic edge order and distinctness.
    return Hypergraph::from_canonical(base.num_vertices() * m, base.uniformity() * m,
                                      std::move(edges));
}

// ------------------------------------------------------------------
// Random covering systems
// ------------------------------------------------------------------

// num_edges edges drawn uniformly with replacement from all n-subsets of
// the vertex set; canonical form removes duplicates, so the result may have
// fewer edges than requested.
inline Hypergraph sample_uniform_edges(std::size_t n, std::size_t num_vertices,
                                       std::size_t num_edges, std::uint64_t seed) {
    if (n < 1 || n > num_vertices)
        throw std::invalid_argument("sample: need 1 <= n <= num_vertices");
    Rng rng(seed);
    std::vector<Vertex> pool(num_vertices);
    std::iota(pool.begin(), pool.end(), Vertex(0));
    std::vector<Edge> edges;
    edges.reserve(num_edges);
    for (std::size_t j = 0; j < num_edges; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t pick = i + std::size_t(rng.below(num_vertices - i));
            std::swap(pool[i], pool[pick]);
        }
        Edge e(pool.begin(), pool.begin() + std::ptrdiff_t(n));
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph(num_vertices, n, std::move(edges));
}

// Exactly num_edges DISTINCT uniformly random edges.
inline Hypergraph random_uniform_hypergraph(std::size_t n, std::size_t num_vertices,
                                            std::size_t num_edges, std::uint64_t seed) {
    if (n < 1 || n > num_vertices)
        throw std::invalid_argument("random hypergraph: need 1 <= n <= num_vertices");
    if (num_edges > detail::choose_capped(num_vertices, n, ~std::uint64_t(0)))
        throw std::invalid_argument("random hypergraph: more edges requested than exist");
    Rng rng(seed);
    std::vector<Vertex> pool(num_vertices);
    std::iota(pool.begin(), pool.end(), Vertex(0));
    std::set<Edge> edges;
    while (edges.size() < num_edges) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t pick = i + std::size_t(rng.below(num_vertices - i));
            std::swap(pool[i], pool[pick]);
        }
        Edge e(pool.begin(), pool.begin() + std::ptrdiff_t(n));
        std::sort(e.begin(), e.end());
        edges.insert(std::move(e));
    }
    return Hypergraph::from_canonical(num_vertices, n,
                                      std::vector<Edge>(edges.begin(), edges.end()));
}

// Smallest m such that m uniform edge draws cover every subset of size
// ceil((r-1)V/r) with probability >= 1/2 (union bound, computed in logs).
inline std::uint64_t edge_count_for_union_bound(std::size_t n, std::size_t r,
                                                std::size_t num_vertices) {
    if (r < 2 || n < 1 || num_vertices < n)
        throw std::invalid_argument("edge count: need r >= 2, 1 <= n <= num_vertices");
    const std::size_t s = covering_subset_size(num_vertices, r);
    if (s < n)
        throw std::invalid_argument("edge count: covering subsets smaller than an edge");
    const double V = double(num_vertices);
    const double lp = detail::lchoose(double(s), double(n)) - detail::lchoose(V, double(n));
    if (lp >= 0.0) return 1;  // s == V: a single draw covers the only subset
    const double p = std::exp(lp);
    const double need = (detail::lchoose(V, double(s)) + std::log(2.0)) / -std::log1p(-p);
    if (!(need < 1e15))
        throw std::length_error("edge count: parameters need an astronomically large draw");
    return std::max<std::uint64_t>(1, std::uint64_t(std::ceil(need)));
}

struct LasVegasResult {
    std::optional<Hypergraph> witness;  // passes has_turan_property(., r)
    std::uint64_t attempts = 0;         // draws consumed (== max_attempts on failure)
};

// Resample until the covering property holds; only verified hypergraphs are
// ever returned. Attempt i uses seed derive_seed(seed, i).
inline LasVegasResult las_vegas_turan(std::size_t n, std::size_t r, std::size_t num_vertices,
                                      std::size_t num_edges, std::uint64_t seed,
                                      std::uint64_t max_attempts = 10'000) {
    if (max_attempts < 1) throw std::invalid_argument("las vegas: need max_attempts >= 1");
    for (std::uint64_t i = 1; i <= max_attempts; ++i) {
        Hypergraph h = sample_uniform_edges(n, num_vertices, num_edges, derive_seed(seed, i));
        if (has_turan_property(h, r)) return {std::move(h), i};
    }
    return {std::nullopt, max_attempts};
}

// ------------------------------------------------------------------
// Shrinking and the chained witness pipeline
// ------------------------------------------------------------------

// Keep the n_target smallest vertices of every edge. Any panchromatic
// coloring of the result restricts to one of the original, so
// uncolorability transfers upward in n.
inline Hypergraph shrink_edges(const Hypergraph& h, std::size_t n_target) {
    if (n_target < 1 || n_target > h.uniformity())
        throw std::invalid_argument("shrink: need 1 <= n_target <= uniformity");
    if (n_target == h.uniformity()) return h;
    std::vector<Edge> edges;
    edges.reserve(h.num_edges());
    for (const Edge& e : h.edges())
        edges.emplace_back(e.begin(), e.begin() + std::ptrdiff_t(n_target));
    return Hypergraph(h.num_vertices(), n_target, std::move(edges));
}

struct ProvenanceStep {
    std::string op;
    std::vector<std::pair<std::string, std::uint64_t>> params;
};

struct ChainedWitness {
    std::optional<Hypergraph> witness;  // n-uniform, no panchromatic r-coloring
    std::vector<ProvenanceStep> steps;
    std::uint64_t attempts = 0;  // random-stage draws consumed
    std::size_t n = 0, r = 0;    // the claim the witness certifies
};

// Chain: covering witness at (n1, k) -> blow-up by m = floor(r/k) ->
// shrink to uniformity n, where n1 = ceil(n/(mk)) * k. Each stage preserves
// "no panchromatic coloring" for the stated parameters, so the final
// hypergraph certifies p(n, r) <= |E|. The (n1, k) = (2, 2) base is the
// triangle; otherwise a verified random covering system is drawn.
inline ChainedWitness chained_witness(std::size_t n, std::size_t r, std::size_t k,
                                      std::uint64_t seed,
                                      std::optional<std::size_t> base_vertices = std::nullopt,
                                      std::uint64_t max_attempts = 10'000) {
    if (k < 2 || k > r) throw std::invalid_argument("chained witness: need 2 <= k <= r");
    if (n < 1) throw std::invalid_argument("chained witness: need n >= 1");
    const std::size_t m = r / k;
    const std::size_t mk = m * k;
    const std::size_t n1 = ((n + mk - 1) / mk) * k;

    ChainedWitness out;
    out.n = n;
    out.r = r;

    std::optional<Hypergraph> base;
    if (n1 == 2 && k == 2) {
        base = triangle();
        out.steps.push_back({"triangle",
                             {{"num_vertices", 3}, {"num_edges", 3}, {"n", 2}, {"r", 2}}});
    } else {
        const std::size_t V = base_vertices.value_or(n1 * n1);
        const std::uint64_t M = edge_count_for_union_bound(n1, k, V);
        LasVegasResult lv = las_vegas_turan(n1, k, V, std::size_t(M), derive_seed(seed, 1),
                                            max_attempts);
        out.attempts = lv.attempts;
        if (!lv.witness) return out;  // witness empty: random stage exhausted its retries
        out.steps.push_back({"random_covering",
                             {{"n", n1},
                              {"r", k},
                              {"num_vertices", V},
                              {"num_edges", M},
                              {"seed", derive_seed(seed, 1)},
                              {"attempts", lv.attempts},
                              {"edges_kept", lv.witness->num_edges()}}});
        base = std::move(lv.witness);
    }

    Hypergraph h = (m > 1) ? blow_up(*base, m) : std::move(*base);
    if (m > 1)
        out.steps.push_back({"blow_up",
                             {{"m", m},
                              {"num_vertices", h.num_vertices()},
                              {"uniformity", h.uniformity()},
                              {"num_edges", h.num_edges()}}});
    if (h.uniformity() > n) {
        h = shrink_edges(h, n);
        out.steps.push_back({"shrink_edges",
                             {{"n_target", n}, {"num_edges", h.num_edges()}}});
    }
    out.witness = std::move(h);
    return out;
}

// Edge count c * n^2 * ln(r) / r * (r/(r-1))^n rounded up: the scale at
// which a uniform draw is a covering system with constant probability.
inline std::uint64_t covering_edge_scale(std::size_t n, std::size_t r, double c = 1.0) {
    if (r < 2 || n < 1 || c <= 0.0)
        throw std::invalid_argument("covering edge scale: need n >= 1, r >= 2, c > 0");
    const double y = double(r);
    const double lv = std::log(c) + 2.0 * std::log(double(n)) + std::log(std::log(y)) -
                      std::log(y) + double(n) * std::log(y / (y - 1.0));
    if (!(lv < std::log(1e15)))
        throw std::length_error("covering edge scale: out of integer range");
    return std::max<std::uint64_t>(1, std::uint64_t(std::ceil(std::exp(lv))));
}

}  // namespace panchro
