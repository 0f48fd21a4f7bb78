#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "panchro/hypergraph.hpp"

namespace panchro {

// Subset size that drives the covering property: ceil((r-1)*|V|/r).
inline std::size_t covering_subset_size(std::size_t num_vertices, std::size_t r) {
    return ((r - 1) * num_vertices + r - 1) / r;
}

// True iff EVERY vertex subset of size ceil((r-1)|V|/r) contains an edge.
// The check is exact at that threshold: subsets of larger size are implied,
// smaller ones are not required. An edgeless hypergraph never qualifies.
inline bool has_turan_property(const Hypergraph& h, std::size_t r) {
    if (r < 2) throw std::invalid_argument("turan property: need r >= 2");
    const std::size_t v = h.num_vertices();
    const std::size_t m = h.num_edges();
    if (m == 0) return false;
    const std::size_t s = covering_subset_size(v, r);
    if (s < h.uniformity()) return false;  // no edge fits inside any s-subset
    if (s == v) return true;               // the only subset is V itself

    if (v <= 63) {
        // Enumerate s-subsets as bit masks in increasing order (Gosper).
        const std::uint64_t limit = (std::uint64_t(1) << v) - 1;
        std::vector<std::uint64_t> em(m);
        for (std::size_t i = 0; i < m; ++i) em[i] = h.edge_mask(i)[0];
        std::uint64_t x = (std::uint64_t(1) << s) - 1;
        while (x <= limit) {
            bool covered = false;
            for (std::size_t i = 0; i < m; ++i)
                if ((em[i] & ~x) == 0) { covered = true; break; }
            if (!covered) return false;
            const std::uint64_t c = x & (0 - x);
            const std::uint64_t rr = x + c;
            x = (((rr ^ x) >> 2) / c) | rr;
        }
        return true;
    }

    // Generic path: odometer over index combinations with a membership flag
    // array. Only reachable for |V| > 63, where exhaustive subset checks are
    // already impractical, but the semantics stay exact.
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    std::vector<std::uint8_t> in(v, 0);
    for (;;) {
        std::fill(in.begin(), in.end(), 0);
        for (std::size_t i : pick) in[i] = 1;
        bool covered = false;
        for (std::size_t ei = 0; ei < m && !covered; ++ei) {
            bool inside = true;
            for (Vertex w : h.edge(ei))
                if (!in[w]) { inside = false; break; }
            covered = inside;
        }
        if (!covered) return false;
        // next combination
        std::size_t i = s;
        while (i > 0 && pick[i - 1] == v - s + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
}

}  // namespace panchro
