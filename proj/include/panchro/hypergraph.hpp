#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace panchro {

using Vertex = std::uint32_t;
using ColorId = std::uint32_t;
using Edge = std::vector<Vertex>;  // strictly increasing vertex indices

// n-uniform hypergraph, canonical form: each edge strictly increasing,
// edge list sorted lexicographically, duplicates removed. Vertex indices
// are 0-based and need not all appear in edges.
class Hypergraph {
public:
    Hypergraph(std::size_t num_vertices, std::size_t uniformity,
               std::vector<Edge> edges)
        : num_vertices_(num_vertices), uniformity_(uniformity) {
        if (uniformity_ == 0)
            throw std::invalid_argument("hypergraph: uniformity must be >= 1");
        if (uniformity_ > num_vertices_)
            throw std::invalid_argument("hypergraph: uniformity exceeds vertex count");
        for (Edge& e : edges) {
            if (e.size() != uniformity_)
                throw std::invalid_argument("hypergraph: edge size != uniformity");
            std::sort(e.begin(), e.end());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] >= num_vertices_)
                    throw std::invalid_argument("hypergraph: vertex index out of range");
                if (i > 0 && e[i] == e[i - 1])
                    throw std::invalid_argument("hypergraph: repeated vertex in edge");
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        build_masks();
    }

    // Fast path for callers that guarantee canonical form already
    // (sorted distinct vertices, sorted deduplicated edge list, all in range).
    static Hypergraph from_canonical(std::size_t num_vertices, std::size_t uniformity,
                                     std::vector<Edge> edges) {
        return Hypergraph(num_vertices, uniformity, std::move(edges), canonical_tag{});
    }

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t uniformity() const { return uniformity_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    // Bitset shadow of each edge, for O(V/64) membership tests.
    std::size_t words_per_edge() const { return words_per_edge_; }
    const std::uint64_t* edge_mask(std::size_t i) const {
        return masks_.data() + i * words_per_edge_;
    }
    bool contains(std::size_t edge_index, Vertex v) const {
        return (edge_mask(edge_index)[v >> 6] >> (v & 63)) & 1u;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.num_vertices_ == b.num_vertices_ &&
               a.uniformity_ == b.uniformity_ && a.edges_ == b.edges_;
    }

private:
    struct canonical_tag {};
    Hypergraph(std::size_t num_vertices, std::size_t uniformity,
               std::vector<Edge> edges, canonical_tag)
        : num_vertices_(num_vertices),
          uniformity_(uniformity),
          edges_(std::move(edges)) {
        build_masks();
    }

    void build_masks() {
        words_per_edge_ = (num_vertices_ + 63) / 64;
        masks_.assign(edges_.size() * words_per_edge_, 0);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            std::uint64_t* m = masks_.data() + i * words_per_edge_;
            for (Vertex v : edges_[i]) m[v >> 6] |= std::uint64_t(1) << (v & 63);
        }
    }

    std::size_t num_vertices_;
    std::size_t uniformity_;
    std::vector<Edge> edges_;
    std::size_t words_per_edge_ = 0;
    std::vector<std::uint64_t> masks_;
};

// Assignment of one color per vertex; colors are 0..num_colors-1.
struct Coloring {
    std::size_t num_colors = 0;
    std::vector<ColorId> assignment;
};

// An (edge, color) pair where the edge misses the color entirely.
struct Violation {
    std::size_t edge_index = 0;
    ColorId missing_color = 0;

    friend bool operator==(const Violation& a, const Violation& b) {
        return a.edge_index == b.edge_index && a.missing_color == b.missing_color;
    }
};

namespace detail {
inline void check_coloring_shape(const Hypergraph& h, const Coloring& c) {
    if (c.num_colors == 0)
        throw std::invalid_argument("coloring: need at least one color");
    if (c.assignment.size() != h.num_vertices())
        throw std::invalid_argument("coloring: assignment length != vertex count");
    for (ColorId q : c.assignment)
        if (q >= c.num_colors)
            throw std::invalid_argument("coloring: color value out of range");
}
}  // namespace detail

// First (edge asc, color asc) violation, or nullopt if the coloring is
// panchromatic: every edge contains every color at least once.
inline std::optional<Violation> first_violation(const Hypergraph& h, const Coloring& c) {
    detail::check_coloring_shape(h, c);
    std::vector<std::uint8_t> seen(c.num_colors);
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Vertex v : h.edge(ei)) seen[c.assignment[v]] = 1;
        for (ColorId q = 0; q < c.num_colors; ++q)
            if (!seen[q]) return Violation{ei, q};
    }
    return std::nullopt;
}

inline bool is_panchromatic(const Hypergraph& h, const Coloring& c) {
    return !first_violation(h, c).has_value();
}

// Complete violation list, ordered by (edge index, color).
inline std::vector<Violation> find_missing_pairs(const Hypergraph& h, const Coloring& c) {
    detail::check_coloring_shape(h, c);
    std::vector<Violation> out;
    std::vector<std::uint8_t> seen(c.num_colors);
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Vertex v : h.edge(ei)) seen[c.assignment[v]] = 1;
        for (ColorId q = 0; q < c.num_colors; ++q)
            if (!seen[q]) out.push_back(Violation{ei, q});
    }
    return out;
}

// The triangle graph: smallest 2-uniform hypergraph with no panchromatic
// 2-coloring.
inline Hypergraph triangle() {
    return Hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}});
}

}  // namespace panchro
