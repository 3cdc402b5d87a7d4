#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathdeg {

using Vertex = std::uint32_t;

// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; neighbor
/// lists and the edge list are kept sorted so every traversal is deterministic.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary pair list. Duplicate and reversed
    /// pairs collapse to one edge. Throws InvalidGraph on a self-loop or an
    /// id >= n.
    static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
    static Graph build(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return adjacency_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const noexcept;
    std::size_t min_degree() const noexcept;

    bool has_edge(Vertex a, Vertex b) const;

    /// Edges sorted lexicographically; an edge's position is its index.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;
    bool is_forest() const;

    /// Subgraph induced by `keep`, relabeled 0..k-1 in increasing id order.
    Graph induced(std::span<const Vertex> keep) const;
    /// Same vertex set with one edge removed.
    Graph without_edge(const Edge& e) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

/// Girth of a graph: a finite cycle length or infinite for forests.
class Girth {
public:
    static Girth infinite() { return Girth(); }
    static Girth of_length(std::size_t length) {
        Girth g;
        g.length_ = length;
        return g;
    }

    bool finite() const noexcept { return length_.has_value(); }
    /// Throws std::logic_error on an infinite girth.
    std::size_t value() const;

    /// True iff every cycle has length >= `bound`.
    bool at_least(std::size_t bound) const noexcept { return !length_ || *length_ >= bound; }

    std::string to_string() const;

    friend bool operator==(const Girth&, const Girth&) = default;

private:
    Girth() = default;
    std::optional<std::size_t> length_;
};

/// Path whose interior vertices have degree 2 in the ambient graph and whose
/// endpoints differ. `vertices` runs from one endpoint to the other.
struct StrictEar {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    std::span<const Vertex> interior() const {
        return vertices.size() < 2 ? std::span<const Vertex>{}
                                   : std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
    }

    friend bool operator==(const StrictEar&, const StrictEar&) = default;
};

using Cycle = std::vector<Vertex>;

Girth girth(const Graph& g);

/// Replaces each edge by a path with `k` new interior vertices. Interior vertices
/// of the i-th edge (u<v) get ids n + i*k .. n + i*k + k-1, numbered from u.
Graph subdivide(const Graph& g, std::size_t k);

/// Maximal strict ears with at least one interior vertex whose endpoints both
/// have degree != 2. Each ear is oriented so that (front, interior[0]) is the
/// smaller of its two readings; the list is sorted.
std::vector<StrictEar> strict_ears(const Graph& g);

/// Every simple cycle once, starting at its smallest vertex and walking toward
/// the smaller of that vertex's two cycle neighbors. Throws LimitExceeded when
/// more than `cap` cycles exist.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap);

} // namespace pathdeg
