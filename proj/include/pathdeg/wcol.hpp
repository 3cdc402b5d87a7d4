#pragma once

#include "pathdeg/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pathdeg {

/// Linear order of the vertices, stored both as the rank sequence and as the
/// inverse map vertex -> rank.
class LinearOrder {
public:
    LinearOrder() = default;
    /// `sequence[i]` is the vertex of rank i. Throws std::invalid_argument if
    /// the sequence is not a permutation of 0..n-1.
    explicit LinearOrder(std::vector<Vertex> sequence);
    static LinearOrder identity(std::size_t n);

    std::size_t size() const noexcept { return sequence_.size(); }
    std::size_t rank(Vertex v) const { return rank_.at(v); }
    const std::vector<Vertex>& sequence() const noexcept { return sequence_; }

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

private:
    std::vector<Vertex> sequence_;
    std::vector<std::size_t> rank_;
};

/// Radius r and half ear length q of the good-order construction; p = 2q.
struct WcolBoundParams {
    std::size_t r = 1;
    std::size_t q = 2;

    WcolBoundParams() = default;
    /// Throws std::invalid_argument unless r >= 1 and q >= r + 1.
    WcolBoundParams(std::size_t radius, std::size_t half_ear);

    std::size_t ear_length() const noexcept { return 2 * q; }
};

/// Vertices u <= v reachable from v by a path of length <= x whose interior
/// vertices all come after u. Sorted by vertex id; always contains v.
std::vector<Vertex> wreach_set(const Graph& g, const LinearOrder& pi, std::size_t x, Vertex v);

std::size_t wcol_under_order(const Graph& g, const LinearOrder& pi, std::size_t r);

/// Exact weak r-coloring number by branch and bound over all orders.
/// Throws LimitExceeded above 9 vertices.
std::size_t wcol_exact(const Graph& g, std::size_t r);
constexpr std::size_t wcol_exact_max_order = 9;

/// f(0) = 1; for x >= 1, x + 2 + log2((q-1)/(q-x)) when q < 2r and x + 2
/// otherwise. Throws std::invalid_argument when x > r.
double wcol_target(std::size_t x, const WcolBoundParams& params);

/// Exact integer test of `count <= wcol_target(x, params)`, free of rounding.
bool within_target(std::size_t count, std::size_t x, const WcolBoundParams& params);

/// Order built from a 2q-reduction certificate with exact-length ears. Ear
/// midpoints go to the front, ear sides to the back, leaves and isolated
/// vertices to the back. Throws NotDegenerate if g is not 2q-path degenerate.
LinearOrder weak_order(const Graph& g, const WcolBoundParams& params);

/// max_v |WReach_x[g, pi, v]| for x = 0..r.
std::vector<std::size_t> wreach_profile(const Graph& g, const LinearOrder& pi, std::size_t r);

/// True iff the order meets wcol_target for every x <= params.r.
bool is_good_order(const Graph& g, const LinearOrder& pi, const WcolBoundParams& params);

} // namespace pathdeg
