#pragma once

#include "pathdeg/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pathdeg {

/// Colors indexed like Graph::edges(); color 0 means "uncolored".
struct EdgeColoring {
    std::vector<std::uint32_t> colors;

    std::uint32_t operator[](std::size_t edge_index) const { return colors.at(edge_index); }
    /// Number of distinct colors in use.
    std::size_t color_count() const;
    /// Renumbers the used colors to 1..K keeping their relative order.
    void compact();
};

/// Every cycle C receives at least min(|C|, r+1) colors, using at most r+1
/// colors. Requires r >= 1 and an (r+1)-path degenerate graph; throws
/// NotDegenerate otherwise. Forests get a single color.
EdgeColoring arboricity_coloring(const Graph& g, std::size_t r);

/// Proper coloring with at most max(Delta, r) colors in which every cycle C
/// receives at least min(|C|, r) colors. Requires r >= 3 and an (r+1)-path
/// degenerate graph. Forests get Delta colors.
EdgeColoring acyclic_edge_coloring(const Graph& g, std::size_t r);

/// Throws std::invalid_argument when the coloring is not total on g.
bool verify_proper(const Graph& g, const EdgeColoring& c);

/// True iff every cycle C carries at least min(|C|, t) colors. Throws
/// LimitExceeded when g has more than `cycle_cap` cycles.
bool verify_cycle_rainbow(const Graph& g, const EdgeColoring& c, std::size_t t, std::size_t cycle_cap);

} // namespace pathdeg
