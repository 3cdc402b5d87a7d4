#pragma once

#include "pathdeg/graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace pathdeg {

/// Exact nonnegative rational, kept in lowest terms.
class DensityValue {
public:
    DensityValue() = default;
    DensityValue(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }
    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend bool operator==(const DensityValue&, const DensityValue&) = default;
    friend std::strong_ordering operator<=>(const DensityValue& x, const DensityValue& y);

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// Nonnegative half-integer depth, stored doubled.
class Depth {
public:
    constexpr Depth() = default;
    static constexpr Depth halves(unsigned twice) { return Depth(twice); }
    static constexpr Depth whole(unsigned r) { return Depth(2 * r); }
    /// Accepts "1", "1.5" or "3/2".
    static Depth parse(std::string_view text);

    constexpr unsigned twice() const noexcept { return twice_; }
    /// Radius bound for each contracted tree.
    constexpr unsigned ceil() const noexcept { return (twice_ + 1) / 2; }
    double value() const noexcept { return twice_ / 2.0; }
    std::string to_string() const;

    friend constexpr auto operator<=>(const Depth&, const Depth&) = default;

private:
    constexpr explicit Depth(unsigned twice) : twice_(twice) {}
    unsigned twice_ = 0;
};

/// max ||H|| / |H| over nonempty subgraphs H, by parametric min cut.
/// Throws std::invalid_argument on the empty graph.
DensityValue max_subgraph_density(const Graph& g);

/// Maximum average degree; 0 for graphs without vertices.
DensityValue mad(const Graph& g);

using MinorVisitor = std::function<void(const Graph& minor)>;

/// Calls `visit` with every shallow minor at depth r obtained by contracting a
/// partition of V(g) into rooted trees (before any edge or vertex deletion;
/// those are covered by taking subgraphs of what is visited). Parallel edges
/// are merged. Throws LimitExceeded after `cap` partitions or root choices.
void for_each_shallow_minor(const Graph& g, Depth r, std::size_t cap, const MinorVisitor& visit);

/// Greatest edge density of a shallow minor at depth r, by exhaustive search.
DensityValue nabla_r_bruteforce(const Graph& g, Depth r, std::size_t cap = 20'000'000);

} // namespace pathdeg
