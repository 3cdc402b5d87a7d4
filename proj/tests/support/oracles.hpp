#pragma once

// Brute-force reference implementations. None of these call into the library
// beyond Graph accessors, so they can referee it.

#include "pathdeg/density.hpp"
#include "pathdeg/graph.hpp"
#include "pathdeg/wcol.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace testsupport {

using pathdeg::Graph;
using pathdeg::Vertex;

/// max e(S)/|S| over nonempty vertex subsets, as (edges, vertices) in lowest terms.
pathdeg::DensityValue subset_density(const Graph& g);

/// Every cycle as its edge-index set, by scanning edge subsets (m <= 22).
std::set<std::vector<std::size_t>> cycles_by_edge_subsets(const Graph& g);

/// Same cycle given as a vertex sequence, converted to sorted edge indices.
std::vector<std::size_t> cycle_edges(const Graph& g, const std::vector<Vertex>& cycle);

/// Girth as min over edges uv of dist_{G-uv}(u, v) + 1; nullopt for forests.
std::optional<std::size_t> girth_by_edge_removal(const Graph& g);

/// W_{-1}(t) by bisection in long double on [-1 - 2 sqrt(-log(-t)) - 2(-log(-t)), -1].
long double lambert_bisection(long double t);

/// Root x > A of x - A log x - B by bisection; 0 if x - A log x - B > 0 on (0, inf).
long double beta_bisection(long double A, long double B);

/// Largest half-integer x' in (0, limit] with x' <= A log x' + B, times two;
/// nullopt when there is none.
std::optional<long long> largest_violating_half(long double A, long double B, long long limit);

/// WReach_x by enumerating simple paths from v.
std::vector<Vertex> wreach_by_paths(const Graph& g, const pathdeg::LinearOrder& pi, std::size_t x, Vertex v);

/// max_v |WReach_r| under pi, using wreach_by_paths.
std::size_t wcol_order_by_paths(const Graph& g, const pathdeg::LinearOrder& pi, std::size_t r);

/// min over all n! orders (n <= 7).
std::size_t wcol_by_permutations(const Graph& g, std::size_t r);

/// Smallest-last (degeneracy) order: repeatedly remove a minimum-degree
/// vertex; removal order reversed.
pathdeg::LinearOrder smallest_last_order(const Graph& g);

/// Disjoint union.
Graph disjoint_union(const Graph& a, const Graph& b);

/// g plus `count` fresh pendant vertices attached to `at`.
Graph with_pendants(const Graph& g, Vertex at, std::size_t count);

} // namespace testsupport
