#pragma once

#include "pathdeg/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pathdeg {

enum class StepKind { delete_isolated, delete_leaf, delete_ear_interior };

/// One p-reduction. Isolated and leaf steps carry a single vertex; an ear step
/// carries the whole ear, endpoints included, with the smaller endpoint first.
struct ReductionStep {
    StepKind kind = StepKind::delete_isolated;
    std::vector<Vertex> vertices;

    static ReductionStep isolated(Vertex v) { return {StepKind::delete_isolated, {v}}; }
    static ReductionStep leaf(Vertex v) { return {StepKind::delete_leaf, {v}}; }
    static ReductionStep ear(std::vector<Vertex> path) { return {StepKind::delete_ear_interior, std::move(path)}; }

    Vertex vertex() const { return vertices.front(); }
    std::size_t ear_length() const { return vertices.size() - 1; }

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionSequence {
    std::size_t p = 2;
    bool exact_ears = false;
    std::vector<ReductionStep> steps;

    friend bool operator==(const ReductionSequence&, const ReductionSequence&) = default;
};

/// A subgraph together with the source id of each of its vertices.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> origin;
};

struct GreedyResult {
    ReductionSequence prefix;
    /// What is left when no p-reduction applies; empty iff degenerate.
    Subgraph residual;
};

struct DegeneracyVerdict {
    bool degenerate = false;
    /// Full certificate when degenerate; the prefix leading to `witness` otherwise.
    ReductionSequence certificate;
    /// Nonempty p-irreducible subgraph, present iff not degenerate.
    std::optional<Subgraph> witness;
};

struct DegeneracyOptions {
    bool exact_ears = false;
    /// Decide with the exhaustive search instead of the greedy engine.
    bool use_oracle = false;
    std::size_t oracle_budget = 1'000'000;
};

/// Next p-reduction by fixed priority: isolated vertex, then leaf, then ear;
/// smallest vertex id first, ears by (smaller endpoint, larger endpoint, path).
/// Without `exact_ears` the candidate ears are the maximal ones in each chain
/// of degree-2 vertices; with it, every ear of length exactly p. Requires p >= 2.
std::optional<ReductionStep> find_p_reduction(const Graph& g, std::size_t p, bool exact_ears);

GreedyResult greedy_reduce(const Graph& g, std::size_t p, bool exact_ears);

DegeneracyVerdict is_p_path_degenerate(const Graph& g, std::size_t p, const DegeneracyOptions& options = {});

/// Ground truth by exhaustive search over all reduction choices, memoized on
/// the set of remaining vertices. Throws LimitExceeded once more than `budget`
/// states have been expanded.
bool backtrack_degenerate(const Graph& g, std::size_t p, std::size_t budget);

/// Connected p-irreducible subgraph of g from which deleting any single edge
/// leaves a p-path degenerate graph. Throws std::invalid_argument if g is
/// p-path degenerate.
Subgraph minimal_irreducible_witness(const Graph& g, std::size_t p);

struct ReplayResult {
    /// Edges deleted by each step, in step order. Ear edges follow the ear.
    std::vector<std::vector<Edge>> removed_edges;
    /// Vertices still present after the last step.
    std::vector<Vertex> remaining;
};

/// Applies `sequence` to g, checking every step against the current graph.
/// Throws std::invalid_argument naming the first illegal step.
ReplayResult replay(const Graph& g, const ReductionSequence& sequence);

/// Degree-2 vertices smoothed away: the branch vertices (degree != 2) and the
/// threads joining them.
struct SmoothedGraph {
    struct Thread {
        Vertex from;
        Vertex to;
        std::size_t length;
    };

    std::vector<Vertex> branch_vertices;
    std::vector<Thread> threads;
    /// Components that are bare cycles, by length.
    std::vector<std::size_t> bare_cycles;
    bool has_loop = false;
    bool has_parallel_threads = false;
    std::size_t min_branch_degree = 0;
    std::size_t max_thread_length = 0;
};

SmoothedGraph smooth_degree_two(const Graph& g);

} // namespace pathdeg
