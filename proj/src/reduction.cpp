#include "pathdeg/reduction.hpp"

#include "pathdeg/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace pathdeg {

namespace {

void require_p(std::size_t p)
{
    if (p < 2)
        throw std::invalid_argument("p must be at least 2");
}

// Vertex-deletion view of an immutable graph.
class WorkingGraph {
public:
    explicit WorkingGraph(const Graph& g) : g_(g), alive_(g.order(), true), degree_(g.order()), alive_count_(g.order())
    {
        for (Vertex v = 0; v < g.order(); ++v)
            degree_[v] = g.degree(v);
    }

    const Graph& source() const { return g_; }
    bool alive(Vertex v) const { return alive_[v]; }
    std::size_t degree(Vertex v) const { return degree_[v]; }
    std::size_t alive_count() const { return alive_count_; }

    void remove(Vertex v)
    {
        alive_[v] = false;
        --alive_count_;
        for (Vertex w : g_.neighbors(v))
            if (alive_[w])
                --degree_[w];
    }

    // Neighbor of a degree-2 vertex other than `prev`.
    Vertex other_neighbor(Vertex x, Vertex prev) const
    {
        for (Vertex w : g_.neighbors(x))
            if (alive_[w] && w != prev)
                return w;
        return prev;
    }

    // Either alive neighbor: for bare cycles of length 3 both differ from prev.
    std::pair<Vertex, Vertex> two_neighbors(Vertex x) const
    {
        Vertex first = x, second = x;
        for (Vertex w : g_.neighbors(x)) {
            if (!alive_[w])
                continue;
            if (first == x)
                first = w;
            else
                second = w;
        }
        return {first, second};
    }

    std::vector<Vertex> remaining() const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (alive_[v])
                out.push_back(v);
        return out;
    }

private:
    const Graph& g_;
    std::vector<bool> alive_;
    std::vector<std::size_t> degree_;
    std::size_t alive_count_;
};

// A maximal run of degree-2 vertices together with its two attachment points.
// Open chains join distinct vertices; loops return to their start; bare cycles
// are whole components with no attachment point (walk lists each vertex once).
struct Chain {
    enum class Shape { open, loop, bare_cycle } shape;
    std::vector<Vertex> walk;
};

std::vector<Chain> collect_chains(const WorkingGraph& w)
{
    const Graph& g = w.source();
    std::vector<Chain> chains;
    std::vector<bool> used(g.order(), false);

    for (Vertex a = 0; a < g.order(); ++a) {
        if (!w.alive(a) || w.degree(a) == 2)
            continue;
        for (Vertex first : g.neighbors(a)) {
            if (!w.alive(first) || w.degree(first) != 2 || used[first])
                continue;
            std::vector<Vertex> walk{a};
            Vertex prev = a;
            Vertex cur = first;
            while (w.degree(cur) == 2 && !used[cur]) {
                used[cur] = true;
                walk.push_back(cur);
                Vertex next = w.other_neighbor(cur, prev);
                prev = cur;
                cur = next;
            }
            walk.push_back(cur);
            chains.push_back({cur == a ? Chain::Shape::loop : Chain::Shape::open, std::move(walk)});
        }
    }

    for (Vertex s = 0; s < g.order(); ++s) {
        if (!w.alive(s) || w.degree(s) != 2 || used[s])
            continue;
        std::vector<Vertex> walk{s};
        used[s] = true;
        Vertex prev = s;
        Vertex cur = w.two_neighbors(s).first;
        while (cur != s) {
            used[cur] = true;
            walk.push_back(cur);
            Vertex next = w.other_neighbor(cur, prev);
            prev = cur;
            cur = next;
        }
        chains.push_back({Chain::Shape::bare_cycle, std::move(walk)});
    }
    return chains;
}

struct EarKey {
    Vertex low;
    Vertex high;
    std::vector<Vertex> path;

    bool operator<(const EarKey& o) const
    {
        if (low != o.low)
            return low < o.low;
        if (high != o.high)
            return high < o.high;
        return path < o.path;
    }
};

EarKey oriented(std::vector<Vertex> path)
{
    if (path.back() < path.front())
        std::reverse(path.begin(), path.end());
    return {path.front(), path.back(), std::move(path)};
}

std::optional<ReductionStep> next_step(const WorkingGraph& w, std::size_t p, bool exact_ears)
{
    const Graph& g = w.source();
    for (Vertex v = 0; v < g.order(); ++v)
        if (w.alive(v) && w.degree(v) == 0)
            return ReductionStep::isolated(v);
    for (Vertex v = 0; v < g.order(); ++v)
        if (w.alive(v) && w.degree(v) == 1)
            return ReductionStep::leaf(v);

    std::optional<EarKey> best;
    auto offer = [&](std::vector<Vertex> path) {
        EarKey key = oriented(std::move(path));
        if (!best || key < *best)
            best = std::move(key);
    };

    for (const Chain& chain : collect_chains(w)) {
        const auto& walk = chain.walk;
        if (chain.shape == Chain::Shape::bare_cycle) {
            const std::size_t len = walk.size();
            const std::size_t want = exact_ears ? p : len - 1;
            if (want + 1 > len || want < p)
                continue;
            for (std::size_t start = 0; start < len; ++start) {
                std::vector<Vertex> path;
                for (std::size_t i = 0; i <= want; ++i)
                    path.push_back(walk[(start + i) % len]);
                offer(std::move(path));
            }
            continue;
        }
        // Open chains can be taken whole; a loop must leave one edge behind.
        const std::size_t len = walk.size() - 1;
        const std::size_t longest = chain.shape == Chain::Shape::open ? len : len - 1;
        const std::size_t want = exact_ears ? p : longest;
        if (want > longest || want < p)
            continue;
        for (std::size_t start = 0; start + want <= len; ++start) {
            std::vector<Vertex> path(walk.begin() + start, walk.begin() + start + want + 1);
            if (path.front() != path.back())
                offer(std::move(path));
        }
    }
    if (!best)
        return std::nullopt;
    return ReductionStep::ear(std::move(best->path));
}

void apply(WorkingGraph& w, const ReductionStep& step)
{
    if (step.kind == StepKind::delete_ear_interior) {
        for (std::size_t i = 1; i + 1 < step.vertices.size(); ++i)
            w.remove(step.vertices[i]);
    } else {
        w.remove(step.vertex());
    }
}

Subgraph extract(const Graph& g, std::vector<Vertex> keep)
{
    Subgraph s;
    s.graph = g.induced(keep);
    s.origin = std::move(keep);
    return s;
}

Subgraph compose(const Subgraph& outer, const Subgraph& inner)
{
    Subgraph s;
    s.graph = inner.graph;
    for (Vertex v : inner.origin)
        s.origin.push_back(outer.origin[v]);
    return s;
}

} // namespace

std::optional<ReductionStep> find_p_reduction(const Graph& g, std::size_t p, bool exact_ears)
{
    require_p(p);
    WorkingGraph w(g);
    return next_step(w, p, exact_ears);
}

GreedyResult greedy_reduce(const Graph& g, std::size_t p, bool exact_ears)
{
    require_p(p);
    WorkingGraph w(g);
    GreedyResult result;
    result.prefix.p = p;
    result.prefix.exact_ears = exact_ears;
    while (w.alive_count() > 0) {
        auto step = next_step(w, p, exact_ears);
        if (!step)
            break;
        apply(w, *step);
        result.prefix.steps.push_back(std::move(*step));
    }
    result.residual = extract(g, w.remaining());
    return result;
}

DegeneracyVerdict is_p_path_degenerate(const Graph& g, std::size_t p, const DegeneracyOptions& options)
{
    require_p(p);
    DegeneracyVerdict verdict;
    auto greedy = greedy_reduce(g, p, options.exact_ears);
    verdict.certificate = std::move(greedy.prefix);
    verdict.degenerate = greedy.residual.graph.empty();
    if (options.use_oracle) {
        bool truth = backtrack_degenerate(g, p, options.oracle_budget);
        if (truth != verdict.degenerate)
            throw std::logic_error("greedy reduction disagrees with exhaustive search");
    }
    if (!verdict.degenerate)
        verdict.witness = std::move(greedy.residual);
    return verdict;
}

namespace {

// Exhaustive search. Written independently of the greedy engine: ears are
// grown vertex by vertex from every start instead of read off chains.
class Backtracker {
public:
    Backtracker(const Graph& g, std::size_t p, std::size_t budget)
        : g_(g), p_(p), budget_(budget), words_((g.order() + 63) / 64) {}

    bool run()
    {
        State all(words_, 0);
        for (Vertex v = 0; v < g_.order(); ++v)
            all[v / 64] |= std::uint64_t{1} << (v % 64);
        return solve(all);
    }

private:
    using State = std::vector<std::uint64_t>;

    struct Hash {
        std::size_t operator()(const State& s) const noexcept
        {
            std::size_t h = 0xcbf29ce484222325ull;
            for (auto word : s)
                h = (h ^ word) * 0x100000001b3ull;
            return h;
        }
    };

    static bool has(const State& s, Vertex v) { return (s[v / 64] >> (v % 64)) & 1u; }
    static void drop(State& s, Vertex v) { s[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    std::size_t degree(const State& s, Vertex v) const
    {
        std::size_t d = 0;
        for (Vertex w : g_.neighbors(v))
            d += has(s, w);
        return d;
    }

    bool solve(const State& s)
    {
        bool any = std::any_of(s.begin(), s.end(), [](std::uint64_t word) { return word != 0; });
        if (!any)
            return true;
        if (failed_.count(s))
            return false;
        if (++expanded_ > budget_)
            throw LimitExceeded("backtracking budget of " + std::to_string(budget_) + " states exhausted");

        std::vector<std::size_t> deg(g_.order(), 0);
        for (Vertex v = 0; v < g_.order(); ++v)
            if (has(s, v))
                deg[v] = degree(s, v);

        for (Vertex v = 0; v < g_.order(); ++v) {
            if (has(s, v) && deg[v] <= 1) {
                State next = s;
                drop(next, v);
                if (solve(next))
                    return true;
            }
        }

        for (Vertex start = 0; start < g_.order(); ++start) {
            if (!has(s, start))
                continue;
            for (Vertex first : g_.neighbors(start)) {
                if (!has(s, first))
                    continue;
                std::vector<Vertex> path{start, first};
                while (true) {
                    Vertex end = path.back();
                    if (end == start)
                        break;
                    if (path.size() - 1 >= p_) {
                        State next = s;
                        for (std::size_t i = 1; i + 1 < path.size(); ++i)
                            drop(next, path[i]);
                        if (solve(next))
                            return true;
                    }
                    if (deg[end] != 2)
                        break;
                    Vertex prev = path[path.size() - 2];
                    Vertex step = end;
                    for (Vertex w : g_.neighbors(end))
                        if (has(s, w) && w != prev)
                            step = w;
                    if (step == end)
                        break;
                    path.push_back(step);
                }
            }
        }
        failed_.insert(s);
        return false;
    }

    const Graph& g_;
    std::size_t p_;
    std::size_t budget_;
    std::size_t words_;
    std::size_t expanded_ = 0;
    std::unordered_set<State, Hash> failed_;
};

} // namespace

bool backtrack_degenerate(const Graph& g, std::size_t p, std::size_t budget)
{
    require_p(p);
    return Backtracker(g, p, budget).run();
}

Subgraph minimal_irreducible_witness(const Graph& g, std::size_t p)
{
    require_p(p);
    auto start = greedy_reduce(g, p, false);
    if (start.residual.graph.empty())
        throw std::invalid_argument("graph is " + std::to_string(p) + "-path degenerate; no witness exists");

    // Irreducibility is a per-component property, so any component will do.
    auto restrict_to_component = [](const Subgraph& s) {
        auto comps = s.graph.components();
        return compose(s, extract(s.graph, comps.front()));
    };

    Subgraph current = restrict_to_component(start.residual);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const Edge& e : current.graph.edges()) {
            auto rest = greedy_reduce(current.graph.without_edge(e), p, false);
            if (!rest.residual.graph.empty()) {
                current = restrict_to_component(compose(current, rest.residual));
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

ReplayResult replay(const Graph& g, const ReductionSequence& sequence)
{
    require_p(sequence.p);
    WorkingGraph w(g);
    ReplayResult result;
    auto fail = [](std::size_t index, const std::string& why) {
        throw std::invalid_argument("step " + std::to_string(index + 1) + ": " + why);
    };

    for (std::size_t i = 0; i < sequence.steps.size(); ++i) {
        const ReductionStep& step = sequence.steps[i];
        if (step.vertices.empty())
            fail(i, "no vertices");
        for (Vertex v : step.vertices)
            if (v >= g.order() || !w.alive(v))
                fail(i, "vertex " + std::to_string(v) + " is not present");

        std::vector<Edge> removed;
        switch (step.kind) {
        case StepKind::delete_isolated:
            if (step.vertices.size() != 1 || w.degree(step.vertex()) != 0)
                fail(i, "vertex is not isolated");
            break;
        case StepKind::delete_leaf:
            if (step.vertices.size() != 1 || w.degree(step.vertex()) != 1)
                fail(i, "vertex is not a leaf");
            for (Vertex u : g.neighbors(step.vertex()))
                if (w.alive(u))
                    removed.emplace_back(step.vertex(), u);
            break;
        case StepKind::delete_ear_interior: {
            const auto& path = step.vertices;
            std::size_t len = path.size() - 1;
            if (len < sequence.p || (sequence.exact_ears && len != sequence.p))
                fail(i, "ear of length " + std::to_string(len) + " not allowed for p=" + std::to_string(sequence.p));
            if (path.front() == path.back())
                fail(i, "ear endpoints coincide");
            std::vector<Vertex> sorted(path.begin(), path.end());
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                fail(i, "ear repeats a vertex");
            for (std::size_t j = 0; j < len; ++j) {
                if (!g.has_edge(path[j], path[j + 1]))
                    fail(i, "ear uses a non-edge");
                removed.emplace_back(path[j], path[j + 1]);
            }
            for (std::size_t j = 1; j < len; ++j)
                if (w.degree(path[j]) != 2)
                    fail(i, "ear interior vertex " + std::to_string(path[j]) + " does not have degree 2");
            break;
        }
        }
        apply(w, step);
        result.removed_edges.push_back(std::move(removed));
    }
    result.remaining = w.remaining();
    return result;
}

SmoothedGraph smooth_degree_two(const Graph& g)
{
    SmoothedGraph out;
    WorkingGraph w(g);
    std::size_t min_deg = 0;
    bool first = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 2)
            continue;
        out.branch_vertices.push_back(v);
        min_deg = first ? g.degree(v) : std::min(min_deg, g.degree(v));
        first = false;
    }
    out.min_branch_degree = min_deg;

    // Edges between two branch vertices are threads of length 1.
    std::vector<Chain> chains = collect_chains(w);
    for (const Edge& e : g.edges())
        if (g.degree(e.u) != 2 && g.degree(e.v) != 2)
            chains.push_back({Chain::Shape::open, {e.u, e.v}});

    std::vector<Edge> ends;
    for (const Chain& chain : chains) {
        if (chain.shape == Chain::Shape::bare_cycle) {
            out.bare_cycles.push_back(chain.walk.size());
            continue;
        }
        SmoothedGraph::Thread t{chain.walk.front(), chain.walk.back(), chain.walk.size() - 1};
        out.max_thread_length = std::max(out.max_thread_length, t.length);
        if (t.from == t.to)
            out.has_loop = true;
        else
            ends.emplace_back(t.from, t.to);
        out.threads.push_back(t);
    }
    std::sort(ends.begin(), ends.end());
    out.has_parallel_threads = std::adjacent_find(ends.begin(), ends.end()) != ends.end();
    return out;
}

} // namespace pathdeg
