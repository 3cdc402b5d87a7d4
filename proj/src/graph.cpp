#include "pathdeg/graph.hpp"

#include "pathdeg/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace pathdeg {

Graph Graph::build(std::size_t n, std::span<const Edge> edges)
{
    if (n > std::numeric_limits<Vertex>::max())
        throw InvalidGraph("vertex count " + std::to_string(n) + " too large");

    Graph g;
    g.adjacency_.resize(n);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= n)
            throw InvalidGraph("vertex id " + std::to_string(e.v) + " out of range for n=" + std::to_string(n));
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs)
{
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a == b)
            throw InvalidGraph("self-loop at vertex " + std::to_string(a));
        edges.emplace_back(a, b);
    }
    return build(n, edges);
}

std::size_t Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_)
        best = std::max(best, nbrs.size());
    return best;
}

std::size_t Graph::min_degree() const noexcept
{
    if (adjacency_.empty())
        return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& nbrs : adjacency_)
        best = std::min(best, nbrs.size());
    return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    if (a >= order() || b >= order())
        return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const
{
    if (a == b)
        return std::nullopt;
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::vector<Vertex>> Graph::components() const
{
    std::vector<std::vector<Vertex>> result;
    std::vector<bool> seen(order(), false);
    for (Vertex s = 0; s < order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : adjacency_[comp[i]])
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool Graph::is_forest() const
{
    return size() + components().size() == order();
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> relabel(order(), absent);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        relabel.at(sorted[i]) = static_cast<Vertex>(i);

    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (relabel[e.u] != absent && relabel[e.v] != absent)
            kept.emplace_back(relabel[e.u], relabel[e.v]);
    return build(sorted.size(), kept);
}

Graph Graph::without_edge(const Edge& e) const
{
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (f != e)
            kept.push_back(f);
    return build(order(), kept);
}

std::size_t Girth::value() const
{
    if (!length_)
        throw std::logic_error("girth is infinite");
    return *length_;
}

std::string Girth::to_string() const
{
    return length_ ? std::to_string(*length_) : std::string("inf");
}

Girth girth(const Graph& g)
{
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;
    std::vector<std::size_t> dist(g.order());
    std::vector<Vertex> parent(g.order());

    for (Vertex root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = root;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            Vertex x = frontier.front();
            frontier.pop();
            // Nothing shorter can be found past this depth.
            if (2 * dist[x] + 1 >= best)
                break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    frontier.push(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best == unseen ? Girth::infinite() : Girth::of_length(best);
}

Graph subdivide(const Graph& g, std::size_t k)
{
    if (k == 0)
        return g;
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    edges.reserve(g.size() * (k + 1));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        Vertex prev = e.u;
        for (std::size_t j = 0; j < k; ++j) {
            auto mid = static_cast<Vertex>(n + i * k + j);
            edges.emplace_back(prev, mid);
            prev = mid;
        }
        edges.emplace_back(prev, e.v);
    }
    return Graph::build(n + k * g.size(), edges);
}

std::vector<StrictEar> strict_ears(const Graph& g)
{
    std::vector<StrictEar> ears;
    for (Vertex a = 0; a < g.order(); ++a) {
        if (g.degree(a) == 2)
            continue;
        for (Vertex first : g.neighbors(a)) {
            if (g.degree(first) != 2)
                continue;
            std::vector<Vertex> walk{a, first};
            Vertex prev = a;
            Vertex cur = first;
            while (g.degree(cur) == 2) {
                auto nbrs = g.neighbors(cur);
                Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
                prev = cur;
                cur = next;
                walk.push_back(cur);
            }
            if (cur == a)
                continue;
            // Each thread is walked from both ends; keep the smaller reading.
            std::vector<Vertex> reversed(walk.rbegin(), walk.rend());
            if (reversed < walk)
                continue;
            ears.push_back(StrictEar{std::move(walk)});
        }
    }
    std::sort(ears.begin(), ears.end(),
              [](const StrictEar& x, const StrictEar& y) { return x.vertices < y.vertices; });
    return ears;
}

namespace {

struct CycleSearch {
    const Graph& g;
    std::size_t cap;
    std::vector<Cycle>& out;
    std::vector<bool> on_path;
    std::vector<Vertex> path;
    Vertex start = 0;

    void extend(Vertex x)
    {
        for (Vertex y : g.neighbors(x)) {
            if (y == start) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (out.size() >= cap)
                        throw LimitExceeded("more than " + std::to_string(cap) + " cycles");
                    out.push_back(path);
                }
                continue;
            }
            if (y < start || on_path[y])
                continue;
            on_path[y] = true;
            path.push_back(y);
            extend(y);
            path.pop_back();
            on_path[y] = false;
        }
    }
};

} // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap)
{
    if (cap == 0)
        throw std::invalid_argument("cycle cap must be positive");
    std::vector<Cycle> cycles;
    CycleSearch search{g, cap, cycles, std::vector<bool>(g.order(), false), {}, 0};
    for (Vertex s = 0; s < g.order(); ++s) {
        search.start = s;
        search.path.assign(1, s);
        search.on_path[s] = true;
        search.extend(s);
        search.on_path[s] = false;
    }
    return cycles;
}

} // namespace pathdeg
