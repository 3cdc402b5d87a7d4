#include "enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace testsupport {

namespace {

using Masks = std::vector<std::uint32_t>;

Masks to_masks(const Graph& g)
{
    Masks adj(g.order(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    return adj;
}

// Color refinement with canonically numbered colors: a vertex's new color is
// the rank of (old color, sorted neighbor colors) among all such signatures.
std::vector<int> refine(const Masks& adj, std::vector<int> colors)
{
    const std::size_t n = adj.size();
    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            std::vector<int> around;
            for (std::size_t w = 0; w < n; ++w)
                if (adj[v] >> w & 1u)
                    around.push_back(colors[w]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig)
            rank[s];
        int next = 0;
        for (auto& [s, r] : rank)
            r = next++;
        for (std::size_t v = 0; v < n; ++v)
            colors[v] = rank[sig[v]];
        if (rank.size() == classes)
            return colors;
        classes = rank.size();
    }
}

std::uint64_t leaf_code(const Masks& adj, const std::vector<int>& colors)
{
    const std::size_t n = adj.size();
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v)
        at[colors[v]] = v;
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            code = code << 1 | (adj[at[i]] >> at[j] & 1u);
    return code;
}

void search(const Masks& adj, const std::vector<int>& colors, std::uint64_t& best, bool& found)
{
    const std::size_t n = adj.size();
    std::vector<int> count(n, 0);
    for (int c : colors)
        ++count[c];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c)
        if (count[c] > 1) {
            target = static_cast<int>(c);
            break;
        }
    if (target < 0) {
        std::uint64_t code = leaf_code(adj, colors);
        if (!found || code > best)
            best = code;
        found = true;
        return;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (colors[v] != target)
            continue;
        std::vector<int> split(n);
        for (std::size_t w = 0; w < n; ++w)
            split[w] = 2 * colors[w] + (colors[w] == target && w != v ? 1 : 0);
        search(adj, refine(adj, split), best, found);
    }
}

Graph from_masks(const Masks& adj)
{
    std::vector<pathdeg::Edge> edges;
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (std::size_t w = v + 1; w < adj.size(); ++w)
            if (adj[v] >> w & 1u)
                edges.emplace_back(static_cast<pathdeg::Vertex>(v), static_cast<pathdeg::Vertex>(w));
    return Graph::build(adj.size(), edges);
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    if (g.order() > 11)
        throw std::invalid_argument("canonical_code supports at most 11 vertices");
    Masks adj = to_masks(g);
    std::uint64_t best = 0;
    bool found = false;
    if (g.order() > 0)
        search(adj, refine(adj, std::vector<int>(g.order(), 0)), best, found);
    return best | static_cast<std::uint64_t>(g.order()) << 56;
}

namespace {

// Connected graphs on k vertices from those on k-1.
std::vector<Graph> grow(const std::vector<Graph>& level, std::size_t k)
{
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& base : level) {
        Masks adj = to_masks(base);
        adj.push_back(0);
        for (std::uint32_t s = 1; s < (1u << (k - 1)); ++s) {
            Masks grown = adj;
            grown[k - 1] = s;
            for (std::size_t v = 0; v + 1 < k; ++v)
                if (s >> v & 1u)
                    grown[v] |= 1u << (k - 1);
            Graph g = from_masks(grown);
            if (seen.insert(canonical_code(g)).second)
                next.push_back(std::move(g));
        }
    }
    return next;
}

} // namespace

std::vector<Graph> connected_graphs(std::size_t n)
{
    if (n == 0 || n > 10)
        throw std::invalid_argument("connected_graphs supports 1..10 vertices");
    std::vector<Graph> level{Graph::build(1, std::vector<pathdeg::Edge>{})};
    for (std::size_t k = 2; k <= n; ++k)
        level = grow(level, k);
    return level;
}

std::vector<Graph> connected_graphs_up_to(std::size_t n)
{
    std::vector<Graph> out;
    std::vector<Graph> level{Graph::build(1, std::vector<pathdeg::Edge>{})};
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1)
            level = grow(level, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double prob)
{
    std::bernoulli_distribution coin(prob);
    std::vector<pathdeg::Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w)
            if (coin(rng))
                edges.emplace_back(static_cast<pathdeg::Vertex>(v), static_cast<pathdeg::Vertex>(w));
    return Graph::build(n, edges);
}

Graph random_subgraph(std::mt19937_64& rng, const Graph& g, double keep_vertex, double keep_edge)
{
    std::bernoulli_distribution vcoin(keep_vertex);
    std::bernoulli_distribution ecoin(keep_edge);
    std::vector<pathdeg::Vertex> keep;
    for (pathdeg::Vertex v = 0; v < g.order(); ++v)
        if (vcoin(rng))
            keep.push_back(v);
    Graph h = g.induced(keep);
    std::vector<pathdeg::Edge> edges;
    for (const auto& e : h.edges())
        if (ecoin(rng))
            edges.push_back(e);
    return Graph::build(h.order(), edges);
}

} // namespace testsupport
