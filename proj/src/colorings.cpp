#include "pathdeg/colorings.hpp"

#include "pathdeg/errors.hpp"
#include "pathdeg/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pathdeg {

std::size_t EdgeColoring::color_count() const
{
    std::set<std::uint32_t> used(colors.begin(), colors.end());
    used.erase(0);
    return used.size();
}

void EdgeColoring::compact()
{
    std::map<std::uint32_t, std::uint32_t> renumber;
    for (auto c : colors)
        if (c != 0)
            renumber.emplace(c, 0);
    std::uint32_t next = 1;
    for (auto& [old, fresh] : renumber)
        fresh = next++;
    for (auto& c : colors)
        if (c != 0)
            c = renumber[c];
}

namespace {

// The certificate replayed backward: graph states in construction order,
// each with the edges its step puts back.
struct Construction {
    std::vector<ReductionStep> steps;
    std::vector<std::vector<Edge>> added_edges;
};

Construction construction_order(const Graph& g, std::size_t p)
{
    auto verdict = is_p_path_degenerate(g, p);
    if (!verdict.degenerate)
        throw NotDegenerate("graph is not " + std::to_string(p) + "-path degenerate");
    auto replayed = replay(g, verdict.certificate);
    Construction c;
    c.steps.assign(verdict.certificate.steps.rbegin(), verdict.certificate.steps.rend());
    c.added_edges.assign(replayed.removed_edges.rbegin(), replayed.removed_edges.rend());
    return c;
}

class ColoringBuilder {
public:
    ColoringBuilder(const Graph& g, std::size_t palette)
        : g_(g), palette_(palette), at_vertex_(g.order(), std::vector<bool>(palette + 1, false))
    {
        coloring_.colors.assign(g.size(), 0);
    }

    void paint(const Edge& e, std::uint32_t color)
    {
        std::size_t idx = *g_.edge_index(e.u, e.v);
        if (coloring_.colors[idx] != 0)
            throw std::logic_error("edge recolored during construction");
        if (color == 0 || color > palette_)
            throw std::logic_error("color outside the palette");
        coloring_.colors[idx] = color;
        at_vertex_[e.u][color] = true;
        at_vertex_[e.v][color] = true;
    }

    // Smallest palette color absent at both ends of e.
    std::uint32_t free_color(const Edge& e) const
    {
        for (std::uint32_t c = 1; c <= palette_; ++c)
            if (!at_vertex_[e.u][c] && !at_vertex_[e.v][c])
                return c;
        throw std::logic_error("palette exhausted");
    }

    std::size_t palette() const { return palette_; }

    EdgeColoring finish()
    {
        coloring_.compact();
        return std::move(coloring_);
    }

private:
    const Graph& g_;
    std::size_t palette_;
    std::vector<std::vector<bool>> at_vertex_;
    EdgeColoring coloring_;
};

EdgeColoring proper_forest_coloring(const Graph& g)
{
    ColoringBuilder builder(g, std::max<std::size_t>(g.max_degree(), 1));
    for (const auto& comp : g.components()) {
        std::vector<Vertex> queue{comp.front()};
        std::vector<bool> seen(g.order(), false);
        seen[comp.front()] = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex x = queue[i];
            for (Vertex y : g.neighbors(x)) {
                if (seen[y])
                    continue;
                seen[y] = true;
                Edge e(x, y);
                builder.paint(e, builder.free_color(e));
                queue.push_back(y);
            }
        }
    }
    return builder.finish();
}

} // namespace

EdgeColoring arboricity_coloring(const Graph& g, std::size_t r)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    if (g.is_forest())
        return EdgeColoring{std::vector<std::uint32_t>(g.size(), 1)};

    auto build = construction_order(g, r + 1);
    ColoringBuilder builder(g, r + 1);
    for (std::size_t i = 0; i < build.steps.size(); ++i) {
        const auto& edges = build.added_edges[i];
        if (build.steps[i].kind == StepKind::delete_leaf) {
            builder.paint(edges.front(), 1);
        } else if (build.steps[i].kind == StepKind::delete_ear_interior) {
            for (std::size_t j = 0; j < edges.size(); ++j)
                builder.paint(edges[j], static_cast<std::uint32_t>(j % (r + 1) + 1));
        }
    }
    return builder.finish();
}

EdgeColoring acyclic_edge_coloring(const Graph& g, std::size_t r)
{
    if (r < 3)
        throw std::invalid_argument("r must be at least 3");
    if (g.is_forest())
        return proper_forest_coloring(g);

    auto build = construction_order(g, r + 1);
    const std::size_t palette = std::max(g.max_degree(), r);
    ColoringBuilder builder(g, palette);

    for (std::size_t i = 0; i < build.steps.size(); ++i) {
        const auto& ear = build.added_edges[i];
        if (build.steps[i].kind == StepKind::delete_leaf) {
            builder.paint(ear.front(), builder.free_color(ear.front()));
            continue;
        }
        if (build.steps[i].kind != StepKind::delete_ear_interior)
            continue;

        // ear[0] = u1 v1, ear[k] = v_k v_{k+1}, ear.back() = v_j u2, with j >= r.
        const std::size_t last = ear.size() - 1;
        const std::uint32_t alpha = builder.free_color(ear.front());
        builder.paint(ear.front(), alpha);
        const std::uint32_t beta = builder.free_color(ear.back());
        builder.paint(ear.back(), beta);

        auto colors_avoiding = [&](std::initializer_list<std::uint32_t> avoid, std::size_t count) {
            std::vector<std::uint32_t> out;
            for (std::uint32_t c = 1; c <= palette && out.size() < count; ++c)
                if (std::find(avoid.begin(), avoid.end(), c) == avoid.end())
                    out.push_back(c);
            return out;
        };

        if (alpha != beta) {
            auto distinct = colors_avoiding({alpha, beta}, r - 2);
            for (std::size_t k = 0; k < r - 2; ++k)
                builder.paint(ear[k + 1], distinct[k]);
            // Greedy tail: smallest color differing from both ear neighbors.
            std::uint32_t prev = distinct.back();
            for (std::size_t k = r - 1; k < last; ++k) {
                std::uint32_t next = k + 1 == last ? beta : 0;
                std::uint32_t c = 1;
                while (c == prev || c == next)
                    ++c;
                builder.paint(ear[k], c);
                prev = c;
            }
        } else {
            // With a palette of exactly r there are only r-1 colors besides alpha.
            auto cyclic = colors_avoiding({alpha}, std::min(r, palette - 1));
            for (std::size_t k = 1; k < last; ++k)
                builder.paint(ear[k], cyclic[(k - 1) % cyclic.size()]);
        }
    }
    return builder.finish();
}

bool verify_proper(const Graph& g, const EdgeColoring& c)
{
    if (c.colors.size() != g.size() || std::count(c.colors.begin(), c.colors.end(), 0u) > 0)
        throw std::invalid_argument("coloring is not total on the graph");
    for (Vertex v = 0; v < g.order(); ++v) {
        std::set<std::uint32_t> seen;
        for (Vertex w : g.neighbors(v))
            if (!seen.insert(c.colors[*g.edge_index(v, w)]).second)
                return false;
    }
    return true;
}

bool verify_cycle_rainbow(const Graph& g, const EdgeColoring& c, std::size_t t, std::size_t cycle_cap)
{
    if (c.colors.size() != g.size() || std::count(c.colors.begin(), c.colors.end(), 0u) > 0)
        throw std::invalid_argument("coloring is not total on the graph");
    for (const Cycle& cycle : enumerate_cycles(g, cycle_cap)) {
        std::set<std::uint32_t> seen;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            seen.insert(c.colors[*g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()])]);
        if (seen.size() < std::min(cycle.size(), t))
            return false;
    }
    return true;
}

} // namespace pathdeg
