#include "pathdeg/wcol.hpp"

#include "pathdeg/errors.hpp"
#include "pathdeg/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pathdeg {

LinearOrder::LinearOrder(std::vector<Vertex> sequence) : sequence_(std::move(sequence))
{
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    rank_.assign(sequence_.size(), unset);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        Vertex v = sequence_[i];
        if (v >= sequence_.size() || rank_[v] != unset)
            throw std::invalid_argument("order is not a permutation of the vertices");
        rank_[v] = i;
    }
}

LinearOrder LinearOrder::identity(std::size_t n)
{
    std::vector<Vertex> seq(n);
    for (std::size_t i = 0; i < n; ++i)
        seq[i] = static_cast<Vertex>(i);
    return LinearOrder(std::move(seq));
}

WcolBoundParams::WcolBoundParams(std::size_t radius, std::size_t half_ear) : r(radius), q(half_ear)
{
    if (r < 1 || q < r + 1)
        throw std::invalid_argument("need r >= 1 and q >= r + 1");
}

namespace {

void check_order(const Graph& g, const LinearOrder& pi)
{
    if (pi.size() != g.order())
        throw std::invalid_argument("order size does not match the graph");
}

// Vertices within `depth` of `source`, walking only through vertices accepted
// by `allowed` (the source itself is always entered).
template <typename Allowed>
std::vector<std::size_t> bounded_bfs(const Graph& g, Vertex source, std::size_t depth, Allowed allowed)
{
    constexpr std::size_t far = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.order(), far);
    std::vector<Vertex> frontier{source};
    dist[source] = 0;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        Vertex x = frontier[i];
        if (dist[x] == depth)
            continue;
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] != far || !allowed(y))
                continue;
            dist[y] = dist[x] + 1;
            frontier.push_back(y);
        }
    }
    return dist;
}

} // namespace

std::vector<Vertex> wreach_set(const Graph& g, const LinearOrder& pi, std::size_t x, Vertex v)
{
    check_order(g, pi);
    constexpr std::size_t far = std::numeric_limits<std::size_t>::max();
    const std::size_t rank_v = pi.rank(v);

    auto ball = bounded_bfs(g, v, x, [](Vertex) { return true; });
    std::vector<Vertex> result{v};
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u == v || ball[u] == far || pi.rank(u) > rank_v)
            continue;
        // Walk from v through vertices later than u, then step onto u.
        const std::size_t rank_u = pi.rank(u);
        auto inner = bounded_bfs(g, v, x - 1, [&](Vertex w) { return pi.rank(w) > rank_u; });
        bool reached = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                   [&](Vertex w) { return inner[w] != far; });
        if (reached)
            result.push_back(u);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::size_t wcol_under_order(const Graph& g, const LinearOrder& pi, std::size_t r)
{
    check_order(g, pi);
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, wreach_set(g, pi, r, v).size());
    return best;
}

std::vector<std::size_t> wreach_profile(const Graph& g, const LinearOrder& pi, std::size_t r)
{
    std::vector<std::size_t> profile;
    for (std::size_t x = 0; x <= r; ++x)
        profile.push_back(wcol_under_order(g, pi, x));
    return profile;
}

namespace {

// Orders are built front to back. Placing u after the set P credits u to every
// vertex within distance r of u in G - P, since exactly those vertices weakly
// reach u.
class WcolSearch {
public:
    WcolSearch(const Graph& g, std::size_t r) : n_(g.order()), r_(r), adj_(g.order(), 0)
    {
        for (const Edge& e : g.edges()) {
            adj_[e.u] |= 1u << e.v;
            adj_[e.v] |= 1u << e.u;
        }
    }

    std::size_t solve()
    {
        if (n_ == 0)
            return 0;
        best_ = n_ + 1;
        std::vector<std::size_t> counts(n_, 0);
        descend(0, counts, 0);
        return best_;
    }

private:
    std::uint32_t ball(Vertex u, std::uint32_t allowed) const
    {
        std::uint32_t reached = 1u << u;
        std::uint32_t frontier = reached;
        for (std::size_t step = 0; step < r_ && frontier; ++step) {
            std::uint32_t next = 0;
            for (std::size_t x = 0; x < n_; ++x)
                if (frontier >> x & 1u)
                    next |= adj_[x];
            next &= allowed & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached;
    }

    void descend(std::uint32_t placed, std::vector<std::size_t>& counts, std::size_t current)
    {
        const std::uint32_t all = (n_ == 32) ? ~0u : ((1u << n_) - 1);
        if (placed == all) {
            best_ = std::min(best_, current);
            return;
        }
        for (Vertex u = 0; u < n_; ++u) {
            if (placed >> u & 1u)
                continue;
            std::uint32_t covered = ball(u, all & ~placed);
            std::size_t worst = current;
            for (std::size_t v = 0; v < n_; ++v)
                if (covered >> v & 1u)
                    worst = std::max(worst, counts[v] + 1);
            if (worst >= best_)
                continue;
            for (std::size_t v = 0; v < n_; ++v)
                counts[v] += covered >> v & 1u;
            descend(placed | 1u << u, counts, worst);
            for (std::size_t v = 0; v < n_; ++v)
                counts[v] -= covered >> v & 1u;
        }
    }

    std::size_t n_;
    std::size_t r_;
    std::vector<std::uint32_t> adj_;
    std::size_t best_ = 0;
};

} // namespace

std::size_t wcol_exact(const Graph& g, std::size_t r)
{
    if (g.order() > wcol_exact_max_order)
        throw LimitExceeded("wcol_exact is limited to " + std::to_string(wcol_exact_max_order) + " vertices");
    return WcolSearch(g, r).solve();
}

double wcol_target(std::size_t x, const WcolBoundParams& params)
{
    if (x > params.r)
        throw std::invalid_argument("x exceeds the radius r");
    if (x == 0)
        return 1.0;
    const auto xd = static_cast<double>(x);
    if (params.q < 2 * params.r) {
        const auto q = static_cast<double>(params.q);
        return xd + 2.0 + std::log2((q - 1.0) / (q - xd));
    }
    return xd + 2.0;
}

bool within_target(std::size_t count, std::size_t x, const WcolBoundParams& params)
{
    if (x > params.r)
        throw std::invalid_argument("x exceeds the radius r");
    if (x == 0)
        return count <= 1;
    if (count <= x + 2)
        return true;
    if (params.q >= 2 * params.r)
        return false;
    // count - x - 2 <= log2((q-1)/(q-x))  <=>  2^(count-x-2) * (q-x) <= q-1
    const std::size_t excess = count - x - 2;
    if (excess >= 62)
        return false;
    return (std::uint64_t{1} << excess) * (params.q - x) <= params.q - 1;
}

LinearOrder weak_order(const Graph& g, const WcolBoundParams& params)
{
    const std::size_t p = params.ear_length();
    auto greedy = greedy_reduce(g, p, true);
    if (!greedy.residual.graph.empty())
        throw NotDegenerate("graph is not " + std::to_string(p) + "-path degenerate");

    const std::size_t q = params.q;
    std::deque<Vertex> order;
    const auto& steps = greedy.prefix.steps;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->kind != StepKind::delete_ear_interior) {
            order.push_back(it->vertex());
            continue;
        }
        // u1, v1_1..v1_{q-1}, w, v2_{q-1}..v2_1, u2
        const auto& ear = it->vertices;
        order.push_front(ear[q]);
        for (std::size_t z = 1; z < q; ++z)
            order.push_back(ear[z]);
        for (std::size_t z = 1; z < q; ++z)
            order.push_back(ear[2 * q - z]);
    }
    return LinearOrder(std::vector<Vertex>(order.begin(), order.end()));
}

bool is_good_order(const Graph& g, const LinearOrder& pi, const WcolBoundParams& params)
{
    auto profile = wreach_profile(g, pi, params.r);
    for (std::size_t x = 0; x <= params.r; ++x)
        if (!within_target(profile[x], x, params))
            return false;
    return true;
}

} // namespace pathdeg
