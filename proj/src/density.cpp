#include "pathdeg/density.hpp"

#include "pathdeg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace pathdeg {

DensityValue::DensityValue(std::uint64_t numerator, std::uint64_t denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("density denominator must be positive");
    std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::strong_ordering operator<=>(const DensityValue& x, const DensityValue& y)
{
    auto lhs = static_cast<unsigned __int128>(x.num_) * y.den_;
    auto rhs = static_cast<unsigned __int128>(y.num_) * x.den_;
    return lhs <=> rhs;
}

std::string DensityValue::to_string() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Depth Depth::parse(std::string_view text)
{
    auto parse_uint = [&](std::string_view s) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("bad depth '" + std::string(text) + "'");
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        unsigned num = parse_uint(text.substr(0, slash));
        unsigned den = parse_uint(text.substr(slash + 1));
        if (den == 1)
            return whole(num);
        if (den == 2)
            return halves(num);
        throw std::invalid_argument("depth must be a half-integer");
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        unsigned whole_part = parse_uint(text.substr(0, dot));
        std::string_view frac = text.substr(dot + 1);
        if (frac == "0")
            return whole(whole_part);
        if (frac == "5")
            return halves(2 * whole_part + 1);
        throw std::invalid_argument("depth must be a half-integer");
    }
    return whole(parse_uint(text));
}

std::string Depth::to_string() const
{
    return twice_ % 2 == 0 ? std::to_string(twice_ / 2) : std::to_string(twice_ / 2) + ".5";
}

namespace {

// Dinic max flow on small integer networks.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

    void add_arc(std::size_t from, std::size_t to, std::int64_t cap)
    {
        adj_[from].push_back(arcs_.size());
        arcs_.push_back({to, cap});
        adj_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0});
    }

    std::int64_t max_flow(std::size_t s, std::size_t t)
    {
        std::int64_t total = 0;
        while (build_levels(s, t)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (std::int64_t pushed = push(s, t, std::numeric_limits<std::int64_t>::max()))
                total += pushed;
        }
        return total;
    }

private:
    struct Arc {
        std::size_t to;
        std::int64_t cap;
    };

    bool build_levels(std::size_t s, std::size_t t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        level_[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            for (std::size_t id : adj_[x]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[x] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t push(std::size_t x, std::size_t t, std::int64_t limit)
    {
        if (x == t)
            return limit;
        for (std::size_t& i = next_[x]; i < adj_[x].size(); ++i) {
            std::size_t id = adj_[x][i];
            Arc& a = arcs_[id];
            if (a.cap <= 0 || level_[a.to] != level_[x] + 1)
                continue;
            if (std::int64_t got = push(a.to, t, std::min(limit, a.cap))) {
                a.cap -= got;
                arcs_[id ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

// Is there a vertex set S with |E(S)| / |S| > num / den? Max-weight closure:
// each edge earns den and needs its two endpoints, each costing num.
bool density_exceeds(const Graph& g, std::uint64_t num, std::uint64_t den)
{
    const std::size_t m = g.size();
    const std::size_t n = g.order();
    const std::size_t source = m + n;
    const std::size_t sink = source + 1;
    const auto inf = static_cast<std::int64_t>(den) * static_cast<std::int64_t>(m) + 1;
    FlowNetwork net(sink + 1);
    for (std::size_t i = 0; i < m; ++i) {
        net.add_arc(source, i, static_cast<std::int64_t>(den));
        net.add_arc(i, m + g.edges()[i].u, inf);
        net.add_arc(i, m + g.edges()[i].v, inf);
    }
    for (std::size_t v = 0; v < n; ++v)
        net.add_arc(m + v, sink, static_cast<std::int64_t>(num));
    const auto profit = static_cast<std::int64_t>(den * m) - net.max_flow(source, sink);
    return profit > 0;
}

} // namespace

DensityValue max_subgraph_density(const Graph& g)
{
    if (g.empty())
        throw std::invalid_argument("density of the empty graph is undefined");

    // The optimum is e/k for some 1 <= k <= n and 0 <= e <= m.
    std::vector<DensityValue> candidates;
    for (std::uint64_t k = 1; k <= g.order(); ++k)
        for (std::uint64_t e = 0; e <= std::min<std::uint64_t>(g.size(), k * (k - 1) / 2); ++e)
            candidates.emplace_back(e, k);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Least candidate t with no subgraph denser than t.
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (density_exceeds(g, candidates[mid].numerator(), candidates[mid].denominator()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return candidates[lo];
}

DensityValue mad(const Graph& g)
{
    if (g.empty())
        return {};
    DensityValue d = max_subgraph_density(g);
    return {2 * d.numerator(), d.denominator()};
}

namespace {

class MinorEnumerator {
public:
    MinorEnumerator(const Graph& g, Depth r, std::size_t cap, const MinorVisitor& visit)
        : g_(g), r_(r), cap_(cap), visit_(visit), part_of_(g.order(), 0) {}

    void run()
    {
        if (g_.empty())
            return;
        assign(0, 0);
    }

private:
    void tick()
    {
        if (++states_ > cap_)
            throw LimitExceeded("shallow minor search exceeded " + std::to_string(cap_) + " states");
    }

    // Restricted-growth assignment of vertices to parts.
    void assign(Vertex v, std::size_t parts)
    {
        if (v == g_.order()) {
            tick();
            evaluate(parts);
            return;
        }
        for (std::size_t p = 0; p <= parts; ++p) {
            part_of_[v] = p;
            assign(v + 1, std::max(parts, p + 1));
        }
    }

    // Depths from `root` inside its part, or empty if the part is not
    // connected within radius ceil(r).
    std::vector<std::size_t> depths_from(Vertex root, std::size_t part) const
    {
        constexpr std::size_t far = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> depth(g_.order(), far);
        depth[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex y : g_.neighbors(queue[i]))
                if (part_of_[y] == part && depth[y] == far) {
                    depth[y] = depth[queue[i]] + 1;
                    queue.push_back(y);
                }
        for (Vertex v = 0; v < g_.order(); ++v)
            if (part_of_[v] == part && depth[v] > r_.ceil())
                return {};
        return depth;
    }

    void evaluate(std::size_t parts)
    {
        // Admissible roots per part, with the depth map each one induces.
        std::vector<std::vector<std::vector<std::size_t>>> options(parts);
        for (Vertex v = 0; v < g_.order(); ++v) {
            auto depth = depths_from(v, part_of_[v]);
            if (!depth.empty())
                options[part_of_[v]].push_back(std::move(depth));
        }
        for (const auto& o : options)
            if (o.empty())
                return;

        std::vector<std::size_t> choice(parts, 0);
        while (true) {
            tick();
            emit(parts, options, choice);
            std::size_t i = 0;
            while (i < parts && ++choice[i] == options[i].size())
                choice[i++] = 0;
            if (i == parts)
                break;
        }
    }

    void emit(std::size_t parts, const std::vector<std::vector<std::vector<std::size_t>>>& options,
              const std::vector<std::size_t>& choice)
    {
        std::vector<Edge> edges;
        for (const Edge& e : g_.edges()) {
            std::size_t pu = part_of_[e.u];
            std::size_t pv = part_of_[e.v];
            if (pu == pv)
                continue;
            std::size_t du = options[pu][choice[pu]][e.u];
            std::size_t dv = options[pv][choice[pv]][e.v];
            // Root-to-root path through e has length <= 2r + 1.
            if (du + dv + 1 <= r_.twice() + 1)
                edges.emplace_back(static_cast<Vertex>(pu), static_cast<Vertex>(pv));
        }
        visit_(Graph::build(parts, edges));
    }

    const Graph& g_;
    Depth r_;
    std::size_t cap_;
    const MinorVisitor& visit_;
    std::vector<std::size_t> part_of_;
    std::size_t states_ = 0;
};

} // namespace

void for_each_shallow_minor(const Graph& g, Depth r, std::size_t cap, const MinorVisitor& visit)
{
    MinorEnumerator(g, r, cap, visit).run();
}

DensityValue nabla_r_bruteforce(const Graph& g, Depth r, std::size_t cap)
{
    if (g.empty())
        throw std::invalid_argument("shallow minor density of the empty graph is undefined");
    DensityValue best;
    for_each_shallow_minor(g, r, cap, [&](const Graph& minor) { best = std::max(best, max_subgraph_density(minor)); });
    return best;
}

} // namespace pathdeg
