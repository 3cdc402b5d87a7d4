#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathdeg/bounds.hpp"
#include "pathdeg/errors.hpp"
#include "pathdeg/generators.hpp"
#include "pathdeg/reduction.hpp"
#include "pathdeg/wcol.hpp"

#include "support/enumerate.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace pathdeg;

namespace {

Graph make(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs) { return Graph::build(n, pairs); }

Graph fixture(const char* name) { return generate(GeneratorSpec::fixture(name)); }

void check_order_exhaustively(const Graph& g, const LinearOrder& pi, const WcolBoundParams& params)
{
    for (std::size_t x = 0; x <= params.r; ++x) {
        std::size_t worst = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            auto set = wreach_set(g, pi, x, v);
            worst = std::max(worst, set.size());
        }
        CAPTURE(x);
        CHECK(within_target(worst, x, params));
        CHECK(static_cast<double>(worst) <= wcol_target(x, params) + 1e-12);
    }
}

} // namespace

TEST_CASE("LinearOrder")
{
    LinearOrder pi({2, 0, 1});
    CHECK(pi.rank(2) == 0);
    CHECK(pi.rank(1) == 2);
    CHECK(LinearOrder::identity(3).sequence() == std::vector<Vertex>{0, 1, 2});
    CHECK_THROWS_AS(LinearOrder({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder({0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(WcolBoundParams(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(WcolBoundParams(0, 2), std::invalid_argument);
}

TEST_CASE("wreach examples")
{
    // a=0, b=1, c=2 on the path a-b-c.
    auto p3 = make(3, {{0, 1}, {1, 2}});
    LinearOrder abc({0, 1, 2});
    CHECK(wreach_set(p3, abc, 1, 2) == std::vector<Vertex>{1, 2});
    CHECK(wreach_set(p3, abc, 2, 2) == std::vector<Vertex>{0, 1, 2});
    CHECK(wreach_set(p3, abc, 0, 2) == std::vector<Vertex>{2});

    // Order a < c < b: b is the largest and sees both.
    LinearOrder acb({0, 2, 1});
    CHECK(wcol_under_order(p3, acb, 1) == 3);
    // b first: every vertex reaches at most itself and b.
    CHECK(wcol_under_order(p3, LinearOrder({1, 0, 2}), 1) == 2);
    auto k3 = generate(GeneratorSpec::complete(3));
    std::vector<Vertex> seq{0, 1, 2};
    do {
        CHECK(wcol_under_order(k3, LinearOrder(seq), 1) == 3);
    } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST_CASE("wreach matches path enumeration")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        auto g = testsupport::random_graph(rng, 2 + rng() % 9, 0.3);
        std::vector<Vertex> seq(g.order());
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), rng);
        LinearOrder pi(seq);
        for (std::size_t x = 0; x <= 4; ++x)
            for (Vertex v = 0; v < g.order(); ++v)
                CHECK(wreach_set(g, pi, x, v) == testsupport::wreach_by_paths(g, pi, x, v));
    }
}

TEST_CASE("wcol_exact equals the permutation oracle")
{
    CHECK(wcol_exact(make(3, {{0, 1}, {1, 2}}), 1) == 2);
    CHECK(wcol_exact(generate(GeneratorSpec::complete(3)), 1) == 3);
    CHECK(wcol_exact(Graph{}, 2) == 0);
    CHECK_THROWS_AS(wcol_exact(fixture("petersen"), 1), LimitExceeded);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 40; ++i) {
        auto g = testsupport::random_graph(rng, 1 + rng() % 6, 0.45);
        for (std::size_t r = 1; r <= 3; ++r)
            CHECK(wcol_exact(g, r) == testsupport::wcol_by_permutations(g, r));
    }
}

TEST_CASE("target function")
{
    WcolBoundParams tight(3, 4);
    CHECK(wcol_target(0, tight) == 1.0);
    CHECK(wcol_target(3, tight) == doctest::Approx(5.0 + std::log2(3.0)).epsilon(1e-12));
    CHECK(wcol_target(3, tight) == doctest::Approx(6.585).epsilon(1e-3));
    CHECK(wcol_target(2, WcolBoundParams(2, 4)) == 4.0);
    CHECK_THROWS_AS(wcol_target(4, tight), std::invalid_argument);

    // Exact comparison agrees with the floating formula away from ties, and
    // f(x+1) >= f(x) + 1 for x >= 1.
    for (std::size_t r = 1; r <= 12; ++r)
        for (std::size_t q = r + 1; q <= 3 * r + 2; ++q) {
            WcolBoundParams params(r, q);
            for (std::size_t x = 0; x <= r; ++x) {
                const double f = wcol_target(x, params);
                for (std::size_t count = 0; count <= r + 8; ++count) {
                    const double c = static_cast<double>(count);
                    if (std::abs(c - f) > 1e-9)
                        CHECK(within_target(count, x, params) == (c < f));
                    else
                        CHECK(within_target(count, x, params));
                }
                if (x >= 1 && x < r)
                    CHECK(wcol_target(x + 1, params) >= wcol_target(x, params) + 1.0 - 1e-12);
            }
        }
}

TEST_CASE("weak orders on paths, cycles and subdivided fixtures")
{
    for (std::size_t r = 1; r <= 4; ++r) {
        WcolBoundParams params(r, r + 1);
        for (std::size_t n = 1; n <= 20; ++n) {
            auto path = generate(GeneratorSpec::path(n));
            check_order_exhaustively(path, weak_order(path, params), params);
        }
    }

    WcolBoundParams c9(3, 4);
    auto cycle = generate(GeneratorSpec::cycle(9));
    auto pi = weak_order(cycle, c9);
    check_order_exhaustively(cycle, pi, c9);

    WcolBoundParams two(2, 4);
    auto dodeca = subdivide(fixture("dodecahedron"), 4 * 2 - 1);
    auto order = weak_order(dodeca, two);
    for (std::size_t x = 0; x <= 2; ++x)
        CHECK(wcol_under_order(dodeca, order, x) <= (x == 0 ? 1 : x + 2));

    CHECK_THROWS_AS(weak_order(fixture("petersen"), WcolBoundParams(1, 2)), NotDegenerate);
}

TEST_CASE("ear placement: midpoint to the front, sides to the back")
{
    // C_{2q+1} with q = 3: one exact ear of length 6, then a leaf and an isolated vertex.
    WcolBoundParams params(2, 3);
    auto c7 = generate(GeneratorSpec::cycle(7));
    auto reduction = greedy_reduce(c7, params.ear_length(), true);
    REQUIRE(reduction.residual.graph.empty());
    const auto& steps = reduction.prefix.steps;
    REQUIRE(steps.front().kind == StepKind::delete_ear_interior);
    const auto& ear = steps.front().vertices;
    REQUIRE(ear.size() == 7);

    auto pi = weak_order(c7, params);
    const auto& seq = pi.sequence();
    CHECK(seq.front() == ear[3]);
    // Everything placed before the ear (the last two steps, replayed first)
    // sits between the midpoint and the sides.
    CHECK(seq[1] == steps[2].vertex());
    CHECK(seq[2] == steps[1].vertex());
    CHECK(seq[3] == ear[1]);
    CHECK(seq[4] == ear[2]);
    CHECK(seq[5] == ear[5]);
    CHECK(seq[6] == ear[4]);
}

TEST_CASE("weak orders on random degenerate graphs meet f and the wcol rule")
{
    std::mt19937_64 rng(47);
    for (auto [r, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 6}, {3, 5}}) {
        WcolBoundParams params(r, q);
        int tested = 0;
        while (tested < 25) {
            auto base = testsupport::random_graph(rng, 3 + rng() % 5, 0.5);
            auto g = subdivide(base, 2 * q - 1 + rng() % 2);
            if (rng() % 2)
                g = testsupport::with_pendants(g, static_cast<Vertex>(rng() % g.order()), 1 + rng() % 3);
            if (!is_p_path_degenerate(g, 2 * q).degenerate)
                continue;
            ++tested;
            auto pi = weak_order(g, params);
            CHECK(is_good_order(g, pi, params));
            check_order_exhaustively(g, pi, params);
            CHECK(wcol_under_order(g, pi, r) <= bounds::wcol_girth_rule(r, q));
        }
    }
}

TEST_CASE("pendant vertices keep a good order good")
{
    WcolBoundParams params(2, 3);
    auto base = subdivide(fixture("petersen"), 5);
    REQUIRE(is_p_path_degenerate(base, 6).degenerate);
    check_order_exhaustively(base, weak_order(base, params), params);
    std::mt19937_64 rng(53);
    for (int i = 0; i < 10; ++i) {
        auto g = testsupport::with_pendants(base, static_cast<Vertex>(rng() % base.order()), 1 + rng() % 3);
        check_order_exhaustively(g, weak_order(g, params), params);
    }
}

TEST_CASE("exact wcol is below ceil f(r) on small degenerate graphs")
{
    std::mt19937_64 rng(59);
    int tested = 0;
    while (tested < 40) {
        auto g = testsupport::random_graph(rng, 3 + rng() % 7, 0.35);
        for (std::size_t r = 1; r <= 3; ++r)
            for (std::size_t q = r + 1; q <= 2 * r + 1; ++q) {
                if (!is_p_path_degenerate(g, 2 * q).degenerate)
                    continue;
                ++tested;
                WcolBoundParams params(r, q);
                CHECK(wcol_exact(g, r) <= static_cast<std::size_t>(std::ceil(wcol_target(r, params) - 1e-12)));
            }
    }
}
