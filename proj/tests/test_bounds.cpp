#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathdeg/bounds.hpp"

#include "support/oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace pathdeg::bounds;

namespace {

constexpr double ln2 = std::numbers::ln2;

double residual(double w, double t) { return std::abs(w * std::exp(w) - t); }

} // namespace

TEST_CASE("lambert W_{-1} examples and domain")
{
    CHECK(lambert_w_minus1(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-7));
    CHECK(lambert_w_minus1(-0.1) == doctest::Approx(-3.5771520640).epsilon(1e-10));
    CHECK(lambert_w_minus1(-0.1) == doctest::Approx(static_cast<double>(testsupport::lambert_bisection(-0.1L))).epsilon(1e-12));

    const double w = lambert_w_minus1(-std::exp(-2.0));
    CHECK(w > -1.0 - std::sqrt(2.0) - 1.0);
    CHECK(w < -1.0 - std::sqrt(2.0) - 2.0 / 3.0);

    CHECK_THROWS_AS(lambert_w_minus1(0.0), std::domain_error);
    CHECK_THROWS_AS(lambert_w_minus1(0.1), std::domain_error);
    CHECK_THROWS_AS(lambert_w_minus1(-0.4), std::domain_error);
}

TEST_CASE("lambert residual on sampled arguments")
{
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double edge = std::exp(-1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        // Half uniform on (-1/e, 0), half log-spaced towards 0.
        double t = i % 2 ? -edge * unit(rng) : -edge * std::pow(10.0, -12.0 * unit(rng));
        if (t == 0.0 || t <= -edge)
            continue;
        double w = lambert_w_minus1(t);
        CHECK(w <= -1.0);
        worst = std::max(worst, residual(w, t));
        CHECK(w == doctest::Approx(static_cast<double>(testsupport::lambert_bisection(t))).epsilon(1e-9));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("W-approximation sandwich")
{
    for (double u : {0.01, 0.1, 1.0, 5.0, 10.0, 50.0}) {
        CAPTURE(u);
        const double w = lambert_w_minus1(-std::exp(-u - 1.0));
        CHECK(-1.0 - std::sqrt(2.0 * u) - u < w);
        CHECK(w < -1.0 - std::sqrt(2.0 * u) - 2.0 * u / 3.0);
    }
}

TEST_CASE("threshold beta")
{
    CHECK(threshold_beta(1.0, 0.0) == 0.0);
    CHECK(threshold_beta(2.0, -5.0) == 0.0);
    CHECK(threshold_beta(1.0, 2.0) == doctest::Approx(3.1462).epsilon(1e-4));
    CHECK(std::abs(threshold_beta(1.0, 2.0) - static_cast<double>(testsupport::beta_bisection(1.0L, 2.0L))) <= 1e-9);
    CHECK(std::abs(threshold_beta(1.0, 2.0) + lambert_w_minus1(-std::exp(-2.0))) <= 1e-9);

    // Tangency: at B = A(1 - ln A) the curve touches x = A.
    CHECK(threshold_beta(2.0, 2.0 * (1.0 - std::log(2.0))) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK_THROWS_AS(threshold_beta(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("threshold beta soundness on samples")
{
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> a_dist(0.1, 10.0), b_dist(-5.0, 30.0), unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double A = a_dist(rng);
        const double B = b_dist(rng);
        const double beta = threshold_beta(A, B);
        CAPTURE(A);
        CAPTURE(B);
        CHECK(beta >= 0.0);
        if (beta > 0.0) {
            CHECK(std::abs(beta - A * std::log(beta) - B) <= 1e-9 * std::max(1.0, beta));
            CHECK(std::abs(beta - static_cast<double>(testsupport::beta_bisection(A, B))) <= 1e-9 * std::max(1.0, beta));
        }
        for (int j = 0; j < 1000; ++j) {
            const double x = beta + 1e-6 * std::max(1.0, beta) + std::pow(10.0, 4.0 * unit(rng)) - 1.0 + 1e-9;
            REQUIRE(x > A * std::log(x) + B);
        }
    }
}

TEST_CASE("polynomial bound matches the half-integer scan")
{
    CHECK(girth_bound_polynomial(ExpansionParams(1, 1), 2).threshold == 40.0);
    CHECK(girth_bound_polynomial(ExpansionParams(1, 1), 3).threshold == 84.0);

    for (double a : {0.5, 1.0, 3.0})
        for (double b : {0.5, 1.0, 2.0})
            for (std::size_t p : {2, 3, 10, 100}) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(p);
                ExpansionParams params(a, b);
                const long double A = b / std::numbers::ln2_v<long double>;
                const long double B = std::log2(24.0L * std::numbers::sqrt2_v<long double> * a * std::pow(static_cast<long double>(p), b));
                auto k = testsupport::largest_violating_half(A, B, 100000);
                const double gamma = k ? 2.0 * static_cast<double>(*k) + 4.0 : 4.0;
                auto result = girth_bound_polynomial(params, p);
                CHECK(result.threshold == std::max(7.0, gamma) * static_cast<double>(p - 1));
                CHECK(std::fmod(result.threshold, static_cast<double>(p - 1)) == 0.0);
                CHECK(result.threshold >= 7.0 * static_cast<double>(p - 1));
                CHECK(result.integer_girth_threshold == static_cast<long long>(std::floor(result.threshold)) + 1);
            }
}

TEST_CASE("polynomial bound respects the uniform bound")
{
    for (double b : {0.5, 1.0, 2.0}) {
        ExpansionParams params(1.0, b);
        const double A = params.A();
        const double C = params.C();
        for (double e = 0.0; e <= 6.0; e += 0.05) {
            const auto p = static_cast<std::size_t>(std::max(2.0, std::round(std::pow(10.0, e))));
            const double pd = static_cast<double>(p);
            const double ratio = girth_bound_polynomial(params, p).threshold / (pd - 1.0);
            const double cap = 4 * b * std::log2(pd) + 4 * A * std::sqrt(2 * std::log(A * C * pd) - 2) + 4 * b * std::log2(A * C) + 4;
            CAPTURE(p);
            CHECK(ratio < cap);
        }
    }
}

TEST_CASE("minor-closed bound")
{
    auto six = girth_bound_minor_closed(6, 2);
    CHECK(six.threshold == doctest::Approx(18.5098).epsilon(1e-5));
    CHECK(six.integer_girth_threshold == 19);
    CHECK(girth_bound_minor_closed(576, 2).threshold == doctest::Approx(6 * std::log2(576.0) + 3));
    CHECK(girth_bound_minor_closed(576, 2).threshold == doctest::Approx(58.019).epsilon(1e-5));
    CHECK(girth_bound_minor_closed(1024, 2).threshold == doctest::Approx(61.34).epsilon(1e-4));
    CHECK(girth_bound_minor_closed(6, 5).threshold == doctest::Approx(4 * six.threshold));
    CHECK_THROWS_AS(girth_bound_minor_closed(1.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(girth_bound_minor_closed(6, 1), std::invalid_argument);
}

TEST_CASE("sub-exponential bound")
{
    auto one = girth_bound_subexponential([](double) { return 1.0; }, 2, 1000);
    CHECK(one.threshold == 27.0);
    CHECK(one.radius == 2u);
    auto root = girth_bound_subexponential([](double r) { return std::exp2(std::sqrt(r)); }, 2, 1000);
    CHECK(root.radius == 7u);
    CHECK(root.threshold == 87.0);
    CHECK_THROWS_AS(girth_bound_subexponential([](double r) { return std::exp2(r); }, 3, 500), std::domain_error);

    // Direct search as the oracle.
    for (std::size_t p = 2; p <= 6; ++p) {
        auto exp = [](double r) { return r * r; };
        std::size_t r = p;
        while (!(exp(3.0 * p * r) < std::exp2(static_cast<double>(r))))
            ++r;
        auto got = girth_bound_subexponential(exp, p, 10000);
        CHECK(got.radius == r);
        CHECK(got.threshold == static_cast<double>((6 * p * r + 3) * (p - 1)));
    }
}

TEST_CASE("clique bound")
{
    const double d5 = 0.638 * 5 * std::sqrt(std::log2(5.0));
    CHECK(girth_bound_clique(5, 2).threshold == doctest::Approx(girth_bound_minor_closed(std::max(2.0, d5), 2).threshold));
    CHECK(girth_bound_clique(5, 2, 0.638, 0.1).threshold ==
          doctest::Approx(girth_bound_minor_closed(0.738 * 5 * std::sqrt(std::log2(5.0)), 2).threshold));

    // Once the clamp is active the excess over the leading terms is constant.
    const double tail = 4 * std::log2(0.638) + 2 * std::log2(576.0) + 3;
    for (std::size_t k = 1000; k <= 1'000'000; k *= 10) {
        const double kd = static_cast<double>(k);
        for (std::size_t p : {2, 3, 7}) {
            auto res = girth_bound_clique(k, p);
            CHECK(res.threshold == doctest::Approx(girth_bound_clique(k, 2).threshold * static_cast<double>(p - 1)));
            const double excess = res.threshold / static_cast<double>(p - 1) - 4 * std::log2(kd) - 2 * std::log2(std::log2(kd));
            CHECK(excess == doctest::Approx(tail).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(girth_bound_clique(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(girth_bound_clique(5, 2, 0.0), std::invalid_argument);
}

TEST_CASE("lower bounds")
{
    const double w = static_cast<double>(testsupport::lambert_bisection(-std::log(2.0L) / 2.0L));
    CHECK(lower_bound_poly(1, 3, 1) == doctest::Approx(-(2.0 / ln2) * w * 2.0).epsilon(1e-10));
    for (std::size_t p : {100, 1000, 10000}) {
        const double pd = static_cast<double>(p);
        const double ratio = lower_bound_poly(1, p, 0.75) / ((8.0 / 3.0) * pd * std::log2(pd));
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 1.5);
    }
    // (p - 1) b below e ln 2 pushes the argument under -1/e.
    CHECK_THROWS_AS(lower_bound_poly(0.5, 3, 0.75), std::domain_error);
    CHECK_NOTHROW(lower_bound_poly(4, 3, 0.75));

    CHECK(lower_bound_minor_closed(10, 3, 1, 0.75) == doctest::Approx((2 / 0.75) * 3.0 * 2.0));
    CHECK(lower_bound_minor_closed(10, 3, 2, 1) == doctest::Approx((2.0 * 3.0 - 1.0) * 2.0));
    CHECK_THROWS_AS(lower_bound_minor_closed(2, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("wcol girth rule")
{
    CHECK(wcol_girth_rule(3, 4) == 6);
    CHECK(wcol_girth_rule(3, 6) == 5);
    CHECK(wcol_girth_rule(1, 2) == 3);
    for (std::size_t r = 1; r <= 40; ++r) {
        CHECK(wcol_girth_rule(r, r + 1) == r + 2 + static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(r)))));
        // Integer oracle: largest j with 2^j (q - r) <= q - 1.
        for (std::size_t q = r + 1; q <= 3 * r; ++q) {
            std::size_t j = 0;
            if (q < 2 * r)
                while ((std::size_t{1} << (j + 1)) * (q - r) <= q - 1)
                    ++j;
            CHECK(wcol_girth_rule(r, q) == r + 2 + j);
        }
    }
    CHECK_THROWS_AS(wcol_girth_rule(3, 3), std::invalid_argument);
}
