#include "pathdeg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pathdeg::bounds {

namespace {

constexpr double ln2 = std::numbers::ln2;
constexpr double inv_e = 1.0 / std::numbers::e;

void require_p(std::size_t p)
{
    if (p < 2)
        throw std::invalid_argument("p must be at least 2");
}

BoundResult make_result(double threshold, std::string provenance)
{
    BoundResult r;
    r.threshold = threshold;
    r.integer_girth_threshold = static_cast<long long>(std::floor(threshold)) + 1;
    r.provenance = std::move(provenance);
    return r;
}

} // namespace

ExpansionParams::ExpansionParams(double a_, double b_) : a(a_), b(b_)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("expansion parameters a and b must be positive");
}

double ExpansionParams::A() const { return b / ln2; }

double ExpansionParams::C() const { return std::pow(24.0 * std::numbers::sqrt2 * a, 1.0 / b); }

double lambert_w_minus1(double t)
{
    if (!(t < 0.0) || t < -inv_e * (1.0 + 4 * std::numeric_limits<double>::epsilon()))
        throw std::domain_error("W_{-1} is defined on [-1/e, 0)");
    if (t <= -inv_e)
        return -1.0;

    auto residual = [t](double w) { return w * std::exp(w) - t; };

    // Seed the bracket from -1 - sqrt(2u) - u < W < -1 - sqrt(2u) - 2u/3,
    // where t = -e^{-u-1}.
    const double u = std::max(0.0, -std::log(-t) - 1.0);
    double lo = -2.0 - std::sqrt(2.0 * u) - u;
    while (residual(lo) <= 0.0)
        lo *= 2.0;
    double hi = -1.0;

    // w e^w decreases on (-inf, -1], so the residual is positive left of the root.
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++i) {
        double mid = 0.5 * (lo + hi);
        if (residual(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double w = 0.5 * (lo + hi);

    // Halley polish, kept only while it stays inside the bracket and improves.
    for (int i = 0; i < 4; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - t;
        const double d1 = ew * (w + 1.0);
        if (d1 == 0.0)
            break;
        const double next = w - f / (d1 - (w + 2.0) * f / (2.0 * w + 2.0));
        if (!(next >= lo && next <= hi) || std::abs(residual(next)) >= std::abs(f))
            break;
        w = next;
    }
    return w;
}

double threshold_beta(double A, double B)
{
    if (!(A > 0.0))
        throw std::invalid_argument("A must be positive");
    if (B < A * (1.0 - std::log(A)))
        return 0.0;
    const double arg = std::max(-std::exp(-B / A) / A, -inv_e);
    return -A * lambert_w_minus1(arg);
}

BoundResult girth_bound_polynomial(const ExpansionParams& params, std::size_t p)
{
    require_p(p);
    const double pd = static_cast<double>(p);
    const double A = params.A();
    // e^{B/A} = C p, so beta = -A W_{-1}(-1 / (A C p)).
    const double B = std::log(24.0 * std::numbers::sqrt2 * params.a * std::pow(pd, params.b)) / ln2;
    const double beta = threshold_beta(A, B);
    const double gamma = 2.0 * std::floor(2.0 * beta) + 4.0;
    return make_result(std::max(7.0, gamma) * (pd - 1.0), "polynomial-expansion");
}

BoundResult girth_bound_minor_closed(double d, std::size_t p)
{
    require_p(p);
    if (!(d >= 2.0))
        throw std::invalid_argument("maximum average degree d must be at least 2");
    const double factor = 4.0 * std::log2(d) + 2.0 * std::log2(std::min(d, 576.0)) + 3.0;
    return make_result(factor * static_cast<double>(p - 1), "minor-closed");
}

BoundResult girth_bound_subexponential(const ExpansionFunction& expansion, std::size_t p, std::size_t r_max)
{
    require_p(p);
    for (std::size_t r = p; r <= r_max; ++r) {
        const double radius = 3.0 * static_cast<double>(p) * static_cast<double>(r);
        if (expansion(radius) < std::exp2(static_cast<double>(r))) {
            auto result = make_result(static_cast<double>((6 * p * r + 3) * (p - 1)), "subexponential-expansion");
            result.radius = r;
            return result;
        }
    }
    throw std::domain_error("no radius r <= " + std::to_string(r_max) + " with Exp(3pr) < 2^r");
}

BoundResult girth_bound_clique(std::size_t k, std::size_t p, double gamma, double gamma_correction)
{
    if (k < 5)
        throw std::invalid_argument("k must be at least 5");
    if (!(gamma > 0.0))
        throw std::invalid_argument("gamma must be positive");
    const double kd = static_cast<double>(k);
    const double d = (gamma + gamma_correction) * kd * std::sqrt(std::log2(kd));
    auto result = girth_bound_minor_closed(d, p);
    result.provenance = "clique-minor-free";
    return result;
}

double lower_bound_poly(double b, std::size_t p, double alpha)
{
    if (p < 3)
        throw std::invalid_argument("p must be at least 3");
    if (!(b > 0.0) || !(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("need b > 0 and 0 < alpha <= 1");
    const double pm1 = static_cast<double>(p - 1);
    const double arg = -ln2 / (pm1 * b);
    if (arg < -inv_e)
        throw std::domain_error("W_{-1} argument below -1/e; p too small for this b");
    return -(2.0 * b / (alpha * ln2)) * lambert_w_minus1(arg) * pm1;
}

double lower_bound_minor_closed(double d, std::size_t p, double c, double alpha)
{
    require_p(p);
    if (!(d > 2.0) || !(c > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("need d > 2, c > 0 and alpha > 0");
    return ((2.0 / alpha) * std::log2(d - 2.0) - std::log2(c) / alpha) * static_cast<double>(p - 1);
}

std::size_t wcol_girth_rule(std::size_t r, std::size_t q)
{
    if (q <= r)
        throw std::invalid_argument("q must exceed r");
    if (q >= 2 * r)
        return r + 2;
    // floor(log2(n / d)) for integers: largest k with 2^k d <= n.
    const std::size_t num = q - 1;
    const std::size_t den = q - r;
    std::size_t k = 0;
    while ((den << (k + 1)) <= num)
        ++k;
    return r + 2 + k;
}

} // namespace pathdeg::bounds
