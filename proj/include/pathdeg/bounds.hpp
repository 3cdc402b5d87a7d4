#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace pathdeg::bounds {

/// Polynomial expansion profile Exp(r) <= a (r + 1/2)^b.
struct ExpansionParams {
    double a = 1.0;
    double b = 1.0;

    ExpansionParams() = default;
    /// Throws std::invalid_argument unless a > 0 and b > 0.
    ExpansionParams(double a_, double b_);

    double A() const;  // b / ln 2
    double C() const;  // (24 sqrt(2) a)^(1/b)
};

struct BoundResult {
    /// Graphs of girth strictly greater than this are covered.
    double threshold = 0.0;
    /// floor(threshold) + 1.
    long long integer_girth_threshold = 0;
    std::string provenance;
    /// Radius found by the sub-exponential search, when that bound was used.
    std::optional<std::size_t> radius;
};

/// Lower real branch W_{-1} on [-1/e, 0), to |w e^w - t| <= 1e-12.
/// Throws std::domain_error outside that interval.
double lambert_w_minus1(double t);

/// Least beta >= 0 with x > A log x + B for every x > beta. Zero when
/// B < A (1 - log A); otherwise -A W_{-1}(-e^{-B/A} / A), which at equality is
/// the tangency point x = A. Requires A > 0.
double threshold_beta(double A, double B);

/// max(7, 2 floor(-(2b / ln 2) W_{-1}(-ln 2 / (C b p))) + 4) * (p - 1).
BoundResult girth_bound_polynomial(const ExpansionParams& params, std::size_t p);

/// (4 log2 d + 2 log2 min(d, 576) + 3) (p - 1), for d >= 2 and p >= 2.
BoundResult girth_bound_minor_closed(double d, std::size_t p);

using ExpansionFunction = std::function<double(double)>;

/// (6 p r + 3)(p - 1) for the least r >= p with Exp(3 p r) < 2^r, r <= r_max.
/// Throws std::domain_error when no such r exists up to r_max.
BoundResult girth_bound_subexponential(const ExpansionFunction& expansion, std::size_t p, std::size_t r_max);

/// Minor-closed bound at average degree (gamma + gamma_correction) k sqrt(log2 k),
/// the density at which K_k minors are forced. The lower-order term is a
/// caller-supplied parameter; 0 drops it.
BoundResult girth_bound_clique(std::size_t k, std::size_t p, double gamma = 0.638, double gamma_correction = 0.0);

/// -(2b / (alpha ln 2)) W_{-1}(-ln 2 / ((p - 1) b)) (p - 1): girth of a
/// non-degenerate graph in a class of expansion O(r^b), given cubic graphs of
/// girth g and order c 2^(alpha g). alpha = 3/4 is the known cage exponent.
/// Throws std::domain_error when the W argument falls below -1/e.
double lower_bound_poly(double b, std::size_t p, double alpha);

/// ((2 / alpha) log2(d - 2) - log2(c) / alpha)(p - 1) for the minor-closed
/// lower-bound family. Requires d > 2, c > 0, alpha > 0.
double lower_bound_minor_closed(double d, std::size_t p, double c, double alpha);

/// r + 2 + floor(log2((q-1)/(q-r))) if r < q < 2r; r + 2 if q >= 2r.
/// Throws std::invalid_argument when q <= r.
std::size_t wcol_girth_rule(std::size_t r, std::size_t q);

} // namespace pathdeg::bounds
