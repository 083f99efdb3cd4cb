#pragma once

// Complete elliptic integral of the first kind and the plane Groetzsch
// modulus mu(r) = (pi/2) K(r') / K(r), r' = sqrt(1 - r^2), with its inverse.

#include <cmath>
#include <utility>

#include "qcb/core.hpp"

namespace qcb {

/// Arguments below this use mu(r) ~ log(4/r); above 1 - this, the reciprocal identity.
inline constexpr double mu_endpoint_switch = 1e-8;
inline constexpr double default_inverse_tolerance = 1e-12;

/// Arithmetic-geometric mean of two positive numbers.
inline double agm(double a, double b)
{
    detail::require(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b),
                    "agm: arguments must be finite and positive");
    for (int i = 0; i < 64; ++i) {
        const double am = 0.5 * (a + b);
        const double gm = std::sqrt(a * b);
        if (std::abs(am - gm) <= 2 * std::numeric_limits<double>::epsilon() * am) return am;
        a = am;
        b = gm;
    }
    return 0.5 * (a + b);
}

/// Complementary modulus sqrt(1 - r^2), evaluated without cancellation near r = 1.
inline double complement(double r) { return std::sqrt((1.0 - r) * (1.0 + r)); }

/// Legendre's complete elliptic integral of the first kind, K(r), 0 <= r < 1.
inline double ellipk(double r)
{
    if (r == 1.0) throw divergence_error("ellipk: K(r) diverges at r = 1");
    detail::require(r >= 0.0 && r < 1.0, "ellipk: argument must lie in [0, 1)");
    return pi / (2.0 * agm(1.0, complement(r)));
}

namespace detail {

// K(r')/K(r) = agm(1, r') / agm(1, r).
inline double mu_agm(double r) { return 0.5 * pi * agm(1.0, complement(r)) / agm(1.0, r); }

} // namespace detail

/// Modulus of the plane Groetzsch ring: decreasing homeomorphism (0,1) -> (0,inf).
inline double mu(double r)
{
    detail::require(r > 0.0 && r < 1.0, "mu: argument must lie in (0, 1)");
    if (r < mu_endpoint_switch) return std::log(4.0 / r);
    if (r > 1.0 - mu_endpoint_switch) return 0.25 * pi * pi / mu(complement(r));
    return detail::mu_agm(r);
}

/// d mu / d r = -pi^2 / (4 r r'^2 K(r)^2).
inline double mu_derivative(double r)
{
    detail::require(r > 0.0 && r < 1.0, "mu_derivative: argument must lie in (0, 1)");
    const double k = ellipk(r);
    return -pi * pi / (4.0 * r * (1.0 - r) * (1.0 + r) * k * k);
}

/// Inverse of mu. Safeguarded Newton iteration inside a bisection bracket;
/// stops once |mu(r) - y| <= tol * max(1, y) or the bracket collapses.
inline double mu_inv(double y, double tol = default_inverse_tolerance)
{
    detail::require(y > 0.0, "mu_inv: argument must be positive");
    detail::require(tol > 0.0, "mu_inv: tolerance must be positive");
    if (std::isinf(y)) return 0.0;

    // Matches the asymptotic branch of mu() exactly.
    if (y > std::log(4.0 / mu_endpoint_switch)) return 4.0 * std::exp(-y);
    // r close to 1: solve for the complement, which sits in (0, 1/sqrt 2].
    if (y < 0.5 * pi) return complement(mu_inv(0.25 * pi * pi / y, tol));

    // Here y in [pi/2, log(4e8)], so the root lies in [mu_endpoint_switch, 1/sqrt 2].
    // mu(r) < log(4/r) gives r < 4 e^{-y}.
    double hi = std::min(std::sqrt(0.5), 4.0 * std::exp(-y));
    double lo = hi;
    while (lo > mu_endpoint_switch && mu(lo) < y) lo *= 0.5;
    lo = std::max(lo, mu_endpoint_switch);
    if (mu(hi) >= y) return hi;

    const double scale = std::max(1.0, y);
    double r = hi; // the asymptotic guess is already close for small r
    for (int it = 0; it < 200; ++it) {
        const double f = mu(r) - y;
        double next = r - f / mu_derivative(r);
        if (std::abs(f) <= tol * scale) return (next > lo && next < hi) ? next : r;
        if (f > 0) lo = r; else hi = r;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) return next;
        r = next;
    }
    return r;
}

} // namespace qcb
