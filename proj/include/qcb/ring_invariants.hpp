#pragma once

// Capacities of the Groetzsch and Teichmueller rings and the distortion
// function phi_{K,n}. Exact in the plane through mu; for n >= 3 only
// certified brackets are available, built from the classical power bounds
// and the Groetzsch ring constant lambda_n in [4, 2 e^{n-1}).

#include <algorithm>
#include <cmath>

#include "qcb/core.hpp"
#include "qcb/special_functions.hpp"

namespace qcb {

/// gamma_2(s) = 2 pi / mu(1/s), capacity of the plane Groetzsch ring, s > 1.
inline double gamma2(double s)
{
    detail::require(s > 1.0, "gamma2: requires s > 1");
    return 2.0 * pi / mu(1.0 / s);
}

/// tau_2(t) = gamma_2(sqrt(1 + t)) / 2, capacity of the plane Teichmueller ring, t > 0.
inline double tau2(double t)
{
    detail::require(t > 0.0, "tau2: requires t > 0");
    return 0.5 * gamma2(std::sqrt(1.0 + t));
}

/// phi_{K,2}(r) = mu^{-1}(mu(r) / K).
inline double phi2(Dilatation k, double r, double tol = default_inverse_tolerance)
{
    detail::require(r >= 0.0 && r <= 1.0, "phi2: r must lie in [0, 1]");
    if (r == 0.0 || r == 1.0) return r;
    if (k.value() == 1.0) return r;
    return mu_inv(mu(r) / k.value(), tol);
}

/// Groetzsch ring constant: exactly 4 in the plane, bracketed by [4, 2 e^{n-1}] otherwise.
/// The open upper endpoint is closed as an over-estimate.
inline RealInterval lambda_bounds(Dimension n)
{
    if (n.value() == 2) return RealInterval{4.0};
    return {4.0, 2.0 * std::exp(n.value() - 1.0)};
}

/// Bracket of phi_{K,n}(r) from r^a <= phi <= lambda^{1-a} r^a <= 2^{1-1/K} K r^a,
/// evaluated with an explicit lambda bracket. The upper lambda endpoint is the
/// conservative choice because 1 - a >= 0.
inline RealInterval phi_upper_bracket(Dilatation k, Dimension n, double r, RealInterval lambda)
{
    require_at_least_one(k, "phi_upper_bracket");
    detail::require(r >= 0.0 && r <= 1.0, "phi_upper_bracket: r must lie in [0, 1]");
    if (r == 0.0 || r == 1.0) return RealInterval{r};
    const double a = k.alpha(n);
    const double ra = std::pow(r, a);
    const double kv = k.value();
    const double hi = std::min({1.0, std::pow(lambda.hi, 1.0 - a) * ra,
                                std::pow(2.0, 1.0 - 1.0 / kv) * kv * ra});
    return {ra, std::max(ra, hi)};
}

/// Bracket of phi_{1/K,n}(r) from 2^{1-K} K^{-K} r^b <= lambda^{1-b} r^b <= phi <= r^b.
/// 1 - b <= 0, so the upper lambda endpoint gives the smaller (safe) lower bound.
inline RealInterval phi_lower_bracket(Dilatation k, Dimension n, double r, RealInterval lambda)
{
    require_at_least_one(k, "phi_lower_bracket");
    detail::require(r >= 0.0 && r <= 1.0, "phi_lower_bracket: r must lie in [0, 1]");
    if (r == 0.0 || r == 1.0) return RealInterval{r};
    const double b = k.beta(n);
    const double rb = std::pow(r, b);
    const double kv = k.value();
    const double lo = std::max(std::pow(2.0, 1.0 - kv) * std::pow(kv, -kv) * rb,
                               std::pow(lambda.hi, 1.0 - b) * rb);
    return {std::min(lo, rb), rb};
}

/// Certified bracket of phi_{K,n}(r), K >= 1. Degenerate and exact for n = 2.
inline RealInterval phi_upper_family(Dilatation k, Dimension n, double r)
{
    require_at_least_one(k, "phi_upper_family");
    detail::require(r >= 0.0 && r <= 1.0, "phi_upper_family: r must lie in [0, 1]");
    if (n.value() == 2) return RealInterval{phi2(k, r)};
    return phi_upper_bracket(k, n, r, lambda_bounds(n));
}

/// Certified bracket of phi_{1/K,n}(r), K >= 1. Degenerate and exact for n = 2.
inline RealInterval phi_lower_family(Dilatation k, Dimension n, double r)
{
    require_at_least_one(k, "phi_lower_family");
    detail::require(r >= 0.0 && r <= 1.0, "phi_lower_family: r must lie in [0, 1]");
    if (n.value() == 2) return RealInterval{phi2(1.0 / k.value(), r)};
    return phi_lower_bracket(k, n, r, lambda_bounds(n));
}

/// eta_{K,n}(t) = tau_n^{-1}(tau_n(t) / K) through its closed form
/// (1 - phi^2) / phi^2 with phi = phi_{1/K,n}(1/sqrt(1+t)).
inline RealInterval eta_interval(Dilatation k, Dimension n, double t)
{
    require_at_least_one(k, "eta_interval");
    detail::require(t > 0.0, "eta_interval: requires t > 0");
    if (k.value() == 1.0) return RealInterval{t};
    const RealInterval p = phi_lower_family(k, n, 1.0 / std::sqrt(1.0 + t));
    return p.map_decreasing([](double v) { return (1.0 - v * v) / (v * v); });
}

} // namespace qcb
