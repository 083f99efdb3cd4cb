#pragma once

// Distortion bounds for K-quasiconformal maps with identity boundary values.
// Every bound that depends on phi_{K,n} is returned as an interval: exact
// (degenerate) in the plane, a certified bracket for n >= 3.

#include <algorithm>
#include <cmath>
#include <optional>

#include "qcb/core.hpp"
#include "qcb/ring_invariants.hpp"
#include "qcb/special_functions.hpp"

namespace qcb {

using BoundValue = RealInterval;

/// Below this distance from K = 1, removable singularities return their limit.
inline constexpr double limit_switch = 1e-12;

namespace detail {

inline RealInterval clamp_nonnegative(RealInterval v) { return {std::max(0.0, v.lo), std::max(0.0, v.hi)}; }

} // namespace detail

/// Ball bound rho(x, f(x)) <= log((1 - b^2) / b^2), b = phi_{1/K,n}(1/sqrt 2).
inline BoundValue bound_mv(Dimension n, Dilatation k)
{
    require_at_least_one(k, "bound_mv");
    if (k.value() == 1.0) return BoundValue{0.0};
    const RealInterval b = phi_lower_family(k, n, std::sqrt(0.5));
    return detail::clamp_nonnegative(b.map_decreasing([](double v) { return std::log((1.0 - v * v) / (v * v)); }));
}

/// Ball bound rho(x, f(x)) <= log((1 - b) / b), b = phi_{1/K,n}(1/2).
inline BoundValue bound_vz(Dimension n, Dilatation k)
{
    require_at_least_one(k, "bound_vz");
    if (k.value() == 1.0) return BoundValue{0.0};
    const RealInterval b = phi_lower_family(k, n, 0.5);
    return detail::clamp_nonnegative(b.map_decreasing([](double v) { return std::log((1.0 - v) / v); }));
}

/// Alternative ball bound rho(x, f(x)) <= log(2p / (1 - p)), p = phi_{K,n}(1/3).
/// Coincides with bound_vz in the plane.
inline BoundValue bound_vz_alt(Dimension n, Dilatation k)
{
    require_at_least_one(k, "bound_vz_alt");
    if (k.value() == 1.0) return BoundValue{0.0};
    if (n.value() == 2) {
        // 1 - p = q^2 / (1 + p) with q = phi_{1/K,2}(sqrt(8)/3) avoids cancellation for large K.
        const double p = phi2(k, 1.0 / 3.0);
        const double q = phi2(1.0 / k.value(), std::sqrt(8.0) / 3.0);
        return BoundValue{std::max(0.0, std::log(2.0 * p * (1.0 + p)) - 2.0 * std::log(q))};
    }
    const RealInterval p = phi_upper_family(k, n, 1.0 / 3.0);
    return detail::clamp_nonnegative(
        p.map_increasing([](double v) { return v >= 1.0 ? inf : std::log(2.0 * v / (1.0 - v)); }));
}

/// Krzyz's sharp planar bound 2 artanh mu^{-1}(log((sqrt K + 1)/(sqrt K - 1))), K > 1.
inline double bound_krzyz(Dilatation k)
{
    const double kv = k.value();
    if (!(kv > 1.0)) throw domain_error("bound_krzyz: requires K > 1 (the limit at K = 1 is 0)");
    if (kv - 1.0 < limit_switch) return 0.0;
    const double s = std::sqrt(kv);
    // (sqrt K + 1)/(sqrt K - 1) = (sqrt K + 1)^2 / (K - 1)
    const double arg = 2.0 * std::log1p(s) - std::log(kv - 1.0);
    return 2.0 * std::atanh(mu_inv(arg));
}

namespace detail {

// Q = ((1-s)/s) p/(1-p) and the resulting log(1 + sqrt(Q^2 - 1)).
inline double convex_j_from_q(double q)
{
    if (std::isinf(q)) return inf;
    if (q < 1.0 - 1e-12) throw bound_undefined_error("bound_convex_j: Q < 1, this s carries no information");
    q = std::max(q, 1.0);
    return std::log1p(std::sqrt((q - 1.0) * (q + 1.0)));
}

} // namespace detail

/// Convex-domain bound j_D(x, f(x)) <= log(1 + sqrt(Q^2 - 1)),
/// Q = ((1-s)/s) phi_{K,n}(s) / (1 - phi_{K,n}(s)). s = 1/3 is the stated theorem.
inline BoundValue bound_convex_j(Dimension n, Dilatation k, double s = 1.0 / 3.0)
{
    require_at_least_one(k, "bound_convex_j");
    detail::require(s > 0.0 && s < 1.0, "bound_convex_j: s must lie in (0, 1)");
    if (k.value() == 1.0) return BoundValue{0.0};
    const RealInterval p = phi_upper_family(k, n, s);
    const double ratio = (1.0 - s) / s;
    auto q = [ratio](double v) { return v >= 1.0 ? inf : ratio * v / (1.0 - v); };
    return p.map_increasing([&](double v) { return detail::convex_j_from_q(q(v)); });
}

/// K_n = (1 + log 2 / (n - 1 + log 3))^{n-1}, upper end of the small-K range.
inline double k_threshold(Dimension n)
{
    const double m = n.value() - 1.0;
    return std::pow(1.0 + std::log(2.0) / (m + std::log(3.0)), m);
}

/// Small-K convex bound j_D(x, f(x)) <= 2 sqrt(1 + log 6) sqrt(K - 1), K in (1, K_n].
inline double bound_convex_small_k(Dimension n, Dilatation k)
{
    const double kv = k.value();
    if (!(kv > 1.0) || kv > k_threshold(n))
        throw validity_range_error("bound_convex_small_k: stated only for K in (1, K_n], K_n = " +
                                   std::to_string(k_threshold(n)));
    return 2.0 * std::sqrt(1.0 + std::log(6.0)) * std::sqrt(kv - 1.0);
}

/// Unit-ball small-K quasihyperbolic bound 4 sqrt(1 + log 6) sqrt(K - 1).
inline double bound_ball_small_k(Dimension n, Dilatation k) { return 2.0 * bound_convex_small_k(n, k); }

/// Bounded-domain bound |f(x) - x| <= diam tanh(log((1-b)/b) / 2), b = phi_{1/K,n}(1/2).
inline BoundValue bound_bounded_domain(Dimension n, Dilatation k, double diam)
{
    require_at_least_one(k, "bound_bounded_domain");
    detail::require(diam > 0.0, "bound_bounded_domain: diameter must be positive");
    const RealInterval rho = bound_vz(n, k);
    return diam * rho.map_increasing([](double v) { return std::tanh(0.5 * v); });
}

/// Bounded convex domains: k_D(x, f(x)) <= U * bound_convex_j(n, K, 1/3).
inline BoundValue bound_convex_kd(Dimension n, Dilatation k, double uniformity)
{
    detail::require(uniformity >= 1.0, "bound_convex_kd: uniformity constant must be >= 1");
    return uniformity * bound_convex_j(n, k, 1.0 / 3.0);
}

/// Surface area omega_{n-1} of the unit sphere in R^n.
inline double unit_sphere_area(Dimension n)
{
    const double h = 0.5 * n.value();
    return 2.0 * std::pow(pi, h) / std::tgamma(h);
}

/// Lower bound K >= c_2 k_D(x, f(x))^n for uniform domains with uniformly perfect boundary,
/// c_2 = min{d_n (2U)^{-n}, (2 n U log(1 + 2 e^s))^{-n}}, d_n = C (n-1)^{n-1} / (omega_{n-1} n^n).
/// The Aseev constant C = C(n, s) has no known closed form and is supplied by the caller.
inline double lower_bound_K_uniform(Dimension n, double uniformity, double s, double aseev_c, double k_dist)
{
    detail::require(uniformity >= 1.0, "lower_bound_K_uniform: uniformity constant must be >= 1");
    detail::require(s > 0.0, "lower_bound_K_uniform: uniform perfectness constant must be positive");
    detail::require(aseev_c > 0.0, "lower_bound_K_uniform: Aseev constant must be positive");
    detail::require(k_dist >= 0.0, "lower_bound_K_uniform: distance must be nonnegative");
    const double nn = n.value();
    const double dn = aseev_c * std::pow(nn - 1.0, nn - 1.0) / (unit_sphere_area(n) * std::pow(nn, nn));
    const double c2 = std::min(dn * std::pow(2.0 * uniformity, -nn),
                               std::pow(2.0 * nn * uniformity * std::log1p(2.0 * std::exp(s)), -nn));
    return c2 * std::pow(k_dist, nn);
}

/// A(R) = (R + 1/R) / (R - 1/R)^alpha, R > 1.
inline double holder_a(double alpha, double radius)
{
    detail::require(radius > 1.0, "holder_a: requires R > 1");
    return (radius + 1.0 / radius) / std::pow(radius - 1.0 / radius, alpha);
}

/// C(alpha) = 2^{1-a} a^{-a/2} (1-a)^{(a-1)/2} = min over R > 1 of A(R); C(1) = 1.
inline double holder_c(double alpha)
{
    detail::require(alpha > 0.0 && alpha <= 1.0, "holder_c: alpha must lie in (0, 1]");
    if (alpha == 1.0) return 1.0;
    return std::pow(2.0, 1.0 - alpha) * std::pow(alpha, -0.5 * alpha) * std::pow(1.0 - alpha, 0.5 * (alpha - 1.0));
}

struct HolderConstants {
    double alpha;
    double c_alpha;
    RealInterval m1; ///< lambda_n^{1-alpha} C(alpha)
    RealInterval m2; ///< M1^{1/alpha}
    double r0;       ///< minimizer of A(R); +inf at K = 1
};

inline HolderConstants holder_constants(Dimension n, Dilatation k)
{
    require_at_least_one(k, "holder_constants");
    HolderConstants h{};
    h.alpha = k.alpha(n);
    h.c_alpha = holder_c(h.alpha);
    const RealInterval lam = lambda_bounds(n);
    const double e = 1.0 - h.alpha;
    h.m1 = {std::pow(lam.lo, e) * h.c_alpha, std::pow(lam.hi, e) * h.c_alpha};
    h.m2 = h.m1.map_increasing([&](double v) { return std::pow(v, 1.0 / h.alpha); });
    const double sa = std::sqrt(h.alpha);
    h.r0 = h.alpha == 1.0 ? inf : std::sqrt((1.0 + sa) / (1.0 - sa));
    return h;
}

struct MoriConstants {
    double fv;                ///< Fehlmann-Vuorinen
    std::optional<double> bv; ///< Bhayo-Vuorinen, only for K < 4/3
    double conjecture;        ///< 16^{1-1/K}
};

inline constexpr double bv_validity_limit = 4.0 / 3.0;

/// Fehlmann-Vuorinen planar constant (1 + phi_{K,2}((K^2-1)/(K^2+1))) 2^{2K-3/K}
/// (K^2+1)^{(K+1/K)/2} / (K^2-1)^{(K-1/K)/2}.
inline double mori_fv(Dilatation k)
{
    const double kv = k.value();
    detail::require(kv > 1.0, "mori_fv: requires K > 1");
    const double k2 = kv * kv;
    const double p = phi2(k, (k2 - 1.0) / (k2 + 1.0));
    return (1.0 + p) * std::pow(2.0, 2.0 * kv - 3.0 / kv) * std::pow(k2 + 1.0, 0.5 * (kv + 1.0 / kv)) /
           std::pow(k2 - 1.0, 0.5 * (kv - 1.0 / kv));
}

/// Bhayo-Vuorinen planar constant 3^{1-1/K^2} 4^{1-1/K-1/K^2} K^2 (K^2-1)^{1/K^2-1}, K in (1, 4/3).
inline double mori_bv(Dilatation k)
{
    const double kv = k.value();
    if (!(kv > 1.0) || kv >= bv_validity_limit)
        throw validity_range_error("mori_bv: stated only for K in (1, 4/3)");
    const double k2 = kv * kv;
    const double ik2 = 1.0 / k2;
    return std::pow(3.0, 1.0 - ik2) * std::pow(4.0, 1.0 - 1.0 / kv - ik2) * k2 * std::pow(k2 - 1.0, ik2 - 1.0);
}

inline double mori_conjecture(Dilatation k) { return std::pow(16.0, 1.0 - 1.0 / k.value()); }

/// The three planar constants; bv is empty outside its validity range.
inline MoriConstants mori_constants(Dilatation k)
{
    detail::require(k.value() > 1.0, "mori_constants: requires K > 1");
    MoriConstants m{};
    m.fv = mori_fv(k);
    if (k.value() < bv_validity_limit) m.bv = mori_bv(k);
    m.conjecture = mori_conjecture(k);
    return m;
}

namespace detail {

inline double axis_fixed_constant(double beta, double lam_pos, double lam_neg)
{
    const double bm = beta - 1.0;
    return std::pow(lam_pos, 2.0 * bm) * std::pow(beta, beta) / std::pow(bm, bm) -
           std::pow(lam_neg, -2.0 * bm) * std::pow(bm, beta + 1.0) / (4.0 * std::pow(beta, beta));
}

} // namespace detail

/// Maps fixing the x_1-axis pointwise: |f(x)| <= c |x| with
/// c = lambda^{2b-2} b^b/(b-1)^{b-1} - lambda^{2-2b} (b-1)^{b+1}/(4 b^b), b = K^{1/(n-1)}.
/// The constant is increasing in lambda, so the bracket pairs lambda.lo and lambda.hi
/// across both occurrences. Tends to 1 as K -> 1.
inline RealInterval bound_axis_fixed(Dimension n, Dilatation k, double lambda_lo, double lambda_hi)
{
    require_at_least_one(k, "bound_axis_fixed");
    if (k.value() - 1.0 < limit_switch) return RealInterval{1.0};
    const double b = k.beta(n);
    return {detail::axis_fixed_constant(b, lambda_lo, lambda_lo), detail::axis_fixed_constant(b, lambda_hi, lambda_hi)};
}

inline RealInterval bound_axis_fixed(Dimension n, Dilatation k)
{
    const RealInterval lam = lambda_bounds(n);
    return bound_axis_fixed(n, k, lam.lo, lam.hi);
}

/// h_1(t) = log^2(1+t) / log(1+t^2); h_1(0+) = 1, minimum at t = 1.
inline double h1(double t)
{
    detail::require(t > 0.0, "h1: requires t > 0");
    const double l = std::log1p(t);
    const double d = std::log1p(t * t);
    if (d == 0.0) return 1.0;
    return l * l / d;
}

/// Planar convex bound sqrt(2 log 12) sqrt(K - 1/K).
inline double planar_remark_bound(Dilatation k)
{
    require_at_least_one(k, "planar_remark_bound");
    const double kv = k.value();
    return std::sqrt(2.0 * std::log(12.0)) * std::sqrt(kv - 1.0 / kv);
}

/// Largest K with 2 phi_{K,2}(1/3) / (1 - phi_{K,2}(1/3)) <= 4, i.e. mu(1/3) / mu(2/3).
/// planar_remark_bound dominates the planar convex bound on (1, this value].
inline double planar_remark_limit() { return mu(1.0 / 3.0) / mu(2.0 / 3.0); }

/// Uniformly perfect plane domains: j_D <= k_D <= C(D) rho_D <= C(D) Kr(K).
inline double bound_planar_uniformly_perfect(Dilatation k, double c_d)
{
    detail::require(c_d >= 1.0, "bound_planar_uniformly_perfect: C(D) must be >= 1");
    return c_d * bound_krzyz(k);
}

} // namespace qcb
