#pragma once

// Test-map harness and check suites. Radial stretches x -> |x|^{a-1} x are
// genuine K-quasiconformal self-maps of the unit ball fixing the sphere,
// K = max(a, 1/a)^{n-1}; every theorem bound is checked against them.
// Reports and figure tables are assembled in deterministic grid order.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qcb/core.hpp"
#include "qcb/distortion_bounds.hpp"
#include "qcb/metrics.hpp"
#include "qcb/ring_invariants.hpp"
#include "qcb/special_functions.hpp"

namespace qcb {

// ---------------------------------------------------------------------------
// Formatting

/// Shortest locale-independent decimal with `precision` significant digits.
inline std::string format_double(double v, int precision = 15)
{
    if (precision < 1 || precision > 17) throw domain_error("precision must lie in [1, 17]");
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return {buf, res.ptr};
}

// ---------------------------------------------------------------------------
// Test maps

class RadialStretch {
public:
    RadialStretch(double a, Dimension n) : a_(a), n_(n)
    {
        if (!(a > 0.0) || !std::isfinite(a)) throw domain_error("radial stretch exponent must be positive");
    }

    /// The stretch realizing dilatation K >= 1; `expanding` picks a > 1 (else a < 1).
    static RadialStretch realizing(Dilatation k, Dimension n, bool expanding = true)
    {
        require_at_least_one(k, "RadialStretch::realizing");
        const double a = k.beta(n);
        return {expanding ? a : 1.0 / a, n};
    }

    [[nodiscard]] double exponent() const noexcept { return a_; }
    [[nodiscard]] Dimension dimension() const noexcept { return n_; }
    [[nodiscard]] double dilatation() const { return std::pow(std::max(a_, 1.0 / a_), n_.value() - 1.0); }

    [[nodiscard]] Point apply(const Point& x) const
    {
        if (x.dim() != n_.value()) throw domain_error("radial_apply: dimension mismatch");
        const double r = x.norm();
        if (r == 0.0) {
            if (a_ < 1.0) throw domain_error("radial_apply: origin is singular for a < 1");
            return x;
        }
        if (a_ == 1.0 || r == 1.0) return x;
        return std::pow(r, a_ - 1.0) * x;
    }

private:
    double a_;
    Dimension n_;
};

inline Point radial_apply(const RadialStretch& m, const Point& x) { return m.apply(x); }

// ---------------------------------------------------------------------------
// Reports

struct CheckResult {
    std::string id;
    bool pass = true;
    /// Largest excess lhs - rhs over the grid (|lhs - rhs| for identities);
    /// the check passes when it stays within the tolerance.
    double max_slack = -inf;
    std::optional<std::string> witness;
    std::size_t evaluations = 0;
    /// Reported but excluded from all_pass(); used for figure-based comparisons.
    bool advisory = false;
};

struct Report {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass && !c.advisory) return false;
        return true;
    }
    [[nodiscard]] std::size_t violations() const
    {
        std::size_t v = 0;
        for (const auto& c : checks) v += c.pass || c.advisory ? 0 : 1;
        return v;
    }
    [[nodiscard]] const CheckResult* find(const std::string& id) const
    {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
    void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

/// One line per check: `PASS|FAIL <id> max-slack=<v> [witness=<point>]`.
inline void write_report(std::ostream& os, const Report& r, int precision = 15)
{
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << " max-slack=" << format_double(c.max_slack, precision);
        if (!c.pass && c.witness) os << " witness=" << *c.witness;
        os << '\n';
    }
}

/// Accumulates excess values for one check id.
class Check {
public:
    Check(std::string id, double tol, bool advisory = false) : tol_(tol)
    {
        res_.id = std::move(id);
        res_.advisory = advisory;
    }

    /// Records the inequality lhs <= rhs at `where`.
    void le(double lhs, double rhs, const std::string& where) { record(lhs - rhs, where); }
    /// Records the identity lhs == rhs at `where`.
    void eq(double lhs, double rhs, const std::string& where) { record(std::abs(lhs - rhs), where); }

    void record(double excess, const std::string& where)
    {
        ++res_.evaluations;
        if (std::isnan(excess)) excess = inf;
        if (excess > res_.max_slack) {
            res_.max_slack = excess;
            if (excess > tol_) res_.witness = where;
        }
        if (excess > tol_) res_.pass = false;
    }

    [[nodiscard]] CheckResult result() const { return res_; }

private:
    double tol_;
    CheckResult res_;
};

// ---------------------------------------------------------------------------
// Grids

inline constexpr std::uint64_t default_seed = 20120901;

inline std::vector<double> default_stretch_exponents() { return {1.05, 1.1, 1.25, 1.5, 2.0, 3.0}; }

inline std::vector<double> linspace(double a, double b, int m)
{
    if (m < 2) throw domain_error("linspace needs at least 2 points");
    std::vector<double> v;
    for (int i = 0; i < m; ++i) v.push_back(i == m - 1 ? b : a + (b - a) * i / (m - 1));
    return v;
}

inline std::vector<double> logspace(double a, double b, int m)
{
    if (!(a > 0.0 && b > 0.0)) throw domain_error("logspace needs positive endpoints");
    auto e = linspace(std::log(a), std::log(b), m);
    for (auto& x : e) x = std::exp(x);
    e.front() = a;
    e.back() = b;
    return e;
}

inline Point random_direction(Dimension n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        std::vector<double> c(static_cast<std::size_t>(n.value()));
        for (auto& v : c) v = g(rng);
        Point p(std::move(c));
        const double r = p.norm();
        if (r > 1e-6) return (1.0 / r) * p;
    }
}

/// Uniform sample from the ball of radius `radius`.
inline Point random_ball_point(Dimension n, std::mt19937_64& rng, double radius = 1.0)
{
    std::uniform_real_distribution<double> u(-radius, radius);
    for (;;) {
        std::vector<double> c(static_cast<std::size_t>(n.value()));
        for (auto& v : c) v = u(rng);
        Point p(std::move(c));
        if (p.norm() < radius) return p;
    }
}

/// Radii 0.1, ..., 0.9 times `directions` seeded random directions.
inline std::vector<Point> default_ball_points(Dimension n, int directions = 8, std::uint64_t seed = default_seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Point> dirs;
    for (int i = 0; i < directions; ++i) dirs.push_back(random_direction(n, rng));
    std::vector<Point> pts;
    for (int i = 1; i <= 9; ++i)
        for (const auto& d : dirs) pts.push_back((0.1 * i) * d);
    return pts;
}

inline std::vector<std::pair<Point, Point>> random_ball_pairs(Dimension n, int count, std::uint64_t seed = default_seed,
                                                               double radius = 1.0)
{
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Point, Point>> out;
    for (int i = 0; i < count; ++i) {
        Point x = random_ball_point(n, rng, radius);
        Point y = random_ball_point(n, rng, radius);
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem checks against radial stretches

inline constexpr double default_metric_tolerance = 1e-9;

/// Ball theorems at every (a, x): the three rho bounds, Krzyz's planar bound,
/// the bounded-domain bound with diam = 2, and the convex j / k bounds.
inline Report verify_ball_theorem(Dimension n, const std::vector<double>& a_grid, const std::vector<Point>& points,
                                  double tol = default_metric_tolerance)
{
    if (a_grid.empty() || points.empty()) throw domain_error("verify_ball_theorem: grids must be nonempty");
    for (const auto& x : points) {
        if (x.dim() != n.value()) throw domain_error("verify_ball_theorem: point dimension mismatch");
        const double r = x.norm();
        if (!(r > 0.0 && r < 1.0)) throw domain_error("verify_ball_theorem: points must be nonzero and inside the ball");
    }
    const std::string tag = ".n" + std::to_string(n.value());
    Check vz("ball.vz" + tag, tol), mv("ball.mv" + tag, tol), alt("ball.vz_alt" + tag, tol);
    Check bdd("bounded_domain" + tag, tol), cj("convex_j" + tag, tol), ckd("convex_kd" + tag, tol);
    Check skj("convex_small_k" + tag, tol);
    Check kr("ball.krzyz", tol);
    const DomainSpec ball = UnitBall{};
    for (double a : a_grid) {
        const RadialStretch f(a, n);
        const double k = f.dilatation();
        const double b_vz = bound_vz(n, k).hi, b_mv = bound_mv(n, k).hi, b_alt = bound_vz_alt(n, k).hi;
        const double b_bdd = bound_bounded_domain(n, k, 2.0).hi;
        const double b_cj = bound_convex_j(n, k).hi;
        const double b_kd = bound_convex_kd(n, k, 2.0).hi;
        const bool small_k = k > 1.0 && k <= k_threshold(n);
        for (const auto& x : points) {
            const Point fx = f.apply(x);
            const std::string where = "a=" + format_double(a, 6) + ",x=" + x.str();
            const double rho = rho_ball(x, fx);
            vz.le(rho, b_vz, where);
            mv.le(rho, b_mv, where);
            alt.le(rho, b_alt, where);
            if (n.value() == 2 && k > 1.0) kr.le(rho, bound_krzyz(k), where);
            bdd.le(distance(x, fx), b_bdd, where);
            const double j = j_metric(ball, x, fx);
            cj.le(j, b_cj, where);
            if (small_k) skj.le(j, bound_convex_small_k(n, k), where);
            if (std::isfinite(b_kd)) ckd.le(k_numeric(ball, x, fx, 8, 20), b_kd, where);
            else ckd.record(-inf, where);
        }
    }
    Report r;
    for (const auto* c : {&vz, &mv, &alt, &bdd, &cj, &ckd, &skj}) r.checks.push_back(c->result());
    if (n.value() == 2) r.checks.push_back(kr.result());
    return r;
}

struct PuncturedExample {
    double a;
    double b;
    double k_computed;
    double k_expected; ///< 1/epsilon
    double x0_norm;
    double fx0_norm;
};

/// The radial stretch a = (1+eps)^{1/(n-1)} on the punctured ball with
/// x0 = e^{-b} e_1, b = 1/(eps (a-1)): k(x0, f(x0)) = (a-1) b = 1/eps.
inline PuncturedExample punctured_example(double eps, Dimension n)
{
    if (!(eps > 0.0 && eps < 1.0)) throw domain_error("punctured_example: epsilon must lie in (0, 1)");
    PuncturedExample ex{};
    ex.a = std::pow(1.0 + eps, 1.0 / (n.value() - 1.0));
    ex.b = 1.0 / (eps * (ex.a - 1.0));
    if (!(ex.b > std::log(2.0)))
        throw validity_range_error("punctured_example: b <= log 2, outside the regime |x0|, |f(x0)| < 1/2");
    const Point x0 = Point::axis(n, 0, std::exp(-ex.b));
    if (!(x0.norm() > 0.0)) throw validity_range_error("punctured_example: e^{-b} underflows for this epsilon");
    const Point fx0 = RadialStretch(ex.a, n).apply(x0);
    if (!(fx0.norm() > 0.0)) throw validity_range_error("punctured_example: f(x0) underflows for this epsilon");
    ex.x0_norm = x0.norm();
    ex.fx0_norm = fx0.norm();
    ex.k_computed = k_exact(PuncturedSpace{}, x0, fx0);
    ex.k_expected = 1.0 / eps;
    return ex;
}

inline Report verify_punctured_example(double eps, Dimension n, double tol = default_metric_tolerance)
{
    const std::string tag = ".eps" + format_double(eps, 6) + ".n" + std::to_string(n.value());
    Check k("punctured.k" + tag, tol), regime("punctured.regime" + tag, 0.0), ray("punctured.ray" + tag, tol);
    try {
        const auto ex = punctured_example(eps, n);
        k.eq(ex.k_computed, ex.k_expected, "eps=" + format_double(eps, 6));
        regime.le(std::max(ex.x0_norm, ex.fx0_norm), 0.5 - std::numeric_limits<double>::min(), "x0");
        ray.eq(std::log(ex.x0_norm / ex.fx0_norm), (ex.a - 1.0) * ex.b, "x0");
    } catch (const validity_range_error& e) {
        regime.record(inf, e.what());
    }
    return {{k.result(), regime.result(), ray.result()}};
}

/// Hoelder continuity |f(x)-f(y)| <= M1 |x-y|^alpha and the two-sided corollary
/// with M2 = M1^{1/alpha}, for both stretches realizing each K.
inline Report verify_holder(Dimension n, const std::vector<double>& k_grid,
                            const std::vector<std::pair<Point, Point>>& pairs, double tol = default_metric_tolerance)
{
    const std::string tag = ".n" + std::to_string(n.value());
    Check m1("holder.m1" + tag, tol), m2u("holder.m2_upper" + tag, tol), m2l("holder.m2_lower" + tag, tol);
    for (double kv : k_grid) {
        const auto h = holder_constants(n, kv);
        for (bool expanding : {true, false}) {
            const auto f = RadialStretch::realizing(kv, n, expanding);
            for (const auto& [x, y] : pairs) {
                const double d = distance(x, y);
                const double df = distance(f.apply(x), f.apply(y));
                const std::string where = "K=" + format_double(kv, 6) + ",a=" + format_double(f.exponent(), 6) +
                                          ",x=" + x.str() + ",y=" + y.str();
                m1.le(df, h.m1.hi * std::pow(d, h.alpha), where);
                m2u.le(df, h.m2.hi * std::pow(d, h.alpha), where);
                m2l.le(std::pow(d, 1.0 / h.alpha) / h.m2.hi, df, where);
            }
        }
    }
    return {{m1.result(), m2u.result(), m2l.result()}};
}

// ---------------------------------------------------------------------------
// Identity suite

inline constexpr double default_identity_tolerance = 1e-10;

/// Planar identities and inequalities of phi_{K,2}, mu and h_1 over fixed grids.
inline Report verify_identity_suite(double tol = default_identity_tolerance)
{
    if (!(tol > 0.0)) throw domain_error("verify_identity_suite: tolerance must be positive");
    const std::vector<double> ks{1.0, 1.1, 1.5, 2.0, 5.0};
    const std::vector<double> rs = linspace(0.1, 0.9, 9);
    const std::vector<double> ps = linspace(0.1, 0.9, 9);
    auto at = [](double k, double r) { return "K=" + format_double(k, 6) + ",r=" + format_double(r, 6); };

    Check reciprocal("identity.mu_reciprocal", tol), roundtrip("identity.mu_roundtrip", tol);
    for (double r : linspace(0.05, 0.95, 19)) {
        reciprocal.eq(mu(r) * mu(complement(r)), 0.25 * pi * pi, "r=" + format_double(r, 6));
        roundtrip.eq(mu_inv(mu(r)), r, "r=" + format_double(r, 6));
    }

    Check compl_id("identity.phi_complement", tol), submult("identity.phi_submultiplicative", tol);
    Check am("identity.phi_am_inequality", tol), bracket("identity.bd4phi_chain", tol);
    Check bracket2("identity.bd4phi2_chain", tol), lower("identity.one_minus_phi_lower", tol);
    Check sound("identity.interval_soundness", tol), inverse("identity.phi_inverse_pair", tol);
    for (double k : ks) {
        const double a = 1.0 / k; // alpha for n = 2
        for (double r : rs) {
            const double pk = phi2(k, r);
            compl_id.eq(phi2(1.0 / k, (1.0 - r) / (1.0 + r)), (1.0 - pk) / (1.0 + pk), at(k, r));
            inverse.eq(phi2(k, phi2(1.0 / k, r)), r, at(k, r));
            for (double p : ps) submult.le(phi2(1.0 / k, std::pow(r, p)), std::pow(phi2(1.0 / k, r), p), at(k, r));
            for (double s : rs) {
                auto amean = [](double u, double v) { return std::sqrt(0.5 * (u + v)); };
                am.le(amean(pk, phi2(k, s)), phi2(k, amean(r, s)), at(k, r) + ",s=" + format_double(s, 6));
            }
            const double ra = std::pow(r, a);
            bracket.le(ra, pk, at(k, r));
            bracket.le(pk, std::pow(4.0, 1.0 - a) * ra, at(k, r));
            bracket.le(std::pow(4.0, 1.0 - a) * ra, std::pow(2.0, 1.0 - 1.0 / k) * k * ra, at(k, r));
            const double rb = std::pow(r, k);
            const double pinv = phi2(1.0 / k, r);
            bracket2.le(std::pow(2.0, 1.0 - k) * std::pow(k, -k) * rb, std::pow(4.0, 1.0 - k) * rb, at(k, r));
            bracket2.le(std::pow(4.0, 1.0 - k) * rb, pinv, at(k, r));
            bracket2.le(pinv, rb, at(k, r));
            if (k > 1.0) {
                const double mid = std::pow(4.0, 1.0 - k) * std::pow(1.0 + r, 1.0 - k) * std::pow(1.0 - r, k);
                lower.le(mid, 1.0 - pk, at(k, r));
                lower.le(std::pow(8.0, 1.0 - k) * std::pow(1.0 - r, k), mid, at(k, r));
            }
            const auto up = phi_upper_bracket(k, 2, r, RealInterval{4.0});
            const auto lo = phi_lower_bracket(k, 2, r, RealInterval{4.0});
            sound.record(up.contains(pk) ? -1.0 : std::min(std::abs(pk - up.lo), std::abs(pk - up.hi)), at(k, r));
            sound.record(lo.contains(pinv) ? -1.0 : std::min(std::abs(pinv - lo.lo), std::abs(pinv - lo.hi)), at(k, r));
        }
    }

    Check h1_shape("identity.h1_monotone", 0.0), bern("identity.log_square_le_log", 0.0);
    Check h1_min("identity.h1_minimum_at_one", 0.0);
    {
        const auto ts = logspace(1e-3, 1e3, 601);
        double best = inf, best_t = 0.0;
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            const double t0 = ts[i], t1 = ts[i + 1];
            const std::string where = "t=" + format_double(t0, 6);
            if (t1 <= 1.0) h1_shape.le(h1(t1), h1(t0), where);
            else if (t0 >= 1.0) h1_shape.le(h1(t0), h1(t1), where);
            if (h1(t0) < best) best = h1(t0), best_t = t0;
        }
        // Grid ratio between neighbours is 10^{6/600}; the minimizer must be one of the two around 1.
        h1_min.le(std::abs(std::log(best_t)), std::log(std::pow(10.0, 0.01)) + 1e-12, "t=" + format_double(best_t, 6));
        for (double t : linspace(1e-3, 1.0, 200)) {
            const double l = std::log1p(t);
            bern.le(l * l, std::log1p(t * t), "t=" + format_double(t, 6));
        }
    }

    Check planar("identity.vz_forms_planar", tol), remark("identity.planar_remark_bound", tol);
    Check smallk("identity.small_k_domination", tol);
    for (double k : logspace(1.01, 10.0, 32))
        planar.eq(bound_vz_alt(2, k).hi, bound_vz(2, k).hi, "K=" + format_double(k, 6));
    for (double k : linspace(1.0 + 1e-6, planar_remark_limit(), 32))
        remark.le(bound_convex_j(2, k).hi, planar_remark_bound(k), "K=" + format_double(k, 6));
    for (double k : linspace(1.0 + 1e-6, k_threshold(2), 32))
        smallk.le(bound_convex_j(2, k).hi, bound_convex_small_k(2, k), "K=" + format_double(k, 6));

    Report rep;
    for (const auto* c : {&reciprocal, &roundtrip, &compl_id, &inverse, &submult, &am, &bracket, &bracket2, &lower,
                          &sound, &h1_shape, &h1_min, &bern, &planar, &remark, &smallk})
        rep.checks.push_back(c->result());
    return rep;
}

// ---------------------------------------------------------------------------
// Metric suite

/// Quasihyperbolic distance between antipodal points of the unit circle around
/// the x_1-axis in R^3 minus that axis, by quadrature of the density 1/dist(axis)
/// along the half circle. Equals pi.
inline double rotation_example_length(int nodes = 1024)
{
    double total = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double t0 = pi * i / nodes, t1 = pi * (i + 1) / nodes, tm = 0.5 * (t0 + t1);
        const Point z{0.0, std::cos(tm), std::sin(tm)};
        const double axis_dist = std::hypot(z[1], z[2]);
        total += (t1 - t0) / axis_dist;
    }
    return total;
}

inline Report verify_metrics_suite(double tol = default_metric_tolerance, std::uint64_t seed = default_seed)
{
    const DomainSpec ball = UnitBall{};
    Check jk_ball("metrics.j_le_k.ball", 1e-6), jk_punct("metrics.j_le_k.punctured", 1e-6);
    Check jk_half("metrics.j_le_k.halfspace", 1e-6), jk_poly("metrics.j_le_k.polytope", 1e-6);
    Check uniform("metrics.ball_uniformity", 1e-3), sandwich("metrics.hyperbolic_sandwich", tol);
    Check chord("metrics.chord_bound", tol), chord_eq("metrics.chord_equality", 1e-10);
    Check mob("metrics.mobius_invariance", 1e-10), mob_zero("metrics.mobius_base_to_zero", 1e-12);
    Check refine("metrics.k_refinement_monotone", 1e-9), center("metrics.k_center_log2", 1e-3);
    Check rotation("metrics.rotation_example", 1e-6);

    for (int n : {2, 3}) {
        const auto pairs = random_ball_pairs(n, 25, seed + static_cast<std::uint64_t>(n), 0.95);
        for (const auto& [x, y] : pairs) {
            const std::string where = "x=" + x.str() + ",y=" + y.str();
            const double j = j_metric(ball, x, y);
            const double k = k_numeric(ball, x, y, 64, 60);
            jk_ball.le(j, k, where);
            uniform.le(k, 2.0 * j, where);
            const double rho = rho_ball(x, y);
            const double d = distance(x, y), nx = x.norm(), ny = y.norm();
            sandwich.le(d / (1.0 + nx * ny), std::tanh(0.5 * rho), where);
            sandwich.le(std::tanh(0.5 * rho), d / (1.0 - nx * ny), where);
            chord.le(d, 2.0 * std::tanh(0.25 * rho), where);
            chord_eq.eq(distance(x, -x), 2.0 * std::tanh(0.25 * rho_ball(x, -x)), where);
            const auto m = mobius_to_zero(x);
            mob_zero.eq(m.apply(x).norm(), 0.0, where);
            mob.eq(rho_ball(m.apply(x), m.apply(y)), rho, where);
            mob.eq(rho_ball(m.apply_inverse(x), m.apply_inverse(y)), rho, where);
            const double k8 = k_numeric(ball, x, y, 8, 30), k16 = k_numeric(ball, x, y, 16, 30);
            refine.le(k16, k8, where);

            const Point xs = x + Point::axis(n, 0, 3.0), ys = y + Point::axis(n, 0, 1.5);
            jk_punct.le(j_metric(PuncturedSpace{}, xs, ys), k_exact(PuncturedSpace{}, xs, ys), where);
            const Point xh = x + Point::axis(n, n - 1, 1.0), yh = y + Point::axis(n, n - 1, 1.0);
            jk_half.le(j_metric(HalfSpace{}, xh, yh), k_exact(HalfSpace{}, xh, yh), where);
        }
        const auto poly = ConvexPolytope::box(Point::zero(n) - Point(std::vector<double>(static_cast<std::size_t>(n), 1.0)),
                                              Point(std::vector<double>(static_cast<std::size_t>(n), 1.0)));
        for (const auto& [x, y] : random_ball_pairs(n, 10, seed + 17, 0.9)) {
            const DomainSpec dp = poly;
            jk_poly.le(j_metric(dp, x, y), k_numeric(dp, x, y, 32, 30), "x=" + x.str() + ",y=" + y.str());
        }
        center.eq(k_numeric(ball, Point::zero(n), Point::axis(n, 0, 0.5), 64, 40), std::log(2.0), "n=" + std::to_string(n));
    }
    rotation.eq(k_axis_complement(Point{0.0, 1.0, 0.0}, Point{0.0, -1.0, 0.0}), pi, "reduction");
    rotation.eq(rotation_example_length(), pi, "arc quadrature");

    Report rep;
    for (const auto* c : {&jk_ball, &jk_punct, &jk_half, &jk_poly, &uniform, &sandwich, &chord, &chord_eq, &mob,
                          &mob_zero, &refine, &center, &rotation})
        rep.checks.push_back(c->result());
    return rep;
}

// ---------------------------------------------------------------------------
// Figures

struct CurveTable {
    std::vector<std::string> columns; ///< value columns, K excluded; intervals as <name>_lo, <name>_hi
    struct Row {
        double k;
        std::vector<std::optional<double>> values;
    };
    std::vector<Row> rows;
};

enum class Figure { bound_comparison, mori_constants };

inline Figure parse_figure(const std::string& s)
{
    if (s == "fig3") return Figure::bound_comparison;
    if (s == "fig4") return Figure::mori_constants;
    throw domain_error("unknown figure '" + s + "' (expected fig3 or fig4)");
}

/// Figure data on a uniform K grid. fig3: MV, VZ (intervals) and Kr for n = 2.
/// fig4: logarithms of FV, BV (empty for K >= 4/3), 16^{1-1/K} and M_1(2, K).
inline CurveTable emit_figure(Figure fig, double k_min, double k_max, int steps)
{
    if (!(k_min > 1.0 && k_max > k_min && std::isfinite(k_max)))
        throw domain_error("emit_figure: requires 1 < k_min < k_max");
    if (steps < 2) throw domain_error("emit_figure: steps must be >= 2");
    CurveTable t;
    if (fig == Figure::bound_comparison) t.columns = {"MV_lo", "MV_hi", "VZ_lo", "VZ_hi", "Kr"};
    else t.columns = {"log_FV", "log_BV", "log_Mori", "log_M1_lo", "log_M1_hi"};
    for (double k : linspace(k_min, k_max, steps)) {
        CurveTable::Row row{k, {}};
        if (fig == Figure::bound_comparison) {
            const auto mvb = bound_mv(2, k), vzb = bound_vz(2, k);
            row.values = {mvb.lo, mvb.hi, vzb.lo, vzb.hi, bound_krzyz(k)};
        } else {
            const auto m = mori_constants(k);
            const auto h = holder_constants(2, k);
            std::optional<double> bv;
            if (m.bv) bv = std::log(*m.bv);
            row.values = {std::log(m.fv), bv, std::log(m.conjecture), std::log(h.m1.lo), std::log(h.m1.hi)};
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Header `K,<columns...>`, rows in increasing K, empty cells for undefined values,
/// no trailing delimiter, '\n' line terminator.
inline void write_csv(std::ostream& os, const CurveTable& t, int precision = 15)
{
    os << 'K';
    for (const auto& c : t.columns) os << ',' << c;
    os << '\n';
    for (const auto& row : t.rows) {
        os << format_double(row.k, precision);
        for (const auto& v : row.values) {
            os << ',';
            if (v) os << format_double(*v, precision);
        }
        os << '\n';
    }
}

// ---------------------------------------------------------------------------
// Aggregate suites

/// Ball theorems (n = 2, 3), Hoelder checks, the punctured-ball example, and
/// the figure orderings.
inline Report verify_theorem_suite(double tol = default_metric_tolerance)
{
    Report rep;
    for (int n : {2, 3}) {
        rep.append(verify_ball_theorem(n, default_stretch_exponents(), default_ball_points(n), tol));
        rep.append(verify_holder(n, {1.0, 1.2, 1.5, 2.0}, random_ball_pairs(n, 200, default_seed + 7), tol));
        for (double eps : {0.1, 0.25, 0.5}) rep.append(verify_punctured_example(eps, n, tol));
    }

    Check order("figure3.ordering", 1e-10), zero("figure3.zero_limit", 0.0);
    for (double k : logspace(1.01, 10.0, 64)) {
        const std::string where = "K=" + format_double(k, 6);
        const double kr = bound_krzyz(k), vz = bound_vz(2, k).hi, mv = bound_mv(2, k).hi;
        order.le(kr, vz, where);
        order.le(vz, mv, where);
    }
    {
        const double k = 1.0 + 1e-6;
        for (double v : {bound_krzyz(k), bound_vz(2, k).hi, bound_mv(2, k).hi}) zero.le(v, 1e-2, "K=1+1e-6");
    }
    Check fig4("figure4.conjecture_below_fv", 0.0), fig4_bv("advisory.figure4.bv_below_conjecture", 0.0, true);
    for (double k : linspace(1.01, 1.32, 32)) {
        const auto m = mori_constants(k);
        const std::string where = "K=" + format_double(k, 6);
        fig4_bv.le(std::log(*m.bv), std::log(m.conjecture), where);
        fig4.le(std::log(m.conjecture), std::log(m.fv), where);
    }
    Check axis("axis_fixed.limit", 1e-3), radius("holder.optimal_radius", 1e-9);
    axis.eq(bound_axis_fixed(2, 1.0 + 1e-8).hi, 1.0, "K=1+1e-8");
    for (auto [n, k] : {std::pair{2, 1.5}, std::pair{2, 3.0}, std::pair{3, 2.0}}) {
        const auto h = holder_constants(n, k);
        const double a0 = holder_a(h.alpha, h.r0);
        for (int i = 1; i <= 1000; ++i) {
            const double r = 1.0 + 99.0 * i / 1001.0;
            radius.le(a0, holder_a(h.alpha, r), "n=" + std::to_string(n) + ",K=" + format_double(k, 6));
        }
        radius.eq(a0, h.c_alpha, "C(alpha)");
    }
    for (const auto* c : {&order, &zero, &fig4, &fig4_bv, &axis, &radius}) rep.checks.push_back(c->result());
    return rep;
}

} // namespace qcb
