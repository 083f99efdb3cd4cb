#pragma once

// Hyperbolic metric of the unit ball, the distance-ratio metric, and the
// quasihyperbolic metric (closed forms where classical, a polyline
// minimizer otherwise), plus the Moebius self-map of the ball sending a
// given point to the origin.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qcb/core.hpp"

namespace qcb {

/// A point of R^n, n >= 2.
class Point {
public:
    explicit Point(std::vector<double> coords) : c_(std::move(coords))
    {
        if (c_.size() < 2) throw domain_error("point dimension must be at least 2");
    }
    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

    static Point zero(Dimension n) { return Point(std::vector<double>(static_cast<std::size_t>(n.value()), 0.0)); }

    /// k-th standard basis vector scaled by t (k is 0-based).
    static Point axis(Dimension n, int k, double t = 1.0)
    {
        auto p = zero(n);
        p.c_.at(static_cast<std::size_t>(k)) = t;
        return p;
    }

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(c_.size()); }
    [[nodiscard]] std::span<const double> coords() const noexcept { return c_; }
    double& operator[](std::size_t i) { return c_[i]; }
    double operator[](std::size_t i) const { return c_[i]; }

    [[nodiscard]] double dot(const Point& o) const
    {
        check_dims(o);
        return std::inner_product(c_.begin(), c_.end(), o.c_.begin(), 0.0);
    }
    [[nodiscard]] double norm2() const { return dot(*this); }
    [[nodiscard]] double norm() const
    {
        double scale = 0.0;
        for (double v : c_) scale = std::max(scale, std::abs(v));
        if (scale == 0.0 || !std::isfinite(scale)) return scale;
        double s = 0.0;
        for (double v : c_) s += (v / scale) * (v / scale);
        return scale * std::sqrt(s);
    }

    Point& operator+=(const Point& o)
    {
        check_dims(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Point& operator-=(const Point& o)
    {
        check_dims(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Point& operator*=(double s)
    {
        for (double& v : c_) v *= s;
        return *this;
    }

    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(double s, Point a) { return a *= s; }
    friend Point operator-(Point a) { return a *= -1.0; }
    friend bool operator==(const Point&, const Point&) = default;

    void check_dims(const Point& o) const
    {
        if (o.c_.size() != c_.size()) throw domain_error("points have different dimensions");
    }

    [[nodiscard]] std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ';';
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", c_[i]);
            s += buf;
        }
        return s + ")";
    }

private:
    std::vector<double> c_;
};

inline double distance(const Point& x, const Point& y) { return (x - y).norm(); }

// ---------------------------------------------------------------------------
// Domains

struct UnitBall {};
/// Upper half-space {x_n > 0}.
struct HalfSpace {};
/// R^n minus the origin.
struct PuncturedSpace {};

/// {x : <normal_i, x> < offset_i for all i}, normals of unit length.
class ConvexPolytope {
public:
    struct Face {
        Point normal;
        double offset;
    };

    /// `witness` must be an interior point; it certifies a nonempty interior.
    ConvexPolytope(std::vector<Face> faces, const Point& witness) : faces_(std::move(faces))
    {
        if (faces_.empty()) throw domain_error("polytope needs at least one face");
        for (const auto& f : faces_) {
            f.normal.check_dims(witness);
            if (std::abs(f.normal.norm() - 1.0) > 1e-9) throw domain_error("polytope face normals must be unit vectors");
        }
        if (!(slack(witness) > interior_margin)) throw domain_error("polytope witness is not an interior point");
    }

    /// Axis-aligned box [lo, hi] in each coordinate.
    static ConvexPolytope box(const Point& lo, const Point& hi)
    {
        lo.check_dims(hi);
        const int n = lo.dim();
        std::vector<Face> faces;
        for (int k = 0; k < n; ++k) {
            const auto i = static_cast<std::size_t>(k);
            faces.push_back({Point::axis(n, k, 1.0), hi[i]});
            faces.push_back({Point::axis(n, k, -1.0), -lo[i]});
        }
        return {std::move(faces), 0.5 * (lo + hi)};
    }

    /// min over faces of offset - <normal, x>; positive inside.
    [[nodiscard]] double slack(const Point& x) const
    {
        double s = inf;
        for (const auto& f : faces_) s = std::min(s, f.offset - f.normal.dot(x));
        return s;
    }

    [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }

    static constexpr double interior_margin = 1e-9;

private:
    std::vector<Face> faces_;
};

/// A bounded domain known only through its diameter.
struct BoundedDiameter {
    double diam;
    explicit BoundedDiameter(double d) : diam(d)
    {
        if (!(d > 0.0)) throw domain_error("domain diameter must be positive");
    }
};

using DomainSpec = std::variant<UnitBall, HalfSpace, PuncturedSpace, ConvexPolytope, BoundedDiameter>;

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline void require_in_ball(const Point& x, const char* what)
{
    if (!(x.norm() < 1.0)) throw domain_error(std::string(what) + ": point must lie in the open unit ball");
}

} // namespace detail

/// Euclidean distance d(x, boundary D).
inline double dist_boundary(const DomainSpec& d, const Point& x)
{
    const double v = std::visit(
        detail::overloaded{
            [&](const UnitBall&) { return 1.0 - x.norm(); },
            [&](const HalfSpace&) { return x[static_cast<std::size_t>(x.dim() - 1)]; },
            [&](const PuncturedSpace&) { return x.norm(); },
            [&](const ConvexPolytope& p) {
                const double s = p.slack(x);
                return s > ConvexPolytope::interior_margin ? s : -1.0;
            },
            [&](const BoundedDiameter&) -> double {
                throw unsupported_operation("dist_boundary: a BoundedDiameter domain carries only its diameter");
            }},
        d);
    if (!(v > 0.0)) throw domain_error("dist_boundary: point " + x.str() + " is not interior to the domain");
    return v;
}

/// Hyperbolic distance in the unit ball:
/// tanh^2(rho/2) = |x-y|^2 / (|x-y|^2 + (1-|x|^2)(1-|y|^2)).
inline double rho_ball(const Point& x, const Point& y)
{
    x.check_dims(y);
    detail::require_in_ball(x, "rho_ball");
    detail::require_in_ball(y, "rho_ball");
    const double d2 = (x - y).norm2();
    if (d2 == 0.0) return 0.0;
    const double nx = x.norm(), ny = y.norm();
    const double den = d2 + (1.0 - nx) * (1.0 + nx) * (1.0 - ny) * (1.0 + ny);
    return 2.0 * std::atanh(std::sqrt(d2 / den));
}

/// Distance-ratio metric log(1 + |x-y| / min(d(x), d(y))).
inline double j_metric(const DomainSpec& d, const Point& x, const Point& y)
{
    x.check_dims(y);
    const double m = std::min(dist_boundary(d, x), dist_boundary(d, y));
    return std::log1p(distance(x, y) / m);
}

/// Angle between two nonzero vectors via atan2(|rejection|, dot).
inline double angle_between(const Point& x, const Point& y)
{
    const double nx = x.norm();
    const Point u = (1.0 / nx) * x;
    const double along = u.dot(y);
    const Point rej = y - along * u;
    return std::atan2(rej.norm(), along);
}

/// Quasihyperbolic distance where a closed form is classical:
/// punctured space sqrt(theta^2 + log^2(|x|/|y|)), half-space arcosh(1 + |x-y|^2 / (2 x_n y_n)).
inline double k_exact(const DomainSpec& d, const Point& x, const Point& y)
{
    x.check_dims(y);
    return std::visit(
        detail::overloaded{
            [&](const PuncturedSpace&) {
                const double nx = dist_boundary(d, x), ny = dist_boundary(d, y);
                const double theta = angle_between(x, y);
                return std::hypot(theta, std::log(nx / ny));
            },
            [&](const HalfSpace&) {
                const double xn = dist_boundary(d, x), yn = dist_boundary(d, y);
                const double d2 = (x - y).norm2();
                // arcosh(1 + u) = log1p(u + sqrt(u (u + 2)))
                const double u = d2 / (2.0 * xn * yn);
                return std::log1p(u + std::sqrt(u * (u + 2.0)));
            },
            [&](const auto&) -> double {
                throw unsupported_operation("k_exact: closed form only for punctured space and half-space");
            }},
        d);
}

/// Quasihyperbolic distance in R^n minus the x_1-axis between points with equal
/// first coordinates. Motion along the axis only adds length, so the problem
/// reduces to the punctured (n-1)-space of the orthogonal components.
inline double k_axis_complement(const Point& x, const Point& y)
{
    x.check_dims(y);
    if (x.dim() < 3) throw domain_error("k_axis_complement: needs dimension >= 3");
    if (x[0] != y[0]) throw domain_error("k_axis_complement: points must share the first coordinate");
    auto drop = [](const Point& p) {
        return Point(std::vector<double>(p.coords().begin() + 1, p.coords().end()));
    };
    return k_exact(PuncturedSpace{}, drop(x), drop(y));
}

namespace detail {

inline bool supports_numeric_k(const DomainSpec& d)
{
    return std::holds_alternative<UnitBall>(d) || std::holds_alternative<ConvexPolytope>(d);
}

// Boundary distance, or +inf density (signalled by a non-positive value) outside.
inline double density_distance(const DomainSpec& d, const Point& z)
{
    if (std::holds_alternative<UnitBall>(d)) return 1.0 - z.norm();
    const double s = std::get<ConvexPolytope>(d).slack(z);
    return s > ConvexPolytope::interior_margin ? s : -1.0;
}

// Trapezoidal quasihyperbolic length of one segment.
inline double segment_length(const Point& a, double da, const Point& b, double db)
{
    if (da <= 0.0 || db <= 0.0) return inf;
    return distance(a, b) * 0.5 * (1.0 / da + 1.0 / db);
}

inline std::vector<int> refinement_chain(int segments)
{
    std::vector<int> chain;
    for (int s = segments;; s /= 2) {
        chain.push_back(s);
        if (s <= 1 || s % 2 != 0) break;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

} // namespace detail

/// Numerical quasihyperbolic distance for the unit ball and convex polytopes.
///
/// Minimizes the trapezoidal length sum |dz| (1/d(p_i) + 1/d(p_{i+1}))/2 over
/// polylines with `segments` pieces by coordinate descent on the interior
/// vertices (accept-only-improving moves, halving step). Even segment counts
/// are reached by successive midpoint subdivision of the optimum at half the
/// count, so doubling `segments` never lengthens the result. Since 1/d is
/// convex on convex domains the trapezoidal rule over-estimates each
/// segment, and the return value is an upper bound for k_D.
inline double k_numeric(const DomainSpec& d, const Point& x, const Point& y, int segments = 64, int rounds = 40)
{
    x.check_dims(y);
    if (!detail::supports_numeric_k(d))
        throw unsupported_operation("k_numeric: supported for the unit ball and convex polytopes only");
    if (segments < 1) throw domain_error("k_numeric: segments must be >= 1");
    if (rounds < 0) throw domain_error("k_numeric: rounds must be >= 0");
    const double dx = dist_boundary(d, x);
    const double dy = dist_boundary(d, y);
    if (x == y) return 0.0;

    const auto n = static_cast<std::size_t>(x.dim());
    std::vector<Point> path{x, y};
    std::vector<double> dens{dx, dy};

    for (int level : detail::refinement_chain(segments)) {
        // Subdivide the current path up to `level` segments.
        if (static_cast<int>(path.size()) - 1 != level) {
            std::vector<Point> next;
            if (path.size() == 2) {
                for (int i = 0; i <= level; ++i) {
                    const double t = static_cast<double>(i) / level;
                    next.push_back((1.0 - t) * x + t * y);
                }
            } else {
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    next.push_back(path[i]);
                    next.push_back(0.5 * (path[i] + path[i + 1]));
                }
                next.push_back(path.back());
            }
            next.front() = x;
            next.back() = y;
            path = std::move(next);
            dens.resize(path.size());
            for (std::size_t i = 0; i < path.size(); ++i) dens[i] = detail::density_distance(d, path[i]);
        }

        double step = 0.25 * distance(x, y) / level;
        for (int round = 0; round < rounds && path.size() > 2; ++round) {
            bool improved = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                for (std::size_t c = 0; c < n; ++c) {
                    const double before = detail::segment_length(path[i - 1], dens[i - 1], path[i], dens[i]) +
                                          detail::segment_length(path[i], dens[i], path[i + 1], dens[i + 1]);
                    for (double sign : {1.0, -1.0}) {
                        Point trial = path[i];
                        trial[c] += sign * step;
                        const double dt = detail::density_distance(d, trial);
                        const double after = detail::segment_length(path[i - 1], dens[i - 1], trial, dt) +
                                             detail::segment_length(trial, dt, path[i + 1], dens[i + 1]);
                        if (after < before) {
                            path[i] = std::move(trial);
                            dens[i] = dt;
                            improved = true;
                            break;
                        }
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
    }

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        total += detail::segment_length(path[i], dens[i], path[i + 1], dens[i + 1]);
    return total;
}

/// Moebius self-map of the unit ball sending `base` to the origin:
/// T(y) = ((1 - |a|^2)(y - a) - |y - a|^2 a) / (1 - 2<y,a> + |y|^2 |a|^2), inverse T_{-a}.
class MobiusBallMap {
public:
    explicit MobiusBallMap(Point base) : a_(std::move(base))
    {
        detail::require_in_ball(a_, "MobiusBallMap");
        a2_ = a_.norm2();
    }

    [[nodiscard]] const Point& base() const noexcept { return a_; }

    [[nodiscard]] Point apply(const Point& y) const { return map(a_, a2_, y); }
    [[nodiscard]] Point apply_inverse(const Point& y) const { return map(-a_, a2_, y); }

private:
    static Point map(const Point& a, double a2, const Point& y)
    {
        a.check_dims(y);
        detail::require_in_ball(y, "MobiusBallMap::apply");
        const Point diff = y - a;
        const double den = 1.0 - 2.0 * y.dot(a) + y.norm2() * a2;
        Point out = (1.0 - a2) * diff - diff.norm2() * a;
        out *= 1.0 / den;
        return out;
    }

    Point a_;
    double a2_;
};

inline MobiusBallMap mobius_to_zero(const Point& x) { return MobiusBallMap(x); }

} // namespace qcb
