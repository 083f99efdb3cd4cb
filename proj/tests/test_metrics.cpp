#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qcb/metrics.hpp"

using Catch::Approx;
using namespace qcb;

namespace {

Point random_in_ball(std::mt19937_64& rng, int n, double radius)
{
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = g(rng);
    Point p(c);
    const double r = radius * std::pow(u(rng), 1.0 / n);
    return (r / p.norm()) * p;
}

} // namespace

TEST_CASE("Point basics", "[metrics]")
{
    const Point a{3.0, 4.0};
    CHECK(a.dim() == 2);
    CHECK(a.norm() == 5.0);
    CHECK(a.dot(Point{1.0, 1.0}) == 7.0);
    CHECK((a - a).norm() == 0.0);
    CHECK(Point::axis(3, 1, 0.5)[1] == 0.5);
    CHECK(Point::zero(4).norm() == 0.0);
    CHECK(Point{1e200, 1e200}.norm() == Approx(std::sqrt(2.0) * 1e200));
    CHECK(a.str() == "(3;4)");
    CHECK_THROWS_AS(Point{1.0}, qcb::domain_error);
    CHECK_THROWS(a.dot(Point{1.0, 2.0, 3.0}));
}

TEST_CASE("dist_boundary", "[metrics]")
{
    const Point x{0.3, 0.4};
    CHECK(dist_boundary(UnitBall{}, x) == Approx(0.5));
    CHECK(dist_boundary(HalfSpace{}, x) == 0.4);
    CHECK(dist_boundary(PuncturedSpace{}, x) == Approx(0.5));
    const auto box = ConvexPolytope::box(Point{0.0, 0.0}, Point{2.0, 1.0});
    CHECK(dist_boundary(box, x) == Approx(0.3));
    CHECK_THROWS_AS(dist_boundary(UnitBall{}, Point{1.0, 0.0}), qcb::domain_error);
    CHECK_THROWS_AS(dist_boundary(HalfSpace{}, Point{1.0, -0.1}), qcb::domain_error);
    CHECK_THROWS_AS(dist_boundary(PuncturedSpace{}, Point{0.0, 0.0}), qcb::domain_error);
    CHECK_THROWS_AS(dist_boundary(BoundedDiameter{2.0}, x), qcb::unsupported_operation);
    CHECK_THROWS_AS(BoundedDiameter{0.0}, qcb::domain_error);
}

TEST_CASE("ConvexPolytope validation", "[metrics]")
{
    CHECK_THROWS_AS(ConvexPolytope::box(Point{1.0, 0.0}, Point{0.0, 1.0}), qcb::domain_error);
    std::vector<ConvexPolytope::Face> faces{{Point{2.0, 0.0}, 1.0}};
    CHECK_THROWS_AS(ConvexPolytope(faces, Point{0.0, 0.0}), qcb::domain_error);
    std::vector<ConvexPolytope::Face> half{{Point{1.0, 0.0}, 1.0}};
    CHECK_THROWS_AS(ConvexPolytope(half, Point{2.0, 0.0}), qcb::domain_error);
}

TEST_CASE("rho_ball", "[metrics]")
{
    const Point o = Point::zero(2);
    for (double r : {0.1, 0.5, 0.9, 0.999})
        CHECK(rho_ball(o, Point{r, 0.0}) == Approx(std::log((1 + r) / (1 - r))).epsilon(1e-12));
    CHECK(rho_ball(o, o) == 0.0);
    const Point x{0.2, -0.3}, y{-0.5, 0.1};
    CHECK(rho_ball(x, y) == Approx(rho_ball(y, x)).epsilon(1e-15));
    CHECK_THROWS_AS(rho_ball(o, Point{1.0, 0.0}), qcb::domain_error);
}

TEST_CASE("j_metric", "[metrics]")
{
    const Point x{0.0, 1.0}, y{3.0, 1.0};
    CHECK(j_metric(HalfSpace{}, x, y) == Approx(std::log(4.0)));
    CHECK(j_metric(UnitBall{}, Point::zero(3), Point::axis(3, 0, 0.5)) == Approx(std::log(2.0)));
    CHECK(j_metric(UnitBall{}, 0.1 * x, 0.1 * x) == 0.0);
}

TEST_CASE("k_exact closed forms", "[metrics]")
{
    CHECK(k_exact(PuncturedSpace{}, Point{1.0, 0.0}, Point{-1.0, 0.0}) == Approx(pi).epsilon(1e-15));
    CHECK(k_exact(PuncturedSpace{}, Point{1.0, 0.0}, Point{std::exp(2.0), 0.0}) == Approx(2.0));
    CHECK(k_exact(HalfSpace{}, Point{0.0, 1.0}, Point{0.0, std::exp(1.5)}) == Approx(1.5).epsilon(1e-14));
    // tiny separation keeps full relative precision
    const double k = k_exact(HalfSpace{}, Point{0.0, 1.0}, Point{1e-10, 1.0});
    CHECK(k == Approx(1e-10).epsilon(1e-8));
    CHECK_THROWS_AS(k_exact(UnitBall{}, Point{0.0, 0.0}, Point{0.1, 0.0}), qcb::unsupported_operation);
}

TEST_CASE("j <= k <= 2j on half-space and punctured space", "[metrics][property]")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0), v(0.01, 3.0);
    for (int i = 0; i < 300; ++i) {
        const Point x{u(rng), v(rng)}, y{u(rng), v(rng)};
        const double jh = j_metric(HalfSpace{}, x, y), kh = k_exact(HalfSpace{}, x, y);
        CHECK(jh <= kh + 1e-12);
        CHECK(kh <= 2 * jh + 1e-12);
        const double jp = j_metric(PuncturedSpace{}, x, y), kp = k_exact(PuncturedSpace{}, x, y);
        CHECK(jp <= kp + 1e-12);
    }
}

TEST_CASE("k_axis_complement", "[metrics]")
{
    const Point x{0.5, 1.0, 0.0}, y{0.5, -1.0, 0.0};
    CHECK(k_axis_complement(x, y) == Approx(pi));
    CHECK_THROWS_AS(k_axis_complement(Point{0.0, 1.0}, Point{0.0, -1.0}), qcb::domain_error);
    CHECK_THROWS_AS(k_axis_complement(x, Point{0.6, -1.0, 0.0}), qcb::domain_error);
}

TEST_CASE("k_numeric in the ball", "[metrics]")
{
    const Point o = Point::zero(2);
    CHECK(k_numeric(UnitBall{}, o, Point{0.5, 0.0}) == Approx(std::log(2.0)).margin(1e-3));
    CHECK(k_numeric(UnitBall{}, o, o) == 0.0);
    CHECK_THROWS_AS(k_numeric(HalfSpace{}, o + Point{0.0, 1.0}, Point{0.0, 2.0}), qcb::unsupported_operation);
    CHECK_THROWS_AS(k_numeric(UnitBall{}, o, Point{0.5, 0.0}, 0), qcb::domain_error);
}

TEST_CASE("k_numeric in a box matches the half-space along a far face", "[metrics]")
{
    // Far from all other faces the box behaves like the half-space near one face.
    const auto box = ConvexPolytope::box(Point{-100.0, 0.0}, Point{100.0, 200.0});
    const Point x{0.0, 1.0}, y{0.0, 4.0};
    CHECK(k_numeric(box, x, y, 32) == Approx(std::log(4.0)).margin(2e-3));
}

TEST_CASE("k_numeric sits between j and 2j in the ball", "[metrics][property]")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 12; ++i) {
        const Point x = random_in_ball(rng, 2, 0.9), y = random_in_ball(rng, 2, 0.9);
        const double j = j_metric(UnitBall{}, x, y);
        const double k = k_numeric(UnitBall{}, x, y, 32);
        CHECK(k >= j - 1e-9);
        CHECK(k <= 2 * j + 1e-3);
        CHECK(k >= 0.5 * rho_ball(x, y) - 1e-9);
        CHECK(k <= rho_ball(x, y) + 1e-3);
    }
}

TEST_CASE("doubling segments never lengthens the path", "[metrics][property]")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i) {
        const Point x = random_in_ball(rng, 3, 0.8), y = random_in_ball(rng, 3, 0.8);
        CHECK(k_numeric(UnitBall{}, x, y, 16) <= k_numeric(UnitBall{}, x, y, 8) + 1e-12);
    }
}

TEST_CASE("Mobius ball map", "[metrics]")
{
    const Point a{0.3, -0.4};
    const MobiusBallMap t(a);
    CHECK(t.apply(a).norm() <= 1e-15);
    const Point y{0.1, 0.7};
    const Point back = t.apply_inverse(t.apply(y));
    CHECK(distance(back, y) <= 1e-14);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        const Point p = random_in_ball(rng, 2, 0.95), q = random_in_ball(rng, 2, 0.95);
        CHECK(rho_ball(t.apply(p), t.apply(q)) == Approx(rho_ball(p, q)).epsilon(1e-9));
        CHECK(t.apply(p).norm() < 1.0);
    }
    CHECK(mobius_to_zero(a).base() == a);
    CHECK_THROWS_AS(MobiusBallMap(Point{1.0, 0.0}), qcb::domain_error);
}
