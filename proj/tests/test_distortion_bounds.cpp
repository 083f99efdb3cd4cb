#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "qcb/distortion_bounds.hpp"

using Catch::Approx;
using namespace qcb;

namespace {

std::vector<double> k_grid(double lo, double hi, int count)
{
    std::vector<double> g;
    for (int i = 0; i < count; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    return g;
}

} // namespace

TEST_CASE("identity map gives zero ball bounds", "[bounds]")
{
    for (int n : {2, 3, 4}) {
        CHECK(bound_mv(n, 1.0) == RealInterval{0.0});
        CHECK(bound_vz(n, 1.0) == RealInterval{0.0});
        CHECK(bound_vz_alt(n, 1.0) == RealInterval{0.0});
        CHECK(bound_convex_j(n, 1.0) == RealInterval{0.0});
    }
    CHECK_THROWS_AS(bound_vz(2, 0.5), qcb::domain_error);
    CHECK_THROWS_AS(bound_mv(2, -1.0), qcb::domain_error);
    CHECK_THROWS_AS(bound_vz(1, 2.0), qcb::domain_error);
}

TEST_CASE("planar ball bounds against frozen values", "[bounds]")
{
    CHECK(bound_mv(2, 2.0).lo == Approx(3.495615125438949324).epsilon(1e-12));
    CHECK(bound_vz(2, 2.0).lo == Approx(2.5594112218188168637).epsilon(1e-12));
    CHECK(bound_vz(2, 2.0).degenerate());
    CHECK(bound_vz(2, 3.0).lo == Approx(4.6324228801297734174).epsilon(1e-12));
    CHECK(bound_vz_alt(2, 3.0).lo == Approx(4.6324228801297734174).epsilon(1e-12));

    const long double b = oracle::phi2(0.5L, 0.5L);
    CHECK(bound_vz(2, 2.0).lo == Approx(static_cast<double>(std::log((1 - b) / b))).epsilon(1e-10));
}

TEST_CASE("planar vz and vz_alt agree", "[bounds][property]")
{
    for (double k : k_grid(1.01, 10.0, 40))
        CHECK(std::abs(bound_vz_alt(2, k).lo - bound_vz(2, k).lo) <= 1e-10);
}

TEST_CASE("ordering Krzyz <= VZ <= MV in the plane", "[bounds][property]")
{
    for (double k : k_grid(1.01, 10.0, 40)) {
        const double kr = bound_krzyz(k);
        const double vz = bound_vz(2, k).lo;
        const double mv = bound_mv(2, k).lo;
        CHECK(kr <= vz + 1e-10);
        CHECK(vz <= mv + 1e-10);
    }
}

TEST_CASE("n >= 3 ball bounds are ordered brackets", "[bounds]")
{
    for (int n : {3, 4})
        for (double k : {1.1, 2.0, 5.0}) {
            const auto v = bound_vz(n, k);
            CHECK(v.lo >= 0.0);
            CHECK(v.lo <= v.hi);
            CHECK(bound_mv(n, k).lo <= bound_mv(n, k).hi);
        }
}

TEST_CASE("Krzyz bound", "[bounds]")
{
    CHECK(bound_krzyz(2.0) == Approx(1.4279252650395368132).epsilon(1e-12));
    CHECK(bound_krzyz(4.0) == Approx(3.1060578339934602467).epsilon(1e-12));
    CHECK(bound_krzyz(1.01) == Approx(0.019900784852979183492).epsilon(1e-10));
    CHECK(bound_krzyz(1.0 + 1e-6) == Approx(1.999999000000791666e-6).epsilon(1e-7));
    CHECK(bound_krzyz(1.0 + 1e-13) == 0.0);
    CHECK_THROWS_AS(bound_krzyz(1.0), qcb::domain_error);
    CHECK_THROWS_AS(bound_krzyz(0.9), qcb::domain_error);
}

TEST_CASE("bounds vanish as K -> 1", "[bounds]")
{
    const double k = 1.0 + 1e-6;
    CHECK(bound_mv(2, k).hi < 1e-2);
    CHECK(bound_vz(2, k).hi < 1e-2);
    CHECK(bound_krzyz(k) < 1e-2);
}

TEST_CASE("convex j bound", "[bounds]")
{
    CHECK(bound_convex_j(2, 1.2).lo == Approx(0.95118951140672301702).epsilon(1e-11));
    CHECK(bound_convex_j(2, 1.2).degenerate());
    const auto b3 = bound_convex_j(3, 1.2);
    CHECK(b3.lo <= b3.hi);
    CHECK_THROWS_AS(bound_convex_j(2, 1.2, 0.0), qcb::domain_error);
    CHECK_THROWS_AS(bound_convex_j(2, 1.2, 1.0), qcb::domain_error);
    CHECK(bound_convex_j(2, 1.0 + 1e-9, 0.99).lo >= 0.0);
}

TEST_CASE("small-K threshold and bounds", "[bounds]")
{
    CHECK(k_threshold(2) == Approx(1.3302883454474828963).epsilon(1e-14));
    CHECK(std::abs(k_threshold(2) - 1.33029) <= 5e-6);
    CHECK(k_threshold(3) > 1.0);
    CHECK(bound_convex_small_k(2, 1.2) == Approx(1.494458957409819268).epsilon(1e-14));
    CHECK(bound_convex_small_k(2, k_threshold(2)) == Approx(1.9205105936613151484).epsilon(1e-5));
    CHECK(bound_ball_small_k(2, 1.2) == Approx(2 * 1.494458957409819268).epsilon(1e-14));
    // 1.33029 lies just above K_2 = 1.3302883...
    CHECK_THROWS_AS(bound_convex_small_k(2, 1.33029), qcb::validity_range_error);
    CHECK_THROWS_AS(bound_convex_small_k(2, 1.0), qcb::validity_range_error);
    CHECK_THROWS_AS(bound_ball_small_k(2, 2.0), qcb::validity_range_error);
}

TEST_CASE("small-K bound dominates the planar convex bound on its range", "[bounds][property]")
{
    for (double k : k_grid(1.001, k_threshold(2), 30))
        CHECK(bound_convex_j(2, k).hi <= bound_convex_small_k(2, k) + 1e-12);
}

TEST_CASE("bounded-domain and convex kd bounds", "[bounds]")
{
    CHECK(bound_bounded_domain(2, 2.0, 1.0).lo == Approx(0.85640646055101834822).epsilon(1e-12));
    CHECK(bound_bounded_domain(2, 2.0, 3.0).lo == Approx(3 * 0.85640646055101834822).epsilon(1e-12));
    CHECK(bound_bounded_domain(2, 1e6, 1.0).hi <= 1.0);
    CHECK_THROWS_AS(bound_bounded_domain(2, 2.0, 0.0), qcb::domain_error);
    CHECK(bound_convex_kd(2, 1.2, 2.5).lo == Approx(2.5 * 0.95118951140672301702).epsilon(1e-11));
    CHECK_THROWS_AS(bound_convex_kd(2, 1.2, 0.5), qcb::domain_error);
}

TEST_CASE("lower bound on K for uniform domains", "[bounds]")
{
    CHECK(unit_sphere_area(2) == Approx(2 * pi));
    CHECK(unit_sphere_area(3) == Approx(4 * pi));
    // d_3 = 4 / (4 pi 27) with C = 1; second term (6 log(1 + 2e))^{-3}.
    const double first = (4.0 / (4 * pi * 27)) / 8.0;
    const double second = std::pow(6.0 * std::log(1 + 2 * std::exp(1.0)), -3.0);
    CHECK(first == Approx(0.0014736568804805123682).epsilon(1e-12));
    CHECK(lower_bound_K_uniform(3, 1.0, 1.0, 1.0, 1.0) == Approx(std::min(first, second)).epsilon(1e-14));
    CHECK(lower_bound_K_uniform(3, 1.0, 1.0, 1.0, 1.0) == Approx(0.0007171514067172686666).epsilon(1e-12));
    CHECK(lower_bound_K_uniform(3, 1.0, 1.0, 1.0, 2.0) == Approx(8 * 0.0007171514067172686666).epsilon(1e-12));
    CHECK_THROWS_AS(lower_bound_K_uniform(3, 0.5, 1.0, 1.0, 1.0), qcb::domain_error);
    CHECK_THROWS_AS(lower_bound_K_uniform(3, 1.0, 0.0, 1.0, 1.0), qcb::domain_error);
    CHECK_THROWS_AS(lower_bound_K_uniform(3, 1.0, 1.0, 0.0, 1.0), qcb::domain_error);
}

TEST_CASE("Holder constants", "[bounds]")
{
    CHECK(holder_c(1.0) == 1.0);
    CHECK(holder_c(0.5) == Approx(2.0));
    const auto h = holder_constants(2, 2.0);
    CHECK(h.alpha == Approx(0.5));
    CHECK(h.m1.lo == Approx(4.0).epsilon(1e-12));
    CHECK(h.m1.degenerate());
    CHECK(h.m2.lo == Approx(16.0).epsilon(1e-12));
    const auto near = holder_constants(2, 1.0 + 1e-9);
    CHECK(std::abs(near.m1.lo - 1.0) <= 1e-6);
    CHECK(holder_constants(2, 1.0).r0 == inf);
    const auto h3 = holder_constants(3, 2.0);
    CHECK(h3.m1.lo < h3.m1.hi);
    CHECK_THROWS_AS(holder_constants(2, 0.5), qcb::domain_error);
    CHECK_THROWS_AS(holder_a(0.5, 1.0), qcb::domain_error);
    CHECK_THROWS_AS(holder_c(0.0), qcb::domain_error);
}

TEST_CASE("R0 minimizes A(R)", "[bounds][property]")
{
    for (double k : {1.2, 1.5, 3.0}) {
        const auto h = holder_constants(2, k);
        CHECK(holder_a(h.alpha, h.r0) == Approx(h.c_alpha).epsilon(1e-12));
        for (double r = 1.01; r < 100.0; r *= 1.05) CHECK(holder_a(h.alpha, h.r0) <= holder_a(h.alpha, r) + 1e-12);
    }
}

TEST_CASE("Mori constants", "[bounds]")
{
    CHECK(mori_fv(1.2) == Approx(3.4849728558699258221).epsilon(1e-11));
    CHECK(mori_bv(1.2) == Approx(1.2454912285999255487).epsilon(1e-13));
    CHECK(mori_conjecture(1.2) == Approx(1.5874010519681994748).epsilon(1e-14));
    CHECK_THROWS_AS(mori_bv(4.0 / 3.0), qcb::validity_range_error);
    CHECK_THROWS_AS(mori_bv(1.0), qcb::validity_range_error);
    CHECK_THROWS_AS(mori_fv(1.0), qcb::domain_error);
    const auto m = mori_constants(1.5);
    CHECK_FALSE(m.bv.has_value());
    CHECK(mori_constants(1.2).bv.has_value());
    for (double k : k_grid(1.01, 1.32, 16)) CHECK(mori_conjecture(k) < mori_fv(k));
    // BV as printed crosses the conjectured constant near K = 1.30885.
    for (double k : k_grid(1.01, 1.30, 16)) CHECK(mori_bv(k) < mori_conjecture(k));
    CHECK(mori_bv(1.31) > mori_conjecture(1.31));
}

TEST_CASE("axis-fixed bound", "[bounds]")
{
    CHECK(bound_axis_fixed(2, 2.0).lo == Approx(63.99609375).epsilon(1e-14));
    CHECK(bound_axis_fixed(2, 2.0).degenerate());
    CHECK(bound_axis_fixed(2, 1.0) == RealInterval{1.0});
    CHECK(std::abs(bound_axis_fixed(2, 1.0 + 1e-8).lo - 1.0) <= 1e-3);
    CHECK(std::abs(bound_axis_fixed(3, 1.0 + 1e-8).hi - 1.0) <= 1e-3);
    const auto b = bound_axis_fixed(3, 1.5);
    CHECK(b.lo <= b.hi);
    CHECK(bound_axis_fixed(3, 1.5, 4.0, 4.0).degenerate());
}

TEST_CASE("h1", "[bounds]")
{
    CHECK(h1(std::sqrt(15.0)) == Approx(0.90461516025205421602).epsilon(1e-13));
    CHECK(std::abs(h1(std::sqrt(15.0)) - 0.9046) <= 1e-4);
    CHECK(h1(1e-300) == 1.0);
    CHECK(h1(1.0) == Approx(std::log(2.0)));
    for (double t = 0.05; t < 50.0; t *= 1.3) CHECK(h1(t) >= h1(1.0) - 1e-15);
    CHECK_THROWS_AS(h1(0.0), qcb::domain_error);
}

TEST_CASE("planar remark and uniformly perfect bounds", "[bounds]")
{
    CHECK(planar_remark_bound(1.0) == 0.0);
    CHECK(planar_remark_bound(2.0) == Approx(std::sqrt(2 * std::log(12.0) * 1.5)));
    CHECK(bound_planar_uniformly_perfect(2.0, 3.0) == Approx(4.2837757951186104396).epsilon(1e-12));
    CHECK_THROWS_AS(bound_planar_uniformly_perfect(2.0, 0.5), qcb::domain_error);
    CHECK(planar_remark_limit() == Approx(1.48575575381790284685752792367).epsilon(1e-12));
    for (double k : k_grid(1.0001, planar_remark_limit(), 40))
        CHECK(bound_convex_j(2, k).hi <= planar_remark_bound(k) + 1e-12);
    // Beyond K ~ 2.1087 the planar convex bound exceeds it.
    CHECK(bound_convex_j(2, 3.0).hi > planar_remark_bound(3.0));
}
