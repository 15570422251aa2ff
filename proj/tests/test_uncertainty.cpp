#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "curvlab/numerics.hpp"
#include "curvlab/spectra.hpp"
#include "curvlab/uncertainty.hpp"

using namespace curvlab;

namespace {

constexpr double pi = std::numbers::pi;

GeodesicBall ball(double K, double r0) { return GeodesicBall(CurvatureSpace(K), r0); }

} // namespace

TEST_CASE("momentum lower bound examples")
{
    CHECK(momentum_lower_bound(ball(0.0, 1.0)) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(momentum_lower_bound(ball(1.0, pi * (1.0 - 1e-8))) < 1e-3);
    CHECK(momentum_lower_bound(ball(-1.0, 1.0)) == doctest::Approx(std::sqrt(pi * pi + 1.0)).epsilon(1e-15));
    CHECK(momentum_lower_bound(ball(-1.0, 1.0)) == doctest::Approx(3.2969).epsilon(1e-4));
    // shooting as the oracle for the hyperbolic value
    const double shot = solve_eigenvalue_numeric(ball(-1.0, 1.0), 1, 1e-10).lambda_hat;
    CHECK(momentum_lower_bound(ball(-1.0, 1.0)) == doctest::Approx(std::sqrt(shot)).epsilon(1e-9));
    CHECK(momentum_lower_bound(ball(0.0, 1.0), 3.0) == doctest::Approx(3.0 * pi));
    CHECK_THROWS_AS(momentum_lower_bound(ball(0.0, 1.0), -1.0), DomainError);
}

TEST_CASE("uncertainty product examples")
{
    for (const double r0 : {1e-3, 0.1, 1.0, 49.0, 1e4})
        CHECK(uncertainty_product(ball(0.0, r0)) == pi);
    CHECK(uncertainty_product(ball(1.0, pi / 2.0)) == doctest::Approx(pi / 2.0 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(uncertainty_product(ball(1.0, pi / 2.0)) == doctest::Approx(2.7207).epsilon(1e-4));
    CHECK(uncertainty_product(ball(-1.0, 10.0)) == doctest::Approx(10.0 * std::sqrt(pi * pi / 100.0 + 1.0)).epsilon(1e-15));
    CHECK(uncertainty_product(ball(-1.0, 10.0)) == doctest::Approx(10.48187).epsilon(1e-6));
}

TEST_CASE("hyperbolic floor")
{
    CHECK(hyperbolic_floor(CurvatureSpace(-1.0)) == 1.0);
    CHECK(hyperbolic_floor(CurvatureSpace(-4.0)) == 2.0);
    CHECK_THROWS_AS(hyperbolic_floor(CurvatureSpace(0.0)), DomainError);
    CHECK_THROWS_AS(hyperbolic_floor(CurvatureSpace(1.0)), DomainError);
    const double gap = momentum_lower_bound(ball(-1.0, 1e3)) - 1.0;
    CHECK(gap == doctest::Approx(pi * pi / 2e6).epsilon(1e-5));
    CHECK(gap == doctest::Approx(4.93e-6).epsilon(1e-3));
}

TEST_CASE("taylor bound examples")
{
    CHECK(taylor_bound(ball(0.0, 1.0)) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(taylor_bound(ball(-1.0, 1.0)) == doctest::Approx(pi + 1.0 / (2.0 * pi)).epsilon(1e-15));
    CHECK(taylor_bound(ball(-1.0, 1.0)) == doctest::Approx(3.30075).epsilon(1e-5));
    CHECK(momentum_lower_bound(ball(-1.0, 1.0)) == doctest::Approx(3.29691).epsilon(1e-5));
    CHECK(taylor_bound(ball(1.0, 1.0)) == doctest::Approx(pi - 1.0 / (2.0 * pi)).epsilon(1e-15));
    CHECK(taylor_bound(ball(1.0, 1.0)) == doctest::Approx(2.98244).epsilon(1e-5));
}

TEST_CASE("taylor extremum")
{
    const auto hyper = taylor_extremum(CurvatureSpace(-1.0));
    CHECK(hyper.radius == doctest::Approx(pi * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(hyper.radius == doctest::Approx(4.4429).epsilon(1e-4));
    CHECK(hyper.in_domain);
    CHECK(hyper.kind == TaylorExtremum::Kind::minimum);
    const auto sphere = taylor_extremum(CurvatureSpace(1.0));
    CHECK(sphere.radius == doctest::Approx(pi * std::sqrt(2.0)).epsilon(1e-15));
    CHECK_FALSE(sphere.in_domain);
    CHECK(sphere.kind == TaylorExtremum::Kind::root);
    CHECK(taylor_bound(ball(1e-9, 1.0)) > 0.0);
    CHECK(taylor_extremum(CurvatureSpace(-2.0)).radius == doctest::Approx(pi).epsilon(1e-15));
    CHECK_THROWS_AS(taylor_extremum(CurvatureSpace(0.0)), DomainError);
}

TEST_CASE("bound table")
{
    const double curvatures[] = {1.0, 0.0, -1.0};
    const auto table = bound_table(curvatures, 0.05, pi, 200);
    REQUIRE(table.curves.size() == 3);
    CHECK(table.curves[0].rows == 199); // r = pi dropped for K = 1
    CHECK(table.curves[1].rows == 200);
    CHECK(table.curves[2].rows == 200);
    CHECK(table.curves[2].asymptote.value() == 1.0);
    CHECK_FALSE(table.curves[1].asymptote.has_value());
    CHECK(table.curves[0].equator.value() == doctest::Approx(pi / 2.0));
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(table.rows[i].product == table.rows[i].sigma_p_min * table.rows[i].r);
        if (i > 0 && table.rows[i].K == table.rows[i - 1].K) {
            CHECK(table.rows[i].r > table.rows[i - 1].r);
            CHECK(table.rows[i].sigma_p_min < table.rows[i - 1].sigma_p_min);
        }
    }

    const double flat[] = {0.0};
    const auto single = bound_table(flat, pi, pi, 1);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].sigma_p_min == 1.0);

    const double minus[] = {-1.0};
    CHECK(bound_table(minus, 20.0, 20.0, 1).rows[0].sigma_p_min == doctest::Approx(1.0123).epsilon(1e-4));

    const double sphere[] = {1.0};
    CHECK_THROWS_AS(bound_table(sphere, 3.2, 4.0, 10), DomainError);
    CHECK_THROWS_AS(bound_table(flat, 1.0, 0.5, 10), DomainError);
    CHECK_THROWS_AS(bound_table(flat, 0.0, 1.0, 10), DomainError);
    CHECK_THROWS_AS(bound_table(flat, 0.1, 1.0, 0), DomainError);
}

TEST_CASE("reilly check")
{
    const auto equal = reilly_check(ball(1.0, pi / 2.0));
    CHECK(equal.lambda1 == doctest::Approx(3.0));
    CHECK(equal.hypothesis_holds);
    CHECK(equal.equality);
    CHECK(equal.consistent());

    const auto inside = reilly_check(ball(1.0, pi / 4.0));
    CHECK(inside.lambda1 == doctest::Approx(15.0));
    CHECK(inside.inequality_holds);
    CHECK_FALSE(inside.equality);

    const auto outside = reilly_check(ball(1.0, 0.9 * pi));
    CHECK(outside.lambda1 == doctest::Approx(0.2346).epsilon(1e-3));
    CHECK_FALSE(outside.hypothesis_holds);
    CHECK_FALSE(outside.inequality_holds);
    CHECK(outside.consistent());

    CHECK_THROWS_AS(reilly_check(ball(0.0, 1.0)), DomainError);
    CHECK_THROWS_AS(reilly_check(ball(-1.0, 1.0)), DomainError);
}

TEST_CASE("property: Reilly bound on random hemisphere radii")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> curvature(0.1, 9.0);
    std::uniform_real_distribution<double> fraction(1e-3, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double K = curvature(rng);
        const double hemisphere = pi / (2.0 * std::sqrt(K));
        const auto report = reilly_check(ball(K, fraction(rng) * hemisphere));
        CHECK(report.hypothesis_holds);
        CHECK(report.lambda1 >= 3.0 * K);
        CHECK_FALSE(report.equality);
        CHECK(reilly_check(ball(K, hemisphere)).equality);
    }
}

TEST_CASE("schwarzschild chain")
{
    CHECK(schwarzschild_geodesic_radius(1.0) == doctest::Approx(pi / 2.0).epsilon(1e-15));
    CHECK(schwarzschild_geodesic_radius(2.0) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(schwarzschild_geodesic_radius(0.5) == doctest::Approx(pi / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(schwarzschild_geodesic_radius(0.0), DomainError);
    CHECK_THROWS_AS(schwarzschild_geodesic_radius(-1.0), DomainError);

    CHECK(std::abs(schwarzschild_integral_numeric(1.0, 1e-6) - pi / 2.0) < 1e-6);
    CHECK(std::abs(schwarzschild_integral_numeric(3.0, 1e-6) - 1.5 * pi) < 3e-6);
    CHECK(std::abs(schwarzschild_integral_numeric(1e-3, 1e-6) / (pi / 2.0 * 1e-3) - 1.0) < 1e-6);
    CHECK_THROWS_AS(schwarzschild_integral_numeric(-1.0, 1e-6), DomainError);
    CHECK_THROWS_AS(schwarzschild_integral_numeric(1.0, 0.0), DomainError);

    const auto natural = PhysicalConstants::natural();
    CHECK(planck_length(natural) == 1.0);
    CHECK(planck_length({4.0, 1.0, 1.0}) == 2.0);
    CHECK(min_schwarzschild_radius(natural) == 2.0);
    CHECK(schwarzschild_momentum_bound(1.0, 1.0) == 2.0);
    CHECK(schwarzschild_momentum_bound(4.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));

    const auto si = PhysicalConstants::codata_si();
    CHECK(planck_length(si) == doctest::Approx(1.616e-35).epsilon(1e-3));
    CHECK(min_schwarzschild_radius(si) == doctest::Approx(3.23e-35).epsilon(1e-3));
    CHECK_THROWS_AS(planck_length({0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("property: Schwarzschild fixed point")
{
    // r_s = (2G/c^3) * sigma_min(r_s), sigma_min(r_s) = 2 hbar / r_s
    for (const auto& constants : {PhysicalConstants::natural(), PhysicalConstants::codata_si(),
                                  PhysicalConstants{2.0, 3.0, 0.5}}) {
        const double r_s = min_schwarzschild_radius(constants);
        const double implied =
            2.0 * constants.G / std::pow(constants.c, 3) * schwarzschild_momentum_bound(r_s, constants.hbar);
        CHECK(implied == doctest::Approx(r_s).epsilon(1e-14));
    }
}

TEST_CASE("property: bound equals hbar sqrt(lambda_1) and is monotone")
{
    const double curvatures[] = {-4.0, -1.0, 0.0, 1.0, 4.0};
    for (double r0 = 0.05; r0 < 3.0; r0 += 0.137) {
        double previous = INFINITY;
        for (const double K : curvatures) {
            if (K > 0.0 && r0 >= pi / std::sqrt(K))
                continue;
            const auto b = ball(K, r0);
            const double bound = momentum_lower_bound(b, 1.7);
            CHECK(bound * bound == doctest::Approx(1.7 * 1.7 * eigenvalue(b, 1)).epsilon(1e-14));
            CHECK(bound < previous);
            previous = bound;
            CHECK(uncertainty_product(b, 1.7) == doctest::Approx(bound * r0).epsilon(1e-13));
        }
    }
    for (const double K : {-4.0, -1.0, -0.25}) {
        const double floor = hyperbolic_floor(CurvatureSpace(K));
        double previous = INFINITY;
        for (double r0 = 0.1; r0 < 1e4; r0 *= 1.5) {
            const double bound = momentum_lower_bound(ball(K, r0));
            CHECK(bound < previous);
            CHECK(bound > floor);
            previous = bound;
        }
    }
}
