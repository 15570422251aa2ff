#include "curvlab/geometry.hpp"

#include <cmath>
#include <numbers>

namespace curvlab {

namespace {

// Below this value of |K| r^2 the trigonometric quotients are replaced by
// their Taylor expansion in K (second order).
constexpr double kSmallCurvatureScale = 1e-8;

bool small_curvature(double K, double r) { return std::abs(K) * r * r < kSmallCurvatureScale; }

void check_radius(const CurvatureSpace& space, double r)
{
    if (!(r >= 0.0) || !std::isfinite(r))
        throw DomainError("geodesic radius must be finite and non-negative, got " + std::to_string(r));
    if (const auto limit = max_radius(space); limit && r > *limit)
        throw DomainError("geodesic radius " + std::to_string(r) + " exceeds pi/sqrt(K) = " + std::to_string(*limit));
}

// u - sin(u) and sinh(u) - u, accurate for small u where direct subtraction cancels.
double odd_series_tail(double u, double sign)
{
    double term = u * u * u / 6.0;
    double sum = 0.0;
    for (int k = 1; k <= 12; ++k) {
        sum += term;
        term *= sign * u * u / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return sum;
}

double u_minus_sin(double u) { return u < 1.0 ? odd_series_tail(u, -1.0) : u - std::sin(u); }
double sinh_minus_u(double u) { return u < 1.0 ? odd_series_tail(u, 1.0) : std::sinh(u) - u; }

} // namespace

CurvatureSpace::CurvatureSpace(double curvature) : curvature_(curvature)
{
    if (!std::isfinite(curvature))
        throw DomainError("sectional curvature must be finite");
}

CurvatureSpace CurvatureSpace::sphere(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("sphere radius must be positive and finite");
    return CurvatureSpace(1.0 / (radius * radius));
}

CurvatureSpace CurvatureSpace::hyperbolic(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("hyperbolic radius must be positive and finite");
    return CurvatureSpace(-1.0 / (radius * radius));
}

GeodesicBall::GeodesicBall(CurvatureSpace space, double radius) : space_(space), radius_(radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("ball radius must be positive and finite, got " + std::to_string(radius));
    if (const auto limit = max_radius(space); limit && !(radius < *limit))
        throw DomainError("ball radius " + std::to_string(radius) + " must be below pi/sqrt(K) = " +
                          std::to_string(*limit));
}

RadiusLimit max_radius(const CurvatureSpace& space)
{
    if (space.is_spherical())
        return std::numbers::pi / std::sqrt(space.curvature());
    return std::nullopt;
}

double metric_factor(const CurvatureSpace& space, double r)
{
    check_radius(space, r);
    const double K = space.curvature();
    if (small_curvature(K, r)) {
        const double x = K * r * r;
        return r * (1.0 - x / 6.0 + x * x / 120.0);
    }
    const double q = std::sqrt(std::abs(K));
    return K > 0.0 ? std::sin(q * r) / q : std::sinh(q * r) / q;
}

double metric_factor_derivative(const CurvatureSpace& space, double r)
{
    check_radius(space, r);
    const double K = space.curvature();
    if (small_curvature(K, r)) {
        const double x = K * r * r;
        return 1.0 - x / 2.0 + x * x / 24.0;
    }
    const double q = std::sqrt(std::abs(K));
    return K > 0.0 ? std::cos(q * r) : std::cosh(q * r);
}

double volume_weight(const CurvatureSpace& space, double r)
{
    const double s = metric_factor(space, r);
    return s * s;
}

double ball_volume(const CurvatureSpace& space, double r)
{
    check_radius(space, r);
    const double K = space.curvature();
    const double pi = std::numbers::pi;
    if (small_curvature(K, r)) {
        const double x = K * r * r;
        return 4.0 * pi * r * r * r * (1.0 / 3.0 - x / 15.0 + 2.0 * x * x / 315.0);
    }
    // 4 pi int_0^r s_K^2 = pi (u -+ sin[h] u) / |K|^{3/2} with u = 2 sqrt(|K|) r
    const double q = std::sqrt(std::abs(K));
    const double u = 2.0 * q * r;
    const double tail = K > 0.0 ? u_minus_sin(u) : sinh_minus_u(u);
    return pi * tail / (q * q * q);
}

GeodesicBall validate_ball(const CurvatureSpace& space, double r0) { return GeodesicBall(space, r0); }

} // namespace curvlab
