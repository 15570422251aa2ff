#include "curvlab/uncertainty.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "curvlab/numerics.hpp"
#include "curvlab/spectra.hpp"

namespace curvlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kReillyTolerance = 1e-12;

void check_hbar(double hbar)
{
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw DomainError("hbar must be positive and finite");
}

} // namespace

PhysicalConstants PhysicalConstants::natural() { return {1.0, 1.0, 1.0}; }

PhysicalConstants PhysicalConstants::codata_si()
{
    return {1.054571817e-34, 6.67430e-11, 299792458.0};
}

void PhysicalConstants::validate() const
{
    if (!(hbar > 0.0) || !(G > 0.0) || !(c > 0.0))
        throw DomainError("physical constants must be strictly positive");
}

double momentum_lower_bound(const GeodesicBall& ball, double hbar)
{
    check_hbar(hbar);
    return hbar * std::sqrt(eigenvalue(ball, 1));
}

double uncertainty_product(const GeodesicBall& ball, double hbar)
{
    check_hbar(hbar);
    const double r0 = ball.radius();
    return kPi * hbar * std::sqrt(1.0 - ball.curvature() / (kPi * kPi) * r0 * r0);
}

double hyperbolic_floor(const CurvatureSpace& space, double hbar)
{
    check_hbar(hbar);
    if (!space.is_hyperbolic())
        throw DomainError("hyperbolic floor requires K < 0");
    return hbar * std::sqrt(-space.curvature());
}

double taylor_bound(const GeodesicBall& ball, double hbar)
{
    check_hbar(hbar);
    const double r0 = ball.radius();
    return kPi * hbar * (1.0 / r0 - ball.curvature() / (2.0 * kPi * kPi) * r0);
}

TaylorExtremum taylor_extremum(const CurvatureSpace& space)
{
    if (space.is_flat())
        throw DomainError("the expansion has no finite extremum for K = 0");
    const double radius = kPi * std::sqrt(2.0 / std::abs(space.curvature()));
    if (space.is_hyperbolic())
        return {radius, TaylorExtremum::Kind::minimum, true};
    return {radius, TaylorExtremum::Kind::root, radius < *max_radius(space)};
}

BoundTable bound_table(std::span<const double> curvatures, double r_min, double r_max, int steps, double hbar)
{
    check_hbar(hbar);
    if (curvatures.empty())
        throw DomainError("no curvature values requested");
    if (steps < 1)
        throw DomainError("steps must be >= 1");
    if (!(r_min > 0.0) || !(r_max >= r_min) || !std::isfinite(r_max))
        throw DomainError("radius range must satisfy 0 < r_min <= r_max");

    BoundTable table{{}, {}, hbar};
    for (const double K : curvatures) {
        const CurvatureSpace space(K);
        const auto limit = max_radius(space);
        CurveInfo info{K, limit, std::nullopt, std::nullopt, 0};
        if (space.is_hyperbolic())
            info.asymptote = hyperbolic_floor(space, hbar);
        if (space.is_spherical())
            info.equator = *limit / 2.0;
        for (int i = 0; i < steps; ++i) {
            const double r = steps == 1 ? r_min
                             : i + 1 == steps ? r_max
                                              : r_min + (r_max - r_min) * i / (steps - 1);
            if (limit && !(r < *limit))
                continue;
            const double sigma = momentum_lower_bound(GeodesicBall(space, r), hbar);
            table.rows.push_back({K, r, sigma, sigma * r});
            ++info.rows;
        }
        table.curves.push_back(info);
    }
    if (table.rows.empty())
        throw DomainError("radius range is empty after clipping to admissible radii");
    return table;
}

ReillyReport reilly_check(const GeodesicBall& ball)
{
    const double K = ball.curvature();
    if (!(K > 0.0))
        throw DomainError("Reilly's bound applies to K > 0 only");
    ReillyReport report{};
    report.lambda1 = eigenvalue(ball, 1);
    report.reilly_bound = 3.0 * K;
    report.hypothesis_holds = ball.radius() <= kPi / (2.0 * std::sqrt(K));
    const double slack = kReillyTolerance * report.reilly_bound;
    report.inequality_holds = report.lambda1 >= report.reilly_bound - slack;
    report.equality = std::abs(report.lambda1 - report.reilly_bound) <= slack;
    return report;
}

double schwarzschild_geodesic_radius(double r_s)
{
    if (!(r_s > 0.0) || !std::isfinite(r_s))
        throw DomainError("Schwarzschild radius must be positive, got " + std::to_string(r_s));
    return kPi * r_s / 2.0;
}

double schwarzschild_integral_numeric(double r_s, double tol)
{
    if (!(r_s > 0.0) || !std::isfinite(r_s))
        throw DomainError("Schwarzschild radius must be positive, got " + std::to_string(r_s));
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");

    // t = r_s sin^2(theta), dt = 2 r_s sin(theta) cos(theta) dtheta
    auto integrand = [r_s](double theta) {
        const double s = std::sin(theta);
        const double t = r_s * s * s;
        const double jacobian = 2.0 * r_s * s * std::cos(theta);
        return jacobian / std::sqrt(std::abs(1.0 - r_s / t));
    };
    double previous = integrate(integrand, 0.0, kPi / 2.0, {16, 1});
    for (int nodes = 32; nodes <= 4096; nodes *= 2) {
        const double current = integrate(integrand, 0.0, kPi / 2.0, {nodes, nodes / 16});
        if (std::abs(current - previous) <= tol * std::abs(current))
            return current;
        previous = current;
    }
    throw ConvergenceError("Schwarzschild integral did not converge");
}

double planck_length(const PhysicalConstants& constants)
{
    constants.validate();
    return std::sqrt(constants.hbar * constants.G / (constants.c * constants.c * constants.c));
}

double schwarzschild_momentum_bound(double r_s, double hbar)
{
    const GeodesicBall ball(CurvatureSpace::flat(), schwarzschild_geodesic_radius(r_s));
    return momentum_lower_bound(ball, hbar);
}

double min_schwarzschild_radius(const PhysicalConstants& constants) { return 2.0 * planck_length(constants); }

} // namespace curvlab
