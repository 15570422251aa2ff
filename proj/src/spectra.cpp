#include "curvlab/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace curvlab {

namespace {

// Inside r < kSeriesFraction * r0 the quotient sin(k r)/s_K(r) is evaluated by series.
constexpr double kSeriesFraction = 1e-4;

void check_mode(int n)
{
    if (n < 1)
        throw DomainError("mode index must be >= 1, got " + std::to_string(n));
}

void check_argument(const GeodesicBall& ball, double r)
{
    if (!(r >= 0.0 && r <= ball.radius()))
        throw DomainError("radial argument " + std::to_string(r) + " outside [0, r0]");
}

double wavenumber(const GeodesicBall& ball, int n) { return n * std::numbers::pi / ball.radius(); }

// sin(k r)/(k s_K(r)) = 1 + c2 r^2 + c4 r^4 + O(r^6)
struct QuotientSeries {
    double c2;
    double c4;
};

QuotientSeries quotient_series(double k, double K)
{
    const double a = k * k;
    return {(K - a) / 6.0, a * a / 120.0 + 7.0 * K * K / 360.0 - a * K / 36.0};
}

} // namespace

double eigenvalue(const GeodesicBall& ball, int n)
{
    check_mode(n);
    const double k = wavenumber(ball, n);
    return k * k - ball.curvature();
}

double normalization_constant(const GeodesicBall& ball, int n)
{
    check_mode(n);
    const double K = ball.curvature();
    const double scale = K == 0.0 ? 1.0 : std::abs(K);
    return std::sqrt(2.0 * scale / ball.radius());
}

EigenPair eigenpair(const GeodesicBall& ball, int n)
{
    return {n, eigenvalue(ball, n), normalization_constant(ball, n)};
}

double eigenfunction_value(const GeodesicBall& ball, int n, double r)
{
    check_mode(n);
    check_argument(ball, r);
    const double amplitude = std::sqrt(2.0 / ball.radius());
    const double k = wavenumber(ball, n);
    if (r < kSeriesFraction * ball.radius()) {
        const auto [c2, c4] = quotient_series(k, ball.curvature());
        const double x = r * r;
        return amplitude * k * (1.0 + x * (c2 + x * c4));
    }
    if (r == ball.radius())
        return 0.0;
    return amplitude * std::sin(k * r) / metric_factor(ball.space(), r);
}

double eigenfunction_derivative(const GeodesicBall& ball, int n, double r)
{
    check_mode(n);
    check_argument(ball, r);
    const double amplitude = std::sqrt(2.0 / ball.radius());
    const double k = wavenumber(ball, n);
    if (r < kSeriesFraction * ball.radius()) {
        const auto [c2, c4] = quotient_series(k, ball.curvature());
        return amplitude * k * r * (2.0 * c2 + 4.0 * c4 * r * r);
    }
    const double s = metric_factor(ball.space(), r);
    const double ds = metric_factor_derivative(ball.space(), r);
    return amplitude * (k * std::cos(k * r) * s - std::sin(k * r) * ds) / (s * s);
}

RadialFunction eigenfunction(const GeodesicBall& ball, int n)
{
    check_mode(n);
    return RadialFunction(
        ball, [ball, n](double r) { return eigenfunction_value(ball, n, r); },
        [ball, n](double r) { return eigenfunction_derivative(ball, n, r); });
}

} // namespace curvlab
