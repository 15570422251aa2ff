#include "curvlab/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include <boost/numeric/odeint.hpp>

namespace curvlab {

namespace {

using State = std::array<double, 2>;

// Series start and scan offset, both relative to the natural scale of the ball.
constexpr double kStartFraction = 1e-6;
constexpr double kScanOffsetFraction = 1e-6;
constexpr double kBisectionWidthFraction = 1e-3;
constexpr double kMinTrialNorm = 1e-6;
constexpr int kMaxTrialDraws = 100;

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Radial Laplacian eigen-equation F'' + 2 (s'/s) F' + lambda F = 0 as a first-order system.
struct RadialSystem {
    CurvatureSpace space;
    double lambda;

    void operator()(const State& y, State& dydr, double r) const
    {
        const double drift = 2.0 * metric_factor_derivative(space, r) / metric_factor(space, r);
        dydr[0] = y[1];
        dydr[1] = -drift * y[1] - lambda * y[0];
    }
};

// Regular solution near r = 0: F = 1 + a r^2 + b r^4 with coefficients forced by the ODE.
State series_start(double lambda, double K, double r)
{
    const double a = -lambda / 6.0;
    const double b = lambda * (3.0 * lambda - 4.0 * K) / 360.0;
    const double x = r * r;
    return {1.0 + x * (a + x * b), r * (2.0 * a + 4.0 * b * x)};
}

auto make_stepper(const ShootingOptions& options)
{
    namespace odeint = boost::numeric::odeint;
    return odeint::make_controlled(options.integrator_abs_tol, options.integrator_rel_tol,
                                   odeint::runge_kutta_dopri5<State>());
}

double scan_step(const GeodesicBall& ball)
{
    const double base = std::numbers::pi / ball.radius();
    return base * base / 4.0;
}

} // namespace

// ---------------------------------------------------------------- quadrature

void QuadratureSpec::validate() const
{
    if (node_count < 16)
        throw std::invalid_argument("quadrature needs node_count >= 16, got " + std::to_string(node_count));
    if (panels < 1 || node_count % panels != 0)
        throw std::invalid_argument("quadrature node_count must be a positive multiple of panels");
}

GaussLegendreRule gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("Gauss-Legendre order must be positive");
    if (n == 1)
        return {{0.0}, {2.0}};
    // P_n(x) and P_n'(x) by the three-term recurrence
    auto legendre = [n](double x) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
    };
    GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

double integrate(const std::function<double(double)>& g, double a, double b, const QuadratureSpec& quad)
{
    quad.validate();
    const auto rule = gauss_legendre(quad.nodes_per_panel());
    const double width = (b - a) / quad.panels;
    double total = 0.0;
    for (int p = 0; p < quad.panels; ++p) {
        const double lo = a + p * width;
        const double hi = p + 1 == quad.panels ? b : lo + width;
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            panel += rule.weights[i] * g(mid + half * rule.nodes[i]);
        total += half * panel;
    }
    return total;
}

double integrate_weighted(const std::function<double(double)>& g, const GeodesicBall& ball, const QuadratureSpec& quad)
{
    const CurvatureSpace space = ball.space();
    return integrate([&](double r) { return g(r) * volume_weight(space, r); }, 0.0, ball.radius(), quad);
}

double weighted_inner_product(const RadialFunction& f, const RadialFunction& h, const QuadratureSpec& quad)
{
    return integrate_weighted([&](double r) { return f(r) * h(r); }, f.ball(), quad);
}

double weighted_norm_squared(const RadialFunction& f, const QuadratureSpec& quad)
{
    return integrate_weighted([&](double r) { return f(r) * f(r); }, f.ball(), quad);
}

// ---------------------------------------------------------------- quadratic forms

namespace {

double checked_norm_squared(const RadialFunction& psi, const QuadratureSpec& quad)
{
    const double norm2 = weighted_norm_squared(psi, quad);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw DomainError("trial state has zero weighted norm");
    const double boundary = std::abs(psi(psi.ball().radius()));
    const double scale = std::sqrt(norm2 / ball_volume(psi.ball().space(), psi.ball().radius()) * 4.0 *
                                   std::numbers::pi);
    if (boundary > 1e-6 * scale)
        throw DomainError("trial state violates the Dirichlet condition at r0");
    return norm2;
}

} // namespace

double rayleigh_quotient(const RadialFunction& psi, const QuadratureSpec& quad)
{
    const double norm2 = checked_norm_squared(psi, quad);
    const double gradient = integrate_weighted(
        [&](double r) {
            const double d = psi.derivative(r);
            return d * d;
        },
        psi.ball(), quad);
    return gradient / norm2;
}

double laplacian_quotient(const RadialFunction& psi, const QuadratureSpec& quad)
{
    const double norm2 = checked_norm_squared(psi, quad);
    const CurvatureSpace space = psi.ball().space();
    const double form = integrate_weighted(
        [&](double r) {
            const double drift = 2.0 * metric_factor_derivative(space, r) / metric_factor(space, r);
            const double laplacian = psi.second_derivative(r) + drift * psi.derivative(r);
            return -psi(r) * laplacian;
        },
        psi.ball(), quad);
    return form / norm2;
}

double momentum_stddev(const RadialFunction& psi, double hbar, const QuadratureSpec& quad)
{
    if (!(hbar > 0.0))
        throw DomainError("hbar must be positive");
    return hbar * std::sqrt(rayleigh_quotient(psi, quad));
}

// ---------------------------------------------------------------- shooting

ShotProfile shoot(const GeodesicBall& ball, double lambda, const ShootingOptions& options)
{
    namespace odeint = boost::numeric::odeint;
    const double r0 = ball.radius();
    const double start = kStartFraction * r0;
    State y = series_start(lambda, ball.curvature(), start);
    ShotProfile profile;
    double last_sign = sign_of(y[0]);
    auto observer = [&](const State& s, double r) {
        if (r >= r0)
            return;
        const double sg = sign_of(s[0]);
        if (sg != 0.0 && last_sign != 0.0 && sg != last_sign)
            ++profile.sign_changes;
        if (sg != 0.0)
            last_sign = sg;
    };
    odeint::integrate_adaptive(make_stepper(options), RadialSystem{ball.space(), lambda}, y, start, r0,
                               start, observer);
    profile.value = y[0];
    profile.slope = y[1];
    return profile;
}

RadialFunction shoot_profile(const GeodesicBall& ball, double lambda, int samples, const ShootingOptions& options)
{
    namespace odeint = boost::numeric::odeint;
    if (samples < 9)
        throw std::invalid_argument("profile needs at least 9 samples");
    const double r0 = ball.radius();
    const double start = kStartFraction * r0;
    std::vector<double> values(samples);
    std::vector<double> times{start};
    std::vector<std::size_t> slots;
    for (int i = 0; i < samples; ++i) {
        const double r = i + 1 == samples ? r0 : r0 * i / (samples - 1);
        if (r < start) {
            values[i] = series_start(lambda, ball.curvature(), r)[0];
        } else {
            times.push_back(r);
            slots.push_back(static_cast<std::size_t>(i));
        }
    }
    State y = series_start(lambda, ball.curvature(), start);
    std::size_t seen = 0;
    odeint::integrate_times(make_stepper(options), RadialSystem{ball.space(), lambda}, y, times.begin(),
                            times.end(), start, [&](const State& s, double) {
                                if (seen > 0)
                                    values[slots[seen - 1]] = s[0];
                                ++seen;
                            });
    return RadialFunction::from_samples(ball, std::move(values));
}

ShootingResult solve_eigenvalue_numeric(const GeodesicBall& ball, int n, double tol, const ShootingOptions& options)
{
    if (n < 1)
        throw DomainError("mode index must be >= 1");
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");

    const double step = scan_step(ball);
    const double floor = std::max(0.0, -ball.curvature()) + kScanOffsetFraction * step;
    double lo = floor;
    int wanted = n;
    if (options.hint) {
        lo = std::max(floor, *options.hint - 2.0 * step);
        wanted = 1;
    }

    auto boundary_value = [&](double lambda) { return shoot(ball, lambda, options).value; };

    // scan upward for the wanted sign change of F(r0; lambda)
    double a = lo;
    double fa = boundary_value(a);
    double b = a;
    double fb = fa;
    int found = 0;
    for (int s = 0; s < options.max_scan_steps; ++s) {
        b = a + step;
        fb = boundary_value(b);
        if (sign_of(fa) * sign_of(fb) <= 0.0 && ++found == wanted)
            break;
        a = b;
        fa = fb;
    }
    if (found < wanted)
        throw ConvergenceError("no bracket found for mode " + std::to_string(n));

    ShootingResult result;
    // bisection down to a narrow bracket
    while (b - a > kBisectionWidthFraction * step) {
        if (++result.iterations > options.max_iterations)
            throw ConvergenceError("bisection did not converge");
        const double m = 0.5 * (a + b);
        const double fm = boundary_value(m);
        if (fm == 0.0) {
            a = b = m;
            fa = fb = 0.0;
            break;
        }
        if (sign_of(fm) == sign_of(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }

    // safeguarded secant inside the bracket
    double estimate = fa == 0.0 ? a : (fb == 0.0 ? b : 0.5 * (a + b));
    double prev_x = a;
    double prev_f = fa;
    double x = b;
    double fx = fb;
    while (a != b && fa != 0.0 && fb != 0.0) {
        if (++result.iterations > options.max_iterations)
            throw ConvergenceError("secant iteration did not converge for mode " + std::to_string(n));
        double next = x - fx * (x - prev_x) / (fx - prev_f);
        if (!(next > a && next < b))
            next = 0.5 * (a + b);
        const double fn = boundary_value(next);
        const double change = std::abs(next - estimate);
        estimate = next;
        prev_x = x;
        prev_f = fx;
        x = next;
        fx = fn;
        if (fn == 0.0)
            break;
        if (sign_of(fn) == sign_of(fa)) {
            a = next;
            fa = fn;
        } else {
            b = next;
            fb = fn;
        }
        if (change <= 1e-2 * tol * std::abs(next) || (b - a) <= 1e-2 * tol * std::abs(next))
            break;
    }

    const ShotProfile final_shot = shoot(ball, estimate, options);
    result.lambda_hat = estimate;
    result.interior_zeros = final_shot.sign_changes;
    result.boundary_residual =
        final_shot.slope == 0.0 ? std::abs(final_shot.value)
                                : std::abs(final_shot.value) / (ball.radius() * std::abs(final_shot.slope));
    if (result.interior_zeros != n - 1)
        throw ConvergenceError("converged solution for mode " + std::to_string(n) + " has " +
                               std::to_string(result.interior_zeros) + " interior zeros");
    return result;
}

// ---------------------------------------------------------------- trial states

TrialFunction::TrialFunction(GeodesicBall ball, std::vector<double> coefficients)
    : ball_(ball), coefficients_(std::move(coefficients))
{
    if (coefficients_.empty())
        throw std::invalid_argument("trial function needs at least one coefficient");
}

double TrialFunction::value(double r) const
{
    const double r0 = ball_.radius();
    const double x = r / r0;
    double poly = 0.0;
    for (auto c = coefficients_.rbegin(); c != coefficients_.rend(); ++c)
        poly = poly * x + *c;
    return (r0 - r) * poly;
}

double TrialFunction::derivative(double r) const
{
    const double r0 = ball_.radius();
    const double x = r / r0;
    double poly = 0.0;
    double dpoly = 0.0;
    for (auto c = coefficients_.rbegin(); c != coefficients_.rend(); ++c) {
        dpoly = dpoly * x + poly;
        poly = poly * x + *c;
    }
    return -poly + (r0 - r) * dpoly / r0;
}

RadialFunction TrialFunction::as_radial() const
{
    return RadialFunction(
        ball_, [self = *this](double r) { return self.value(r); },
        [self = *this](double r) { return self.derivative(r); });
}

TrialFunction random_trial_function(const GeodesicBall& ball, std::uint64_t seed, int degree,
                                    const QuadratureSpec& quad)
{
    if (degree < 1)
        throw DomainError("trial polynomial degree must be >= 1");
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
    for (int attempt = 0; attempt < kMaxTrialDraws; ++attempt) {
        std::vector<double> c(static_cast<std::size_t>(degree) + 1);
        std::generate(c.begin(), c.end(), [&] { return coefficient(engine); });
        TrialFunction trial(ball, std::move(c));
        const auto psi = trial.as_radial();
        if (std::sqrt(weighted_norm_squared(psi, quad)) >= kMinTrialNorm)
            return trial;
    }
    throw ConvergenceError("could not draw a trial function with non-negligible norm");
}

} // namespace curvlab
