#include "curvlab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "curvlab/numerics.hpp"
#include "curvlab/spectra.hpp"
#include "curvlab/uncertainty.hpp"

namespace curvlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxMode = 5;
constexpr int kMaxShootingMode = 3;
constexpr double kNormalizationThreshold = 1e-10;
constexpr double kOrthogonalityThreshold = 1e-8;
constexpr double kVariationalSlack = 1e-9;
constexpr double kSchwarzschildThreshold = 1e-6;
constexpr double kIdentityThreshold = 1e-14;
constexpr int kReillyRadii = 50;

CheckOutcome upper_check(std::string name, double worst, double threshold, std::string detail)
{
    return {std::move(name), worst <= threshold, worst, threshold, std::move(detail)};
}

} // namespace

std::vector<double> grid_radii(double K)
{
    if (K > 0.0) {
        const double limit = kPi / std::sqrt(K);
        return {0.1 * limit, 0.3 * limit, 0.5 * limit, 0.7 * limit, 0.9 * limit};
    }
    return {0.3, 0.7, 1.0, 2.0, 3.5};
}

std::vector<GeodesicBall> standard_grid()
{
    std::vector<GeodesicBall> grid;
    for (const double K : kGridCurvatures)
        for (const double r0 : grid_radii(K))
            grid.emplace_back(CurvatureSpace(K), r0);
    return grid;
}

std::vector<GeodesicBall> variational_configurations()
{
    const std::pair<double, double> configs[] = {
        {-4.0, 1.0}, {-4.0, 2.5}, {-1.0, 2.0}, {-1.0, 5.0},     {0.0, 1.0},
        {0.0, 3.0},  {1.0, kPi / 2.0}, {1.0, 2.5}, {4.0, 0.5}, {4.0, 1.2},
    };
    std::vector<GeodesicBall> balls;
    for (const auto& [K, r0] : configs)
        balls.emplace_back(CurvatureSpace(K), r0);
    return balls;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t config, std::size_t index)
{
    return base_seed * 1000003ULL + config * 100003ULL + index;
}

int trial_degree(std::size_t index) { return 1 + static_cast<int>(index % 8); }

std::vector<CheckOutcome> run_verification(const VerifyOptions& options)
{
    std::vector<CheckOutcome> outcomes;
    const auto grid = standard_grid();

    double worst_oracle = 0.0;
    double worst_norm = 0.0;
    double worst_orth = 0.0;
    double worst_sharp = 0.0;
    double worst_identity = 0.0;
    for (const auto& ball : grid) {
        for (int n = 1; n <= kMaxShootingMode; ++n) {
            const double exact = eigenvalue(ball, n);
            const auto shot = solve_eigenvalue_numeric(ball, n, options.tolerance);
            worst_oracle = std::max(worst_oracle, std::abs(shot.lambda_hat - exact) / exact);
        }
        std::vector<RadialFunction> modes;
        for (int n = 1; n <= kMaxMode; ++n)
            modes.push_back(eigenfunction(ball, n));
        for (int m = 0; m < kMaxMode; ++m) {
            for (int n = m; n < kMaxMode; ++n) {
                const double ip = weighted_inner_product(modes[m], modes[n]);
                if (m == n)
                    worst_norm = std::max(worst_norm, std::abs(ip - 1.0));
                else
                    worst_orth = std::max(worst_orth, std::abs(ip));
            }
        }
        const double lambda1 = eigenvalue(ball, 1);
        worst_sharp = std::max(worst_sharp, std::abs(rayleigh_quotient(modes[0]) - lambda1) / lambda1);
        const double bound = momentum_lower_bound(ball);
        worst_identity = std::max(worst_identity, std::abs(bound * bound - lambda1) / lambda1);
    }
    outcomes.push_back(upper_check("eigen_oracle", worst_oracle, options.tolerance,
                                   "max relative |shooting - closed form|, n <= 3"));
    outcomes.push_back(upper_check("normalization", worst_norm, kNormalizationThreshold, "max |<F_n,F_n> - 1|, n <= 5"));
    outcomes.push_back(upper_check("orthogonality", worst_orth, kOrthogonalityThreshold, "max |<F_m,F_n>|, m != n <= 5"));
    outcomes.push_back(upper_check("sharpness", worst_sharp, options.tolerance, "max relative |R[F_1] - lambda_1|"));
    outcomes.push_back(
        upper_check("bound_identity", worst_identity, kIdentityThreshold, "max relative |sigma_min^2 - lambda_1|"));

    double min_ratio = std::numeric_limits<double>::infinity();
    const auto configs = variational_configurations();
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const double lambda1 = eigenvalue(configs[c], 1);
        for (int t = 0; t < options.trials; ++t) {
            const auto idx = static_cast<std::size_t>(t);
            const auto trial =
                random_trial_function(configs[c], trial_seed(options.seed, c, idx), trial_degree(idx));
            min_ratio = std::min(min_ratio, rayleigh_quotient(trial.as_radial()) / lambda1);
        }
    }
    outcomes.push_back({"variational", options.trials == 0 || min_ratio >= 1.0 - kVariationalSlack, min_ratio,
                        1.0 - kVariationalSlack, "min Rayleigh quotient / lambda_1 over seeded trials"});

    // K = 1, radii up to and including the hemisphere, plus radii beyond it
    bool reilly_ok = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    int equalities = 0;
    const CurvatureSpace sphere(1.0);
    for (int i = 1; i <= kReillyRadii; ++i) {
        const double r0 = (kPi / 2.0) * i / kReillyRadii;
        const auto report = reilly_check(GeodesicBall(sphere, r0));
        reilly_ok = reilly_ok && report.consistent() && (report.equality == (i == kReillyRadii));
        worst_margin = std::min(worst_margin, (report.lambda1 - report.reilly_bound) / report.reilly_bound);
        equalities += report.equality ? 1 : 0;
    }
    for (const double fraction : {0.6, 0.75, 0.9}) {
        const auto report = reilly_check(GeodesicBall(sphere, fraction * kPi));
        reilly_ok = reilly_ok && !report.hypothesis_holds && report.consistent();
    }
    outcomes.push_back({"reilly", reilly_ok && equalities == 1, worst_margin, 0.0,
                        "min (lambda_1 - 3K)/3K on the closed hemisphere; equality only at r0 = pi/2"});

    double worst_schwarzschild = 0.0;
    for (const double r_s : {1e-3, 1.0, 1e3}) {
        const double numeric = schwarzschild_integral_numeric(r_s, 1e-10);
        worst_schwarzschild =
            std::max(worst_schwarzschild, std::abs(numeric / schwarzschild_geodesic_radius(r_s) - 1.0));
    }
    outcomes.push_back(upper_check("schwarzschild_quadrature", worst_schwarzschild, kSchwarzschildThreshold,
                                   "max relative |numeric - pi r_s / 2|"));
    return outcomes;
}

} // namespace curvlab
