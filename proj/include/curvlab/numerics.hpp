#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curvlab/geometry.hpp"
#include "curvlab/radial_function.hpp"

namespace curvlab {

/// Raised when an iterative numerical procedure fails to converge or to bracket.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Composite Gauss-Legendre rule: node_count nodes split evenly over `panels`
/// equal sub-intervals.
struct QuadratureSpec {
    int node_count = 64;
    int panels = 8;

    void validate() const;
    int nodes_per_panel() const { return node_count / panels; }
};

struct GaussLegendreRule {
    std::vector<double> nodes;   ///< on [-1, 1], ascending
    std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussLegendreRule gauss_legendre(int n);

/// int_a^b g(r) dr with the composite rule.
double integrate(const std::function<double(double)>& g, double a, double b, const QuadratureSpec& quad = {});

/// int_0^r0 g(r) w(r) dr, w the radial volume weight of the ball's space.
double integrate_weighted(const std::function<double(double)>& g, const GeodesicBall& ball,
                          const QuadratureSpec& quad = {});

/// int_0^r0 f(r) h(r) w(r) dr.
double weighted_inner_product(const RadialFunction& f, const RadialFunction& h, const QuadratureSpec& quad = {});

/// int_0^r0 f(r)^2 w(r) dr.
double weighted_norm_squared(const RadialFunction& f, const QuadratureSpec& quad = {});

/// Gradient-form Rayleigh quotient  int psi'^2 w / int psi^2 w.
double rayleigh_quotient(const RadialFunction& psi, const QuadratureSpec& quad = {});

/// Laplacian-form quotient  -int psi (Delta psi) w / int psi^2 w, with the radial
/// Laplacian psi'' + 2 (s_K'/s_K) psi' evaluated by finite differences.
double laplacian_quotient(const RadialFunction& psi, const QuadratureSpec& quad = {});

/// hbar * sqrt(rayleigh_quotient(psi)).
double momentum_stddev(const RadialFunction& psi, double hbar, const QuadratureSpec& quad = {});

struct ShootingOptions {
    int max_iterations = 200;      ///< bisection + secant iterations
    int max_scan_steps = 100000;   ///< lambda scan steps before giving up
    double integrator_rel_tol = 1e-12;
    double integrator_abs_tol = 1e-16;
    /// Centre the scan on this value instead of scanning from the spectrum floor.
    std::optional<double> hint;
};

struct ShootingResult {
    double lambda_hat = 0.0;
    double boundary_residual = 0.0; ///< |F(r0)| / (r0 |F'(r0)|)
    int iterations = 0;
    int interior_zeros = 0;
};

/// Value at r0 of the regular solution with F(0) = 1, plus its slope and
/// the number of sign changes on (0, r0).
struct ShotProfile {
    double value = 0.0;
    double slope = 0.0;
    int sign_changes = 0;
};

/// Integrates F'' + 2 (s_K'/s_K) F' + lambda F = 0 from a series start near 0 to r0.
ShotProfile shoot(const GeodesicBall& ball, double lambda, const ShootingOptions& options = {});

/// Integrates the regular solution and returns it sampled on `samples` uniform points.
RadialFunction shoot_profile(const GeodesicBall& ball, double lambda, int samples,
                             const ShootingOptions& options = {});

/// n-th radial Dirichlet eigenvalue by shooting. Never consults a closed form
/// unless options.hint is set.
ShootingResult solve_eigenvalue_numeric(const GeodesicBall& ball, int n, double tol,
                                        const ShootingOptions& options = {});

/// psi(r) = (r0 - r) sum_k c_k (r/r0)^k, c_k uniform on [-1, 1], seeded.
class TrialFunction {
public:
    TrialFunction(GeodesicBall ball, std::vector<double> coefficients);

    double value(double r) const;
    double derivative(double r) const;
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }
    RadialFunction as_radial() const;

private:
    GeodesicBall ball_;
    std::vector<double> coefficients_;
};

TrialFunction random_trial_function(const GeodesicBall& ball, std::uint64_t seed, int degree,
                                    const QuadratureSpec& quad = {});

} // namespace curvlab
