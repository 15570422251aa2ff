#pragma once

#include <functional>
#include <span>
#include <vector>

#include "curvlab/geometry.hpp"

namespace curvlab {

/// A radial profile on a geodesic ball, evaluable on [0, r0].
///
/// Two flavours exist. Rule-based profiles wrap a callable and optionally an
/// analytic derivative; without one the derivative falls back to fourth-order
/// finite differences of the rule (one-sided near the interval ends so the rule
/// is never evaluated outside [0, r0]). Sampled profiles hold values on a
/// uniform grid; evaluation uses local cubic interpolation and derivatives are
/// fourth-order differences on the grid.
class RadialFunction {
public:
    using Rule = std::function<double(double)>;

    RadialFunction(GeodesicBall ball, Rule value, Rule derivative = {});

    /// Uniform grid r_i = i * r0 / (values.size() - 1); needs at least 9 samples.
    static RadialFunction from_samples(GeodesicBall ball, std::vector<double> values);

    double operator()(double r) const { return value(r); }
    double value(double r) const;
    double derivative(double r) const;
    double second_derivative(double r) const;

    bool has_analytic_derivative() const noexcept { return static_cast<bool>(derivative_); }
    bool is_sampled() const noexcept { return !samples_.empty(); }
    const GeodesicBall& ball() const noexcept { return ball_; }

    std::vector<double> grid_abscissae() const;
    std::span<const double> grid_values() const noexcept { return samples_; }

private:
    RadialFunction(GeodesicBall ball, std::vector<double> values);

    double finite_difference(const Rule& f, double r) const;
    double interpolate(std::span<const double> table, double r) const;
    void check_argument(double r) const;

    GeodesicBall ball_;
    Rule value_;
    Rule derivative_;
    std::vector<double> samples_;
    std::vector<double> sample_slopes_;
};

} // namespace curvlab
