#include "curvlab/radial_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvlab {

namespace {

constexpr double kRelativeStep = 1e-3;

} // namespace

RadialFunction::RadialFunction(GeodesicBall ball, Rule value, Rule derivative)
    : ball_(ball), value_(std::move(value)), derivative_(std::move(derivative))
{
    if (!value_)
        throw std::invalid_argument("radial function needs an evaluation rule");
}

RadialFunction::RadialFunction(GeodesicBall ball, std::vector<double> values)
    : ball_(ball), samples_(std::move(values))
{
    const std::size_t n = samples_.size();
    if (n < 9)
        throw std::invalid_argument("sampled radial function needs at least 9 samples");
    const double h = ball_.radius() / static_cast<double>(n - 1);
    const auto& f = samples_;
    sample_slopes_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2 && i + 2 < n) {
            sample_slopes_[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
        } else if (i < 2) {
            sample_slopes_[i] =
                (-25.0 * f[i] + 48.0 * f[i + 1] - 36.0 * f[i + 2] + 16.0 * f[i + 3] - 3.0 * f[i + 4]) / (12.0 * h);
        } else {
            sample_slopes_[i] =
                (25.0 * f[i] - 48.0 * f[i - 1] + 36.0 * f[i - 2] - 16.0 * f[i - 3] + 3.0 * f[i - 4]) / (12.0 * h);
        }
    }
}

RadialFunction RadialFunction::from_samples(GeodesicBall ball, std::vector<double> values)
{
    return RadialFunction(ball, std::move(values));
}

void RadialFunction::check_argument(double r) const
{
    if (!(r >= 0.0 && r <= ball_.radius()))
        throw DomainError("radial argument " + std::to_string(r) + " outside [0, r0]");
}

double RadialFunction::value(double r) const
{
    check_argument(r);
    return is_sampled() ? interpolate(samples_, r) : value_(r);
}

double RadialFunction::derivative(double r) const
{
    check_argument(r);
    if (is_sampled())
        return interpolate(sample_slopes_, r);
    if (derivative_)
        return derivative_(r);
    return finite_difference(value_, r);
}

double RadialFunction::second_derivative(double r) const
{
    check_argument(r);
    return finite_difference([this](double x) { return derivative(x); }, r);
}

std::vector<double> RadialFunction::grid_abscissae() const
{
    std::vector<double> r(samples_.size());
    if (r.empty())
        return r;
    const double h = ball_.radius() / static_cast<double>(r.size() - 1);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = h * static_cast<double>(i);
    r.back() = ball_.radius();
    return r;
}

double RadialFunction::finite_difference(const Rule& f, double r) const
{
    const double r0 = ball_.radius();
    const double h = is_sampled() ? r0 / static_cast<double>(samples_.size() - 1) : kRelativeStep * r0;
    if (r - 2.0 * h >= 0.0 && r + 2.0 * h <= r0)
        return (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h);
    if (r - 2.0 * h < 0.0) {
        const double x = std::max(r, 0.0);
        return (-25.0 * f(x) + 48.0 * f(x + h) - 36.0 * f(x + 2.0 * h) + 16.0 * f(x + 3.0 * h) -
                3.0 * f(x + 4.0 * h)) /
               (12.0 * h);
    }
    const double x = std::min(r, r0);
    return (25.0 * f(x) - 48.0 * f(x - h) + 36.0 * f(x - 2.0 * h) - 16.0 * f(x - 3.0 * h) + 3.0 * f(x - 4.0 * h)) /
           (12.0 * h);
}

double RadialFunction::interpolate(std::span<const double> table, double r) const
{
    const std::size_t n = table.size();
    const double h = ball_.radius() / static_cast<double>(n - 1);
    const double t = r / h;
    const auto cell = static_cast<std::ptrdiff_t>(std::floor(t));
    const std::size_t first = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(cell - 1, 0, static_cast<std::ptrdiff_t>(n) - 4));
    double sum = 0.0;
    for (std::size_t i = first; i < first + 4; ++i) {
        double basis = 1.0;
        for (std::size_t j = first; j < first + 4; ++j)
            if (j != i)
                basis *= (t - static_cast<double>(j)) / (static_cast<double>(i) - static_cast<double>(j));
        sum += basis * table[i];
    }
    return sum;
}

} // namespace curvlab
