#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace curvlab {

/// Raised when an argument lies outside the admissible domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Simply connected 3-manifold of constant sectional curvature K.
/// K > 0 is the 3-sphere of radius 1/sqrt(K), K = 0 Euclidean space,
/// K < 0 hyperbolic space of radius 1/sqrt(|K|).
class CurvatureSpace {
public:
    explicit CurvatureSpace(double curvature);

    static CurvatureSpace sphere(double radius);
    static CurvatureSpace hyperbolic(double radius);
    static CurvatureSpace flat() { return CurvatureSpace(0.0); }

    double curvature() const noexcept { return curvature_; }
    bool is_spherical() const noexcept { return curvature_ > 0.0; }
    bool is_flat() const noexcept { return curvature_ == 0.0; }
    bool is_hyperbolic() const noexcept { return curvature_ < 0.0; }

private:
    double curvature_;
};

/// Geodesic ball of radius r0 about an arbitrary centre. Always valid once
/// constructed: r0 > 0 and, on the sphere, r0 < pi/sqrt(K).
class GeodesicBall {
public:
    GeodesicBall(CurvatureSpace space, double radius);

    const CurvatureSpace& space() const noexcept { return space_; }
    double curvature() const noexcept { return space_.curvature(); }
    double radius() const noexcept { return radius_; }

private:
    CurvatureSpace space_;
    double radius_;
};

/// Geodesic radius limit of the model space. An empty optional means the
/// space is unbounded (K <= 0); otherwise it holds pi/sqrt(K).
using RadiusLimit = std::optional<double>;

RadiusLimit max_radius(const CurvatureSpace& space);

/// s_K(r): sin(sqrt(K) r)/sqrt(K), r, or sinh(sqrt(|K|) r)/sqrt(|K|).
/// Accepts 0 <= r <= pi/sqrt(K) on the sphere.
double metric_factor(const CurvatureSpace& space, double r);

/// s_K'(r): cos(sqrt(K) r), 1, or cosh(sqrt(|K|) r).
double metric_factor_derivative(const CurvatureSpace& space, double r);

/// Radial density of the volume measure, s_K(r)^2.
double volume_weight(const CurvatureSpace& space, double r);

/// Volume of the geodesic ball of radius r, 4*pi * int_0^r s_K(t)^2 dt.
/// On the sphere r = pi/sqrt(K) is accepted and yields the total volume.
double ball_volume(const CurvatureSpace& space, double r);

GeodesicBall validate_ball(const CurvatureSpace& space, double r0);

} // namespace curvlab
