#pragma once

#include "curvlab/geometry.hpp"
#include "curvlab/radial_function.hpp"

namespace curvlab {

/// Radial Dirichlet eigenpair of the Laplace-Beltrami operator on a geodesic ball
/// (zero angular quantum numbers).
struct EigenPair {
    int n;             ///< mode index, n >= 1
    double lambda;     ///< (n pi / r0)^2 - K
    double norm_const; ///< prefactor of the eigenfunction, length^(-3/2)
};

/// lambda_n = (n pi / r0)^2 - K.
double eigenvalue(const GeodesicBall& ball, int n);

/// sqrt(2K/r0), sqrt(2/r0) or sqrt(2|K|/r0) for K > 0, K = 0, K < 0.
///
/// Normalises the eigenfunction to unit norm under the radial weight s_K(r)^2 dr
/// alone; no angular factor is included.
double normalization_constant(const GeodesicBall& ball, int n);

EigenPair eigenpair(const GeodesicBall& ball, int n);

/// F_n(r) = norm_const * sin(n pi r / r0) / sin(sqrt(K) r) and its hyperbolic and
/// flat analogues. At r = 0 the removable singularity is resolved by series.
double eigenfunction_value(const GeodesicBall& ball, int n, double r);

/// d F_n / dr, analytic.
double eigenfunction_derivative(const GeodesicBall& ball, int n, double r);

/// F_n packaged as a RadialFunction with its analytic derivative.
RadialFunction eigenfunction(const GeodesicBall& ball, int n);

} // namespace curvlab
