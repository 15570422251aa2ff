#pragma once

#include <optional>
#include <span>
#include <vector>

#include "curvlab/geometry.hpp"

namespace curvlab {

/// hbar, G and c in a consistent unit system.
struct PhysicalConstants {
    double hbar;
    double G;
    double c;

    /// hbar = G = c = 1.
    static PhysicalConstants natural();
    /// CODATA 2018 values in SI units.
    static PhysicalConstants codata_si();

    void validate() const;
};

/// Largest lower bound of the momentum deviation in the ball: hbar sqrt(lambda_1).
double momentum_lower_bound(const GeodesicBall& ball, double hbar = 1.0);

/// sigma_p r >= pi hbar sqrt(1 - K r0^2 / pi^2); the right-hand side.
double uncertainty_product(const GeodesicBall& ball, double hbar = 1.0);

/// hbar sqrt(|K|), the r0-independent floor on hyperbolic space. Requires K < 0.
double hyperbolic_floor(const CurvatureSpace& space, double hbar = 1.0);

/// First-order small-radius expansion pi hbar (1/r0 - K r0 / (2 pi^2)), no remainder.
double taylor_bound(const GeodesicBall& ball, double hbar = 1.0);

struct TaylorExtremum {
    enum class Kind { minimum, root };
    double radius;
    Kind kind;       ///< minimum for K < 0, zero crossing for K > 0
    bool in_domain;  ///< false when the point lies beyond pi/sqrt(K)
};

/// K < 0: minimiser pi sqrt(2/|K|) of the expansion. K > 0: its root pi sqrt(2/K),
/// which always lies outside the sphere's admissible radii.
TaylorExtremum taylor_extremum(const CurvatureSpace& space);

struct BoundRow {
    double K;
    double r;
    double sigma_p_min;
    double product; ///< sigma_p_min * r
};

struct CurveInfo {
    double K;
    std::optional<double> radius_limit; ///< pi/sqrt(K) for K > 0
    std::optional<double> asymptote;    ///< hbar sqrt(|K|) for K < 0
    std::optional<double> equator;      ///< pi/(2 sqrt(K)) for K > 0
    std::size_t rows;
};

struct BoundTable {
    std::vector<BoundRow> rows; ///< grouped by K in request order, r ascending
    std::vector<CurveInfo> curves;
    double hbar;
};

/// Samples momentum_lower_bound on `steps` evenly spaced radii in [r_min, r_max]
/// (just r_min when steps == 1) for every K, dropping radii that are not
/// admissible ball radii for that K.
BoundTable bound_table(std::span<const double> curvatures, double r_min, double r_max, int steps,
                       double hbar = 1.0);

struct ReillyReport {
    double lambda1;
    double reilly_bound;     ///< n k = 3K
    bool hypothesis_holds;   ///< r0 <= pi / (2 sqrt(K)), the closed upper hemisphere
    bool inequality_holds;   ///< lambda1 >= 3K (up to relative 1e-12)
    bool equality;           ///< |lambda1 - 3K| <= 1e-12 * 3K

    /// hypothesis implies inequality.
    bool consistent() const { return !hypothesis_holds || inequality_holds; }
};

/// Compares lambda_1 with Reilly's bound lambda_1 >= 3K on the sphere. Requires K > 0.
ReillyReport reilly_check(const GeodesicBall& ball);

/// Geodesic radius of a Schwarzschild sphere, pi r_s / 2.
double schwarzschild_geodesic_radius(double r_s);

/// int_0^{r_s} |1 - r_s/t|^{-1/2} dt by Gauss-Legendre after t = r_s sin^2(theta);
/// the node count doubles until two estimates agree to `tol` relative.
double schwarzschild_integral_numeric(double r_s, double tol);

double planck_length(const PhysicalConstants& constants);

/// 2 hbar / r_s: the flat-space bound evaluated at the geodesic radius pi r_s / 2.
double schwarzschild_momentum_bound(double r_s, double hbar);

/// 2 l_P, the fixed point of r_s >= (2G/c^3) * 2 hbar / r_s.
double min_schwarzschild_radius(const PhysicalConstants& constants);

} // namespace curvlab
