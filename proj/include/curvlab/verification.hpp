#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvlab/geometry.hpp"

namespace curvlab {

/// Curvatures of the standard verification grid.
inline constexpr double kGridCurvatures[] = {-4.0, -1.0, 0.0, 1.0, 4.0};

/// Five admissible radii for K: fractions 0.1 .. 0.9 of pi/sqrt(K) on the sphere,
/// {0.3, 0.7, 1, 2, 3.5} otherwise.
std::vector<double> grid_radii(double K);

/// Every (K, r0) pair of the standard grid, K-major.
std::vector<GeodesicBall> standard_grid();

/// The ten (K, r0) configurations used for the variational trial sweep.
std::vector<GeodesicBall> variational_configurations();

/// Seed and degree of trial number `index` in a sweep started from `base_seed`.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t config, std::size_t index);
int trial_degree(std::size_t index);

struct VerifyOptions {
    double tolerance = 1e-8;
    std::uint64_t seed = 42;
    int trials = 1000;
};

struct CheckOutcome {
    std::string name;
    bool passed;
    double worst;      ///< worst observed residual (or ratio, see detail)
    double threshold;
    std::string detail;
};

/// Runs the invariant suite: oracle agreement, normalisation, orthogonality,
/// sharpness, variational inequality, Reilly's bound and the Schwarzschild
/// quadrature. Results are in a fixed order independent of scheduling.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

} // namespace curvlab
