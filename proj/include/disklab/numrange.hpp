#pragma once

#include <vector>

#include "disklab/eigen.hpp"
#include "disklab/truncated_operator.hpp"

namespace disklab {

/// Support-angle sweep of the field of values: for each theta the top
/// eigenvector u of Re(e^{i theta} T) contributes the boundary point
/// <Tu,u>; lambda_max holds the support value at that angle.
struct NumericalRangeSample {
    std::vector<double> theta_grid;
    std::vector<Cx> boundary_points;
    std::vector<double> lambda_max;
    double max_modulus = 0.0;
};

struct CoverageGrid {
    std::vector<Cx> points;
    std::vector<double> per_point_distance;
    int horizon = 0;
    double overall_max_modulus = 0.0;
    std::vector<double> per_power_max_modulus; // index n = 0..effective horizon
    bool overflow = false;
    int truncated_horizon = -1;
};

NumericalRangeSample numerical_range_boundary(const TruncatedOperator& op, int theta_count);

struct QuadraticOrbit {
    std::vector<Cx> values; // <T^n x, x> for n = 0..horizon
    bool overflow = false;
};

/// Requires ||x|| = 1 within 1e-10 (normalize first).
QuadraticOrbit orbit_numerical_quadratic(const TruncatedOperator& op, const Vec& x, int horizon);

/// Distance from each grid point to the disk-scaled union of numerical
/// ranges of T^n, n <= horizon: max(0, |w| - max_n max_modulus(w(T^n))).
CoverageGrid disk_range_coverage(const TruncatedOperator& op, int horizon,
                                 const std::vector<Cx>& grid, int theta_count);

} // namespace disklab
