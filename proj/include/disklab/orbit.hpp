#pragma once

#include <utility>
#include <vector>

#include "disklab/truncated_operator.hpp"

namespace disklab {

struct OrbitRecord {
    int n = 0;
    Vec vec;
    double norm = 0.0;
};

/// Orbit records for n = 0..horizon. If some ||T^n x|| exceeds the
/// overflow threshold the orbit stops at the last finite record and the
/// report is flagged.
struct Orbit {
    std::vector<OrbitRecord> records;
    bool overflow = false;
    int truncated_at = -1;
};

inline constexpr double kOrbitOverflowThreshold = 1e300;

Orbit orbit(const TruncatedOperator& op, const Vec& x, int horizon);

enum class OrbitMode { plain, disk, scaled };

const char* orbit_mode_name(OrbitMode mode);
OrbitMode orbit_mode_from_name(const std::string& name);

struct DensityHit {
    Vec target;
    int best_n = 0;
    Cx best_alpha{0.0, 0.0};
    double distance = 0.0;
    OrbitMode mode = OrbitMode::disk;
};

struct DensityReport {
    std::vector<DensityHit> hits;
    int horizon = 0;
    double epsilon = 0.0;
    OrbitMode mode = OrbitMode::disk;
    double covered_fraction = 0.0;
    bool overflow = false;
};

/// argmin over {|alpha| <= 1} of ||alpha*v - y||. The free optimum
/// <y,v>/||v||^2 is clipped radially onto the disk when it escapes;
/// v = 0 yields alpha = 0 with distance ||y||.
std::pair<Cx, double> best_disk_coefficient(const Vec& v, const Vec& y);

/// Unconstrained variant (supercyclic diagnostics): no clipping.
std::pair<Cx, double> best_scaled_coefficient(const Vec& v, const Vec& y);

DensityHit plain_orbit_distance(const Orbit& orb, const Vec& y);
DensityHit disk_orbit_distance(const Orbit& orb, const Vec& y);
DensityHit scaled_orbit_distance(const Orbit& orb, const Vec& y);

DensityReport density_report(const TruncatedOperator& op, const Vec& x,
                             const std::vector<Vec>& targets, int horizon, double epsilon,
                             OrbitMode mode);

/// True iff the three reports are labeled, feasible and ordered:
/// scaled <= disk <= plain pointwise within 1e-12 slack, disk alphas in
/// the closed disk, plain alphas equal to 1. Mismatched target lists are
/// a configuration error.
bool hierarchy_check(const DensityReport& plain, const DensityReport& disk,
                     const DensityReport& scaled);

} // namespace disklab
