#include "disklab/orbit.hpp"

#include <cmath>
#include <string>

namespace disklab {

const char* orbit_mode_name(OrbitMode mode) {
    switch (mode) {
        case OrbitMode::plain: return "plain";
        case OrbitMode::disk: return "disk";
        case OrbitMode::scaled: return "scaled";
    }
    return "unknown";
}

OrbitMode orbit_mode_from_name(const std::string& name) {
    if (name == "plain") return OrbitMode::plain;
    if (name == "disk") return OrbitMode::disk;
    if (name == "scaled") return OrbitMode::scaled;
    fail(ErrorCode::parse_error, "mode: unknown orbit mode '" + name + "'");
}

Orbit orbit(const TruncatedOperator& op, const Vec& x, int horizon) {
    if (horizon < 0) fail(ErrorCode::invalid_argument, "orbit: horizon must be >= 0");
    Orbit orb;
    Vec cur = x;
    double cn = norm(cur);
    orb.records.push_back({0, cur, cn});
    for (int n = 1; n <= horizon; ++n) {
        cur = op.apply(cur);
        cn = norm(cur);
        if (!(cn <= kOrbitOverflowThreshold)) {
            orb.overflow = true;
            orb.truncated_at = n;
            break;
        }
        orb.records.push_back({n, cur, cn});
    }
    return orb;
}

std::pair<Cx, double> best_disk_coefficient(const Vec& v, const Vec& y) {
    if (v.size() != y.size())
        fail(ErrorCode::dimension_mismatch, "best_disk_coefficient: dimension mismatch");
    double v2 = norm_sq(v);
    if (v2 == 0.0) return {Cx(0.0, 0.0), norm(y)};
    Cx alpha = inner(y, v) / v2;
    double mod = std::abs(alpha);
    if (mod > 1.0) alpha /= mod;
    return {alpha, residual_norm(alpha, v, y)};
}

std::pair<Cx, double> best_scaled_coefficient(const Vec& v, const Vec& y) {
    if (v.size() != y.size())
        fail(ErrorCode::dimension_mismatch, "best_scaled_coefficient: dimension mismatch");
    double v2 = norm_sq(v);
    if (v2 == 0.0) return {Cx(0.0, 0.0), norm(y)};
    Cx alpha = inner(y, v) / v2;
    return {alpha, residual_norm(alpha, v, y)};
}

namespace {

DensityHit orbit_distance(const Orbit& orb, const Vec& y, OrbitMode mode) {
    if (orb.records.empty())
        fail(ErrorCode::invalid_argument, "orbit_distance: empty orbit");
    DensityHit hit;
    hit.target = y;
    hit.mode = mode;
    bool first = true;
    for (const auto& rec : orb.records) {
        Cx alpha;
        double dist;
        switch (mode) {
            case OrbitMode::plain:
                alpha = Cx(1.0, 0.0);
                dist = residual_norm(alpha, rec.vec, y);
                break;
            case OrbitMode::disk:
                std::tie(alpha, dist) = best_disk_coefficient(rec.vec, y);
                break;
            case OrbitMode::scaled:
                std::tie(alpha, dist) = best_scaled_coefficient(rec.vec, y);
                break;
        }
        // Ties keep the smallest n.
        if (first || dist < hit.distance) {
            hit.best_n = rec.n;
            hit.best_alpha = alpha;
            hit.distance = dist;
            first = false;
        }
    }
    return hit;
}

} // namespace

DensityHit plain_orbit_distance(const Orbit& orb, const Vec& y) {
    return orbit_distance(orb, y, OrbitMode::plain);
}

DensityHit disk_orbit_distance(const Orbit& orb, const Vec& y) {
    return orbit_distance(orb, y, OrbitMode::disk);
}

DensityHit scaled_orbit_distance(const Orbit& orb, const Vec& y) {
    return orbit_distance(orb, y, OrbitMode::scaled);
}

DensityReport density_report(const TruncatedOperator& op, const Vec& x,
                             const std::vector<Vec>& targets, int horizon, double epsilon,
                             OrbitMode mode) {
    if (horizon < 1) fail(ErrorCode::invalid_argument, "density_report: horizon must be >= 1");
    if (!(epsilon > 0.0)) fail(ErrorCode::invalid_argument, "density_report: epsilon must be > 0");
    if (targets.empty()) fail(ErrorCode::invalid_argument, "density_report: targets must be nonempty");

    DensityReport report;
    report.horizon = horizon;
    report.epsilon = epsilon;
    report.mode = mode;

    Orbit orb = orbit(op, x, horizon);
    report.overflow = orb.overflow;

    int covered = 0;
    for (const auto& y : targets) {
        DensityHit hit = orbit_distance(orb, y, mode);
        if (hit.distance < epsilon) ++covered;
        report.hits.push_back(std::move(hit));
    }
    report.covered_fraction =
        static_cast<double>(covered) / static_cast<double>(targets.size());
    return report;
}

bool hierarchy_check(const DensityReport& plain, const DensityReport& disk,
                     const DensityReport& scaled) {
    const std::size_t n = plain.hits.size();
    if (disk.hits.size() != n || scaled.hits.size() != n)
        fail(ErrorCode::invalid_argument, "hierarchy_check: reports cover different target counts");
    for (std::size_t i = 0; i < n; ++i)
        if (plain.hits[i].target != disk.hits[i].target ||
            plain.hits[i].target != scaled.hits[i].target)
            fail(ErrorCode::invalid_argument,
                 "hierarchy_check: reports cover different target lists");

    if (plain.mode != OrbitMode::plain || disk.mode != OrbitMode::disk ||
        scaled.mode != OrbitMode::scaled)
        return false;

    constexpr double slack = 1e-12;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = plain.hits[i];
        const auto& d = disk.hits[i];
        const auto& s = scaled.hits[i];
        if (p.mode != OrbitMode::plain || d.mode != OrbitMode::disk ||
            s.mode != OrbitMode::scaled)
            return false;
        if (p.best_alpha != Cx(1.0, 0.0)) return false;
        if (std::abs(d.best_alpha) > 1.0 + slack) return false;
        if (s.distance > d.distance + slack) return false;
        if (d.distance > p.distance + slack) return false;
    }
    return true;
}

} // namespace disklab
