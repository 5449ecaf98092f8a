#include "disklab/numrange.hpp"

#include <cmath>
#include <string>

namespace disklab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// H(theta) = (e^{i theta} T + (e^{i theta} T)*) / 2, exactly Hermitian by
// construction.
std::vector<Cx> hermitian_part(const std::vector<Cx>& m, int n, double theta) {
    Cx rot(std::cos(theta), std::sin(theta));
    std::vector<Cx> h(m.size());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Cx a = rot * m[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(c)];
            Cx b = rot * m[static_cast<std::size_t>(c) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(r)];
            h[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(c)] = (a + std::conj(b)) * 0.5;
        }
    return h;
}

Cx quadratic_form(const std::vector<Cx>& m, int n, const Vec& u) {
    Cx s(0.0, 0.0);
    for (int r = 0; r < n; ++r) {
        Cx row(0.0, 0.0);
        for (int c = 0; c < n; ++c)
            row += m[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(c)] *
                   u[static_cast<std::size_t>(c)];
        s += row * std::conj(u[static_cast<std::size_t>(r)]);
    }
    return s;
}

NumericalRangeSample sweep_matrix(const std::vector<Cx>& m, int n, int theta_count) {
    NumericalRangeSample sample;
    sample.theta_grid.reserve(static_cast<std::size_t>(theta_count));
    sample.boundary_points.reserve(static_cast<std::size_t>(theta_count));
    sample.lambda_max.reserve(static_cast<std::size_t>(theta_count));
    for (int j = 0; j < theta_count; ++j) {
        double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(theta_count);
        std::vector<Cx> h = hermitian_part(m, n, theta);
        try {
            auto [lambda, u] = hermitian_max_eigen_matrix(h, n);
            Cx p = quadratic_form(m, n, u);
            sample.theta_grid.push_back(theta);
            sample.lambda_max.push_back(lambda);
            sample.boundary_points.push_back(p);
            double mod = std::abs(p);
            if (mod > sample.max_modulus) sample.max_modulus = mod;
        } catch (const Error& err) {
            if (err.code() == ErrorCode::numeric)
                fail(ErrorCode::numeric, "numerical_range_boundary: theta index " +
                                             std::to_string(j) + ": " + err.what());
            throw;
        }
    }
    return sample;
}

} // namespace

NumericalRangeSample numerical_range_boundary(const TruncatedOperator& op, int theta_count) {
    if (theta_count < 8)
        fail(ErrorCode::invalid_argument, "numerical_range_boundary: theta_count must be >= 8");
    return sweep_matrix(op.matrix(), op.dim(), theta_count);
}

QuadraticOrbit orbit_numerical_quadratic(const TruncatedOperator& op, const Vec& x, int horizon) {
    if (horizon < 0)
        fail(ErrorCode::invalid_argument, "orbit_numerical_quadratic: horizon must be >= 0");
    if (std::fabs(norm(x) - 1.0) > 1e-10)
        fail(ErrorCode::contract, "orbit_numerical_quadratic: x must be a unit vector");

    QuadraticOrbit out;
    Vec cur = x;
    out.values.push_back(inner(cur, x));
    for (int n = 1; n <= horizon; ++n) {
        cur = op.apply(cur);
        double cn = norm(cur);
        if (!(cn <= kOrbitOverflowThreshold)) {
            out.overflow = true;
            break;
        }
        out.values.push_back(inner(cur, x));
    }
    return out;
}

CoverageGrid disk_range_coverage(const TruncatedOperator& op, int horizon,
                                 const std::vector<Cx>& grid, int theta_count) {
    if (horizon < 1)
        fail(ErrorCode::invalid_argument, "disk_range_coverage: horizon must be >= 1");
    if (theta_count < 8)
        fail(ErrorCode::invalid_argument, "disk_range_coverage: theta_count must be >= 8");

    const int n = op.dim();
    CoverageGrid cov;
    cov.points = grid;
    cov.horizon = horizon;

    // Power n = 0 is the identity, with w(I) = {1}.
    std::vector<Cx> power(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Cx(0.0, 0.0));
    for (int i = 0; i < n; ++i)
        power[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(i)] = Cx(1.0, 0.0);

    for (int p = 0; p <= horizon; ++p) {
        if (p > 0) {
            // power <- power * M
            std::vector<Cx> next(power.size(), Cx(0.0, 0.0));
            for (int r = 0; r < n; ++r)
                for (int k = 0; k < n; ++k) {
                    Cx v = power[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                                 static_cast<std::size_t>(k)];
                    if (v == Cx(0.0, 0.0)) continue;
                    for (int c = 0; c < n; ++c)
                        next[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(c)] +=
                            v * op.entry(k, c);
                }
            power = std::move(next);
            double maxabs = 0.0;
            for (Cx e : power) maxabs = std::fmax(maxabs, std::abs(e));
            if (!(maxabs <= kOrbitOverflowThreshold)) {
                cov.overflow = true;
                cov.truncated_horizon = p - 1;
                break;
            }
        }
        NumericalRangeSample s = sweep_matrix(power, n, theta_count);
        cov.per_power_max_modulus.push_back(s.max_modulus);
        if (s.max_modulus > cov.overall_max_modulus) cov.overall_max_modulus = s.max_modulus;
    }

    cov.per_point_distance.reserve(grid.size());
    for (Cx w : grid)
        cov.per_point_distance.push_back(std::fmax(0.0, std::abs(w) - cov.overall_max_modulus));
    return cov;
}

} // namespace disklab
