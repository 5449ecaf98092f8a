#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "disklab/error.hpp"

namespace disklab {

using Cx = std::complex<double>;
using Vec = std::vector<Cx>;

inline bool is_finite(Cx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool is_finite(const Vec& v) {
    for (Cx z : v)
        if (!is_finite(z)) return false;
    return true;
}

/// Inner product, linear in the first argument: <a,b> = sum a_i * conj(b_i).
inline Cx inner(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        fail(ErrorCode::dimension_mismatch, "inner: vectors have different dimensions");
    Cx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

inline double norm_sq(const Vec& v) {
    double s = 0.0;
    for (Cx z : v) s += std::norm(z);
    return s;
}

inline double norm(const Vec& v) { return std::sqrt(norm_sq(v)); }

inline Vec scaled(const Vec& v, Cx c) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        fail(ErrorCode::dimension_mismatch, "add: vectors have different dimensions");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        fail(ErrorCode::dimension_mismatch, "sub: vectors have different dimensions");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// ||c*v - y|| evaluated coordinatewise.
inline double residual_norm(Cx c, const Vec& v, const Vec& y) {
    if (v.size() != y.size())
        fail(ErrorCode::dimension_mismatch, "residual_norm: vectors have different dimensions");
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += std::norm(c * v[i] - y[i]);
    return std::sqrt(s);
}

/// Unit vector e_index (1-based) in the given dimension.
inline Vec canonical_basis_vector(int dim, int index) {
    if (dim < 1)
        fail(ErrorCode::invalid_argument, "canonical_basis_vector: dim must be positive");
    if (index < 1 || index > dim)
        fail(ErrorCode::range_error, "canonical_basis_vector: index out of range [1, dim]");
    Vec v(static_cast<std::size_t>(dim), Cx(0.0, 0.0));
    v[static_cast<std::size_t>(index - 1)] = Cx(1.0, 0.0);
    return v;
}

/// Largest 1-based index carrying a nonzero coordinate; 0 for the zero vector.
inline int top_support(const Vec& v) {
    for (std::size_t i = v.size(); i > 0; --i)
        if (v[i - 1] != Cx(0.0, 0.0)) return static_cast<int>(i);
    return 0;
}

} // namespace disklab
