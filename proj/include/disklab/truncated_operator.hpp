#pragma once

#include <utility>
#include <vector>

#include "disklab/operator_spec.hpp"

namespace disklab {

/// N x N realization of an operator spec. Shift truncations zero-pad the
/// lost boundary row/column. Immutable after construction and safe to
/// share across threads.
class TruncatedOperator {
public:
    int dim() const { return dim_; }
    const OperatorSpec& spec() const { return spec_; }
    double norm_estimate() const { return norm_estimate_; }

    /// Entry at 0-based (row, col).
    Cx entry(int row, int col) const {
        return matrix_[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
                       static_cast<std::size_t>(col)];
    }

    const std::vector<Cx>& matrix() const { return matrix_; }

    /// Exact matrix-vector product (zero entries skipped; sums unchanged).
    Vec apply(const Vec& x) const;

    /// Conjugate-transpose applied to x, without materializing the adjoint.
    Vec apply_adjoint(const Vec& x) const;

    TruncatedOperator adjoint() const;

    friend TruncatedOperator make_operator(const OperatorSpec& spec);

private:
    TruncatedOperator() = default;
    void finalize();

    int dim_ = 0;
    OperatorSpec spec_;
    std::vector<Cx> matrix_;       // row-major
    double norm_estimate_ = 0.0;
    // Nonzero entries per row, in column order.
    std::vector<std::vector<std::pair<int, Cx>>> rows_;
};

TruncatedOperator make_operator(const OperatorSpec& spec);

/// Power-iteration lower bound for the largest singular value; converges
/// upward as iterations grow.
double operator_norm_estimate(const TruncatedOperator& op, int iterations);

} // namespace disklab
