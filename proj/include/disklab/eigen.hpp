#pragma once

#include <utility>
#include <vector>

#include "disklab/truncated_operator.hpp"

namespace disklab {

/// Largest eigenvalue and a unit eigenvector of a Hermitian matrix
/// (row-major, n x n). Deterministic: ties resolve to the first
/// occurrence, the eigenvector phase is fixed by making the largest
/// coordinate real positive.
std::pair<double, Vec> hermitian_max_eigen_matrix(const std::vector<Cx>& m, int n);

/// Contract: input Hermitian within 1e-10 entrywise; the returned pair
/// satisfies ||Hu - lambda*u|| <= 1e-8 * max(1, spectral scale).
std::pair<double, Vec> hermitian_max_eigen(const TruncatedOperator& H);

} // namespace disklab
