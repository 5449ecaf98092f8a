#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "disklab/complexvec.hpp"

namespace disklab {

/// Reproducible enumeration of every finitely-supported vector with
/// rational-complex coordinates and support inside {1..dim_limit}.
/// Index 0 is the zero vector; index k (k <= dim_limit) is e_k. The map
/// index -> vector is injective: distinct indices give distinct vectors.
///
/// Encoding: index-1 = code * dim_limit + (top-1), where top is the
/// highest supported coordinate and code Cantor-packs the coordinate
/// values below the top (arbitrary rationals) with the top value
/// (nonzero rational in lowest terms).
class DenseSetEnumerator {
public:
    /// Vectors are emitted with length ambient_dim (>= dim_limit).
    DenseSetEnumerator(int dim_limit, int ambient_dim);
    explicit DenseSetEnumerator(int dim_limit) : DenseSetEnumerator(dim_limit, dim_limit) {}

    Vec vector(std::uint64_t index) const;

    int dim_limit() const { return dim_limit_; }
    int ambient_dim() const { return ambient_dim_; }

private:
    Cx nonzero_rational(std::uint64_t j) const;

    int dim_limit_;
    int ambient_dim_;
    mutable std::mutex mutex_;
    mutable std::vector<Cx> rational_cache_;     // canonical nonzero rationals, in order
    mutable std::uint64_t next_candidate_ = 0;   // next raw code to test
};

} // namespace disklab
