#include "disklab/enumerator.hpp"

#include <cmath>
#include <numeric>

namespace disklab {

namespace {

// Cantor pairing bijection N x N <-> N.
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
    // w = floor((sqrt(8z+1)-1)/2), with an exactness correction.
    std::uint64_t w = static_cast<std::uint64_t>(
        (std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
    while (w * (w + 1) / 2 > z) --w;
    while ((w + 1) * (w + 2) / 2 <= z) ++w;
    std::uint64_t y = z - w * (w + 1) / 2;
    std::uint64_t x = w - y;
    return {x, y};
}

// 0, 1, -1, 2, -2, ...
long long zigzag(std::uint64_t n) {
    if (n % 2 == 1) return static_cast<long long>((n + 1) / 2);
    return -static_cast<long long>(n / 2);
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

} // namespace

DenseSetEnumerator::DenseSetEnumerator(int dim_limit, int ambient_dim)
    : dim_limit_(dim_limit), ambient_dim_(ambient_dim) {
    if (dim_limit < 1)
        fail(ErrorCode::invalid_argument, "DenseSetEnumerator: dim_limit must be >= 1");
    if (ambient_dim < dim_limit)
        fail(ErrorCode::invalid_argument, "DenseSetEnumerator: ambient_dim must be >= dim_limit");
}

Cx DenseSetEnumerator::nonzero_rational(std::uint64_t j) const {
    std::lock_guard<std::mutex> lock(mutex_);
    while (rational_cache_.size() <= j) {
        std::uint64_t code = next_candidate_++;
        auto [mcode, dcode] = cantor_unpair(code);
        // Nonzero Gaussian integer: skip the (0,0) slot at raw index 0.
        auto [ax, bx] = cantor_unpair(mcode + 1);
        long long a = zigzag(ax);
        long long b = zigzag(bx);
        std::uint64_t den = dcode + 1;
        std::uint64_t g = gcd_u(gcd_u(static_cast<std::uint64_t>(std::llabs(a)),
                                      static_cast<std::uint64_t>(std::llabs(b))),
                                den);
        if (g != 1) continue; // not in lowest terms: another index owns this value
        rational_cache_.push_back(Cx(static_cast<double>(a) / static_cast<double>(den),
                                     static_cast<double>(b) / static_cast<double>(den)));
    }
    return rational_cache_[j];
}

Vec DenseSetEnumerator::vector(std::uint64_t index) const {
    Vec v(static_cast<std::size_t>(ambient_dim_), Cx(0.0, 0.0));
    if (index == 0) return v;

    std::uint64_t m = index - 1;
    const std::uint64_t limit = static_cast<std::uint64_t>(dim_limit_);
    int top = static_cast<int>(m % limit) + 1;
    std::uint64_t rest = m / limit;

    for (int i = 1; i < top; ++i) {
        auto [coord_code, tail] = cantor_unpair(rest);
        rest = tail;
        if (coord_code > 0)
            v[static_cast<std::size_t>(i - 1)] = nonzero_rational(coord_code - 1);
    }
    v[static_cast<std::size_t>(top - 1)] = nonzero_rational(rest);
    return v;
}

} // namespace disklab
