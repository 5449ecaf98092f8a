#pragma once

#include <cstdint>
#include <random>

#include "disklab/complexvec.hpp"

namespace disklab {

/// Deterministic source for all randomized sampling. Never seeded from
/// the environment; identical seeds reproduce identical streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return uniform_(engine_); }
    double normal() { return normal_(engine_); }

    Cx complex_normal() { return Cx(normal(), normal()); }

    Vec gaussian_vector(int dim) {
        Vec v(static_cast<std::size_t>(dim));
        for (auto& z : v) z = complex_normal();
        return v;
    }

    /// Gaussian vector scaled to unit norm (retries on the zero event).
    Vec unit_vector(int dim) {
        for (;;) {
            Vec v = gaussian_vector(dim);
            double n = norm(v);
            if (n > 1e-12) {
                for (auto& z : v) z /= n;
                return v;
            }
        }
    }

    /// Uniform point of the closed unit disk.
    Cx disk_point() {
        double r = std::sqrt(uniform());
        double t = 2.0 * 3.14159265358979323846 * uniform();
        return Cx(r * std::cos(t), r * std::sin(t));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace disklab
