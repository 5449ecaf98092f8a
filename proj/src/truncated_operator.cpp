#include "disklab/truncated_operator.hpp"

#include <cmath>
#include <string>

#include "disklab/rng.hpp"

namespace disklab {

namespace {

void build_matrix(const OperatorSpec& spec, std::vector<Cx>& m, int n) {
    auto at = [&](int r, int c) -> Cx& {
        return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(c)];
    };
    switch (spec.kind) {
        case OperatorKind::weighted_backward_shift: {
            // e_{k+1} -> w_k e_k; e_1 -> 0. Superdiagonal M[i][i+1] = w_{i+1}.
            for (int i = 0; i + 1 < n; ++i) {
                Cx w = spec.weights.at(i + 1);
                if (w == Cx(0.0, 0.0) || !is_finite(w))
                    fail(ErrorCode::invalid_spec,
                         "operator.weights: shift weight at index " + std::to_string(i + 1) +
                             " must be nonzero and finite");
                at(i, i + 1) = w;
            }
            break;
        }
        case OperatorKind::weighted_forward_shift: {
            // e_k -> w_k e_{k+1}; the top index truncates to zero.
            for (int i = 0; i + 1 < n; ++i) {
                Cx w = spec.weights.at(i + 1);
                if (w == Cx(0.0, 0.0) || !is_finite(w))
                    fail(ErrorCode::invalid_spec,
                         "operator.weights: shift weight at index " + std::to_string(i + 1) +
                             " must be nonzero and finite");
                at(i + 1, i) = w;
            }
            break;
        }
        case OperatorKind::diagonal: {
            for (int i = 0; i < n; ++i) {
                Cx d = spec.weights.at(i + 1);
                if (!is_finite(d))
                    fail(ErrorCode::invalid_spec,
                         "operator.weights: diagonal entry at index " + std::to_string(i + 1) +
                             " must be finite");
                at(i, i) = d;
            }
            break;
        }
        case OperatorKind::dense_matrix: {
            if (static_cast<int>(spec.entries.size()) != n)
                fail(ErrorCode::invalid_spec, "operator.entries: must be square (rows)");
            for (int r = 0; r < n; ++r) {
                const auto& row = spec.entries[static_cast<std::size_t>(r)];
                if (static_cast<int>(row.size()) != n)
                    fail(ErrorCode::invalid_spec, "operator.entries: must be square (columns)");
                for (int c = 0; c < n; ++c) {
                    if (!is_finite(row[static_cast<std::size_t>(c)]))
                        fail(ErrorCode::invalid_spec, "operator.entries: entries must be finite");
                    at(r, c) = row[static_cast<std::size_t>(c)];
                }
            }
            break;
        }
        case OperatorKind::scalar_multiple: {
            if (!spec.inner) fail(ErrorCode::invalid_spec, "operator.inner: missing");
            if (!is_finite(spec.c))
                fail(ErrorCode::invalid_spec, "operator.c: must be finite");
            build_matrix(*spec.inner, m, n);
            for (auto& e : m) e = spec.c * e;
            break;
        }
        case OperatorKind::direct_sum_scalar: {
            if (!spec.inner) fail(ErrorCode::invalid_spec, "operator.inner: missing");
            if (!is_finite(spec.alpha))
                fail(ErrorCode::invalid_spec, "operator.alpha: must be finite");
            const int in = n - 1;
            std::vector<Cx> innerm(static_cast<std::size_t>(in) * static_cast<std::size_t>(in),
                                   Cx(0.0, 0.0));
            build_matrix(*spec.inner, innerm, in);
            for (int r = 0; r < in; ++r)
                for (int c = 0; c < in; ++c)
                    at(r, c) = innerm[static_cast<std::size_t>(r) * static_cast<std::size_t>(in) +
                                      static_cast<std::size_t>(c)];
            at(n - 1, n - 1) = spec.alpha;
            break;
        }
    }
}

} // namespace

void TruncatedOperator::finalize() {
    const int n = dim_;
    rows_.assign(static_cast<std::size_t>(n), {});
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Cx v = entry(r, c);
            if (v != Cx(0.0, 0.0)) rows_[static_cast<std::size_t>(r)].emplace_back(c, v);
        }
    norm_estimate_ = operator_norm_estimate(*this, 100);
}

Vec TruncatedOperator::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        fail(ErrorCode::dimension_mismatch,
             "apply: vector dimension " + std::to_string(x.size()) + " does not match operator dimension " +
                 std::to_string(dim_));
    Vec y(static_cast<std::size_t>(dim_), Cx(0.0, 0.0));
    for (int r = 0; r < dim_; ++r) {
        Cx s(0.0, 0.0);
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)])
            s += v * x[static_cast<std::size_t>(c)];
        y[static_cast<std::size_t>(r)] = s;
    }
    return y;
}

Vec TruncatedOperator::apply_adjoint(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        fail(ErrorCode::dimension_mismatch, "apply_adjoint: dimension mismatch");
    Vec y(static_cast<std::size_t>(dim_), Cx(0.0, 0.0));
    for (int r = 0; r < dim_; ++r) {
        const Cx xr = x[static_cast<std::size_t>(r)];
        if (xr == Cx(0.0, 0.0)) continue;
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)])
            y[static_cast<std::size_t>(c)] += std::conj(v) * xr;
    }
    return y;
}

TruncatedOperator TruncatedOperator::adjoint() const {
    return make_operator(adjoint_spec(spec_));
}

TruncatedOperator make_operator(const OperatorSpec& spec) {
    const int n = spec.dim();
    if (n < 2) fail(ErrorCode::invalid_spec, "operator.dim: truncation dimension must be >= 2");
    TruncatedOperator op;
    op.dim_ = n;
    op.spec_ = spec;
    op.matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Cx(0.0, 0.0));
    build_matrix(spec, op.matrix_, n);
    op.finalize();
    return op;
}

double operator_norm_estimate(const TruncatedOperator& op, int iterations) {
    if (iterations < 1)
        fail(ErrorCode::invalid_argument, "operator_norm_estimate: iterations must be >= 1");
    Rng rng(0x6f70655f6e6f726dULL); // fixed seed: estimate is deterministic
    Vec x = rng.unit_vector(op.dim());
    double best = 0.0;
    for (int it = 0; it < iterations; ++it) {
        Vec tx = op.apply(x);
        double tn = norm(tx);
        if (tn > best) best = tn;
        if (tn < 1e-280) break; // x (numerically) in the kernel of T*T
        Vec z = op.apply_adjoint(tx);
        double zn = norm(z);
        if (zn < 1e-280) break;
        for (auto& e : z) e /= zn;
        x = std::move(z);
    }
    return best;
}

} // namespace disklab
