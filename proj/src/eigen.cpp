#include "disklab/eigen.hpp"

#include <cmath>
#include <string>

namespace disklab {

namespace {

// Symmetric Householder reduction to tridiagonal form followed by a
// tridiagonal QL sweep with implicit shifts (EISPACK tred2/tql2 lineage).
// v is row-major n x n, overwritten with the accumulated orthogonal
// transformation; d receives eigenvalues, e is scratch.
class SymmetricEigen {
public:
    SymmetricEigen(std::vector<double> matrix, int n)
        : n_(n), v_(std::move(matrix)), d_(static_cast<std::size_t>(n)),
          e_(static_cast<std::size_t>(n)) {
        tred2();
        tql2();
    }

    const std::vector<double>& eigenvalues() const { return d_; }

    double vec(int row, int col) const { return at(row, col); }

private:
    double& at(int r, int c) { return v_[static_cast<std::size_t>(r) * n_ + c]; }
    double at(int r, int c) const { return v_[static_cast<std::size_t>(r) * n_ + c]; }

    void tred2() {
        const int n = n_;
        for (int j = 0; j < n; ++j) d_[j] = at(n - 1, j);

        for (int i = n - 1; i > 0; --i) {
            double scale = 0.0;
            double h = 0.0;
            for (int k = 0; k < i; ++k) scale += std::fabs(d_[k]);
            if (scale == 0.0) {
                e_[i] = d_[i - 1];
                for (int j = 0; j < i; ++j) {
                    d_[j] = at(i - 1, j);
                    at(i, j) = 0.0;
                    at(j, i) = 0.0;
                }
            } else {
                for (int k = 0; k < i; ++k) {
                    d_[k] /= scale;
                    h += d_[k] * d_[k];
                }
                double f = d_[i - 1];
                double g = std::sqrt(h);
                if (f > 0) g = -g;
                e_[i] = scale * g;
                h = h - f * g;
                d_[i - 1] = f - g;
                for (int j = 0; j < i; ++j) e_[j] = 0.0;

                for (int j = 0; j < i; ++j) {
                    f = d_[j];
                    at(j, i) = f;
                    g = e_[j] + at(j, j) * f;
                    for (int k = j + 1; k <= i - 1; ++k) {
                        g += at(k, j) * d_[k];
                        e_[k] += at(k, j) * f;
                    }
                    e_[j] = g;
                }
                f = 0.0;
                for (int j = 0; j < i; ++j) {
                    e_[j] /= h;
                    f += e_[j] * d_[j];
                }
                double hh = f / (h + h);
                for (int j = 0; j < i; ++j) e_[j] -= hh * d_[j];
                for (int j = 0; j < i; ++j) {
                    f = d_[j];
                    g = e_[j];
                    for (int k = j; k <= i - 1; ++k) at(k, j) -= (f * e_[k] + g * d_[k]);
                    d_[j] = at(i - 1, j);
                    at(i, j) = 0.0;
                }
            }
            d_[i] = h;
        }

        for (int i = 0; i < n - 1; ++i) {
            at(n - 1, i) = at(i, i);
            at(i, i) = 1.0;
            double h = d_[i + 1];
            if (h != 0.0) {
                for (int k = 0; k <= i; ++k) d_[k] = at(k, i + 1) / h;
                for (int j = 0; j <= i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k <= i; ++k) g += at(k, i + 1) * at(k, j);
                    for (int k = 0; k <= i; ++k) at(k, j) -= g * d_[k];
                }
            }
            for (int k = 0; k <= i; ++k) at(k, i + 1) = 0.0;
        }
        for (int j = 0; j < n; ++j) {
            d_[j] = at(n - 1, j);
            at(n - 1, j) = 0.0;
        }
        at(n - 1, n - 1) = 1.0;
        e_[0] = 0.0;
    }

    void tql2() {
        const int n = n_;
        for (int i = 1; i < n; ++i) e_[i - 1] = e_[i];
        e_[n - 1] = 0.0;

        double f = 0.0;
        double tst1 = 0.0;
        const double eps = std::ldexp(1.0, -52);
        for (int l = 0; l < n; ++l) {
            tst1 = std::fmax(tst1, std::fabs(d_[l]) + std::fabs(e_[l]));
            int m = l;
            while (m < n) {
                if (std::fabs(e_[m]) <= eps * tst1) break;
                ++m;
            }
            if (m > l) {
                int iter = 0;
                do {
                    if (++iter > 64)
                        fail(ErrorCode::numeric, "tql2: no convergence after 64 sweeps");
                    double g = d_[l];
                    double p = (d_[l + 1] - g) / (2.0 * e_[l]);
                    double r = std::hypot(p, 1.0);
                    if (p < 0) r = -r;
                    d_[l] = e_[l] / (p + r);
                    d_[l + 1] = e_[l] * (p + r);
                    double dl1 = d_[l + 1];
                    double h = g - d_[l];
                    for (int i = l + 2; i < n; ++i) d_[i] -= h;
                    f += h;

                    p = d_[m];
                    double c = 1.0;
                    double c2 = c;
                    double c3 = c;
                    double el1 = e_[l + 1];
                    double s = 0.0;
                    double s2 = 0.0;
                    for (int i = m - 1; i >= l; --i) {
                        c3 = c2;
                        c2 = c;
                        s2 = s;
                        g = c * e_[i];
                        h = c * p;
                        r = std::hypot(p, e_[i]);
                        e_[i + 1] = s * r;
                        s = e_[i] / r;
                        c = p / r;
                        p = c * d_[i] - s * g;
                        d_[i + 1] = h + s * (c * g + s * d_[i]);
                        for (int k = 0; k < n; ++k) {
                            h = at(k, i + 1);
                            at(k, i + 1) = s * at(k, i) + c * h;
                            at(k, i) = c * at(k, i) - s * h;
                        }
                    }
                    p = -s * s2 * c3 * el1 * e_[l] / dl1;
                    e_[l] = s * p;
                    d_[l] = c * p;
                } while (std::fabs(e_[l]) > eps * tst1);
            }
            d_[l] += f;
            e_[l] = 0.0;
        }
    }

    int n_;
    std::vector<double> v_;
    std::vector<double> d_;
    std::vector<double> e_;
};

} // namespace

std::pair<double, Vec> hermitian_max_eigen_matrix(const std::vector<Cx>& m, int n) {
    if (n < 1 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != m.size())
        fail(ErrorCode::invalid_argument, "hermitian_max_eigen: matrix is not n x n");

    auto entry = [&](int r, int c) {
        return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(c)];
    };

    // Real symmetric embedding of H = A + iB: M = [[A, -B], [B, A]].
    // Symmetrize first so entrywise noise within the contract cannot break
    // the symmetry the solver relies on.
    const int nn = 2 * n;
    std::vector<double> big(static_cast<std::size_t>(nn) * static_cast<std::size_t>(nn), 0.0);
    auto put = [&](int r, int c, double val) {
        big[static_cast<std::size_t>(r) * static_cast<std::size_t>(nn) +
            static_cast<std::size_t>(c)] = val;
    };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Cx h = (entry(r, c) + std::conj(entry(c, r))) * 0.5;
            put(r, c, h.real());
            put(n + r, n + c, h.real());
            put(r, n + c, -h.imag());
            put(n + r, c, h.imag());
        }

    SymmetricEigen solver(std::move(big), nn);
    const auto& vals = solver.eigenvalues();
    int best = 0;
    for (int i = 1; i < nn; ++i)
        if (vals[static_cast<std::size_t>(i)] > vals[static_cast<std::size_t>(best)]) best = i;
    const double lambda = vals[static_cast<std::size_t>(best)];

    Vec u(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        u[static_cast<std::size_t>(j)] = Cx(solver.vec(j, best), solver.vec(n + j, best));

    double un = norm(u);
    if (un < 1e-14)
        fail(ErrorCode::numeric, "hermitian_max_eigen: degenerate eigenvector");
    for (auto& z : u) z /= un;

    // Phase convention: largest coordinate real positive.
    int big_idx = 0;
    double big_mod = 0.0;
    for (int j = 0; j < n; ++j) {
        double mod = std::abs(u[static_cast<std::size_t>(j)]);
        if (mod > big_mod) {
            big_mod = mod;
            big_idx = j;
        }
    }
    Cx pivot = u[static_cast<std::size_t>(big_idx)];
    if (pivot != Cx(0.0, 0.0)) {
        Cx phase = std::conj(pivot) / std::abs(pivot);
        if (phase != Cx(1.0, 0.0))
            for (auto& z : u) z *= phase;
    }
    return {lambda, u};
}

std::pair<double, Vec> hermitian_max_eigen(const TruncatedOperator& H) {
    const int n = H.dim();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (std::abs(H.entry(r, c) - std::conj(H.entry(c, r))) > 1e-10)
                fail(ErrorCode::contract,
                     "hermitian_max_eigen: input is not Hermitian within 1e-10 at entry (" +
                         std::to_string(r) + "," + std::to_string(c) + ")");

    auto [lambda, u] = hermitian_max_eigen_matrix(H.matrix(), n);

    // Residual contract, relative to the spectral scale.
    Vec hu = H.apply(u);
    double res = 0.0;
    for (int j = 0; j < n; ++j)
        res += std::norm(hu[static_cast<std::size_t>(j)] - lambda * u[static_cast<std::size_t>(j)]);
    res = std::sqrt(res);
    double scale = std::fmax(1.0, std::fabs(lambda));
    for (int r = 0; r < n; ++r) scale = std::fmax(scale, std::abs(H.entry(r, r)));
    if (res > 1e-8 * scale)
        fail(ErrorCode::numeric, "hermitian_max_eigen: residual " + std::to_string(res) +
                                     " exceeds contract");
    return {lambda, u};
}

} // namespace disklab
