#ifndef MATFUNC_TESTS_SUPPORT_HPP
#define MATFUNC_TESTS_SUPPORT_HPP

// Test-only oracles and generators, independent of the library paths they
// check: truncated-Taylor expm, RK4 on the companion system, Fornberg
// finite-difference weights, and small dense inversion for similarity
// transforms.

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "matfunc/annihilator.hpp"
#include "matfunc/matrix.hpp"
#include "matfunc/odekernel.hpp"
#include "matfunc/polynomial.hpp"

namespace matfunc::test {

using Rng = std::mt19937_64;

inline cx random_unit_box(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return cx(u(rng), u(rng));
}

/// Uniform in the disk of the given radius.
inline cx random_in_disk(Rng& rng, double radius) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        cx z(u(rng), u(rng));
        if (std::abs(z) <= 1.0) return radius * z;
    }
}

inline Polynomial random_poly(Rng& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<cx> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_unit_box(rng));
    return Polynomial(std::move(coeffs));
}

/// Random spec with pairwise separation >= min_sep and |a_p| <= max_abs.
inline AnnihilatorSpec random_spec(Rng& rng, int max_k, int max_alpha, double min_sep,
                                   double max_abs, int max_degree = 0) {
    std::uniform_int_distribution<int> kd(1, max_k);
    std::uniform_int_distribution<int> ad(0, max_alpha);
    while (true) {
        const int k = kd(rng);
        std::vector<Root> roots;
        bool ok = true;
        for (int p = 0; p < k && ok; ++p) {
            Root r{cx(0.0), ad(rng)};
            int tries = 0;
            do {
                r.a = random_in_disk(rng, max_abs);
                ok = true;
                for (const Root& prev : roots)
                    if (std::abs(prev.a - r.a) < min_sep) ok = false;
            } while (!ok && ++tries < 64);
            roots.push_back(r);
        }
        if (!ok) continue;
        AnnihilatorSpec spec(std::move(roots));
        if (max_degree > 0 && spec.degree() > max_degree) continue;
        return spec;
    }
}

inline Matrix random_matrix(Rng& rng, int n, double target_fnorm) {
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = random_unit_box(rng);
    const double norm = frobenius_norm(a);
    return cx(target_fnorm / norm) * a;
}

/// Truncated Taylor expm oracle: sum (tA)^m / m! with the tail bound
/// ||tA||^(M+1)/(M+1)! below tail_tol.
inline Matrix taylor_expm(const Matrix& a, double t = 1.0, double tail_tol = 1e-12) {
    const double norm = frobenius_norm(a) * std::abs(t);
    Matrix term = Matrix::identity(a.n());
    Matrix sum = term;
    double bound = 1.0;
    for (int m = 1; m < 200; ++m) {
        term = cx(t / double(m)) * (a * term);
        sum = sum + term;
        bound *= norm / double(m + 1);
        if (bound < tail_tol && m > 2) break;
    }
    return sum;
}

/// Gauss-Jordan inverse with partial pivoting (test scale only).
inline Matrix inverse(const Matrix& a) {
    const int n = a.n();
    Matrix work = a;
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
        if (std::abs(work(pivot, col)) == 0.0) throw std::runtime_error("singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const cx scale = cx(1.0) / work(col, col);
        for (int j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const cx factor = work(r, col);
            if (factor == cx(0.0)) continue;
            for (int j = 0; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

inline Matrix jordan_block(cx eigenvalue, int size) {
    Matrix b(size);
    for (int i = 0; i < size; ++i) {
        b(i, i) = eigenvalue;
        if (i + 1 < size) b(i, i + 1) = cx(1.0);
    }
    return b;
}

inline Matrix block_diag(const std::vector<Matrix>& blocks) {
    int n = 0;
    for (const Matrix& b : blocks) n += b.n();
    Matrix out(n);
    int off = 0;
    for (const Matrix& b : blocks) {
        for (int i = 0; i < b.n(); ++i)
            for (int j = 0; j < b.n(); ++j) out(off + i, off + j) = b(i, j);
        off += b.n();
    }
    return out;
}

/// T A T^-1 with T = I + scale * (random box), well conditioned for small scale.
inline Matrix random_similarity(Rng& rng, const Matrix& a, double scale = 0.2) {
    const int n = a.n();
    Matrix t = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) += scale * random_unit_box(rng);
    return t * a * inverse(t);
}

/// |x - y| <= tol * (1 + |y|) entrywise.
inline bool entrywise_close(const Matrix& x, const Matrix& y, double tol,
                            double* worst = nullptr) {
    bool ok = true;
    double w = 0.0;
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j) {
            const double err = std::abs(x(i, j) - y(i, j)) / (1.0 + std::abs(y(i, j)));
            w = std::max(w, err);
            if (err > tol) ok = false;
        }
    if (worst) *worst = std::max(*worst, w);
    return ok;
}

inline double rel_err(cx got, cx want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

/// Classical RK4 on the companion system of Q(d/dt)u = h: the state is
/// (u, u', ..., u^(d-1)).  Returns u at the requested times, which must be
/// reachable by whole steps.
inline std::vector<cx> companion_rk4(const AnnihilatorSpec& spec, const std::vector<cx>& init,
                                     const std::function<cx(double)>& h, double step,
                                     const std::vector<double>& times) {
    const int d = spec.degree();
    const Polynomial q = build_q(spec);
    std::vector<cx> low(q.coeffs().begin(), q.coeffs().end() - 1);  // q monic

    auto deriv = [&](double t, const std::vector<cx>& y) {
        std::vector<cx> dy(std::size_t(d));
        for (int i = 0; i + 1 < d; ++i) dy[std::size_t(i)] = y[std::size_t(i) + 1];
        cx top = h ? h(t) : cx(0.0);
        for (int i = 0; i < d; ++i) top -= low[std::size_t(i)] * y[std::size_t(i)];
        dy[std::size_t(d) - 1] = top;
        return dy;
    };

    std::vector<cx> y = init;
    std::vector<cx> out;
    double t = 0.0;
    std::size_t next = 0;
    auto maybe_emit = [&] {
        while (next < times.size() && t >= times[next] - 0.25 * step) {
            out.push_back(y[0]);
            ++next;
        }
    };
    maybe_emit();
    while (next < times.size()) {
        const auto k1 = deriv(t, y);
        std::vector<cx> tmp(std::size_t(d));
        for (int i = 0; i < d; ++i) tmp[std::size_t(i)] = y[std::size_t(i)] + 0.5 * step * k1[std::size_t(i)];
        const auto k2 = deriv(t + 0.5 * step, tmp);
        for (int i = 0; i < d; ++i) tmp[std::size_t(i)] = y[std::size_t(i)] + 0.5 * step * k2[std::size_t(i)];
        const auto k3 = deriv(t + 0.5 * step, tmp);
        for (int i = 0; i < d; ++i) tmp[std::size_t(i)] = y[std::size_t(i)] + step * k3[std::size_t(i)];
        const auto k4 = deriv(t + step, tmp);
        for (int i = 0; i < d; ++i)
            y[std::size_t(i)] += (step / 6.0) * (k1[std::size_t(i)] + 2.0 * k2[std::size_t(i)] +
                                                 2.0 * k3[std::size_t(i)] + k4[std::size_t(i)]);
        t += step;
        maybe_emit();
    }
    return out;
}

/// Fornberg weights: w[j] such that f^(order)(x0) ~= sum w[j] f(grid[j]).
inline std::vector<double> fd_weights(double x0, const std::vector<double>& grid, int order) {
    const int n = static_cast<int>(grid.size());
    const int m = order;
    std::vector<std::vector<double>> c(std::size_t(n), std::vector<double>(std::size_t(m) + 1, 0.0));
    double c1 = 1.0;
    double c4 = grid[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = grid[std::size_t(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = grid[std::size_t(i)] - grid[std::size_t(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int s = mn; s >= 1; --s)
                    c[std::size_t(i)][std::size_t(s)] =
                        c1 * (s * c[std::size_t(i) - 1][std::size_t(s) - 1] -
                              c5 * c[std::size_t(i) - 1][std::size_t(s)]) /
                        c2;
                c[std::size_t(i)][0] = -c1 * c5 * c[std::size_t(i) - 1][0] / c2;
            }
            for (int s = mn; s >= 1; --s)
                c[std::size_t(j)][std::size_t(s)] =
                    (c4 * c[std::size_t(j)][std::size_t(s)] - s * c[std::size_t(j)][std::size_t(s) - 1]) / c3;
            c[std::size_t(j)][0] = c4 * c[std::size_t(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> out(std::size_t(n));
    for (int j = 0; j < n; ++j) out[std::size_t(j)] = c[std::size_t(j)][std::size_t(m)];
    return out;
}

}  // namespace matfunc::test

#endif
