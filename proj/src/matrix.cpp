#include "matfunc/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace matfunc {

int Matrix::check_dim(int n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    return n;
}

Matrix::Matrix(int n, std::vector<cx> entries) : n_(check_dim(n)), a_(std::move(entries)) {
    if (a_.size() != std::size_t(n_) * n_)
        throw std::invalid_argument("matrix entry count does not match dimension");
    for (cx v : a_)
        if (!(std::isfinite(v.real()) && std::isfinite(v.imag())))
            throw std::invalid_argument("matrix entry not finite");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = cx(1.0);
    return m;
}

namespace {
void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("matrix dimensions differ");
}
}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix out(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix out(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    const int n = a.n();
    Matrix out(n);
    // i-k-j order keeps both row accesses contiguous.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cx aik = a(i, k);
            if (aik == cx(0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator*(cx c, const Matrix& a) {
    Matrix out(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out(i, j) = c * a(i, j);
    return out;
}

double frobenius_norm(const Matrix& a) {
    double acc = 0.0;
    for (cx v : a.entries()) acc += std::norm(v);
    return std::sqrt(acc);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (cx v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

Matrix shifted(const Matrix& a, cx s) {
    Matrix out = a;
    for (int i = 0; i < a.n(); ++i) out(i, i) -= s;
    return out;
}

Matrix mat_poly_eval(const Polynomial& p, const Matrix& a) {
    const auto& c = p.coeffs();
    Matrix acc(a.n());
    for (int i = 0; i < a.n(); ++i) acc(i, i) = c.back();
    for (std::size_t m = c.size() - 1; m-- > 0;) {
        acc = acc * a;
        for (int i = 0; i < a.n(); ++i) acc(i, i) += c[m];
    }
    return acc;
}

}  // namespace matfunc
