#ifndef MATFUNC_MATRIX_HPP
#define MATFUNC_MATRIX_HPP

#include <vector>

#include "matfunc/polynomial.hpp"

namespace matfunc {

/// Dense square complex matrix, row-major.
class Matrix {
public:
    Matrix() : n_(0) {}
    explicit Matrix(int n) : n_(check_dim(n)), a_(std::size_t(n) * n, cx(0.0)) {}
    Matrix(int n, std::vector<cx> entries);

    static Matrix identity(int n);

    int n() const { return n_; }
    cx operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
    cx& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
    const std::vector<cx>& entries() const { return a_; }

private:
    static int check_dim(int n);
    int n_;
    std::vector<cx> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cx c, const Matrix& a);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
/// A - s*I.
Matrix shifted(const Matrix& a, cx s);

/// Horner evaluation of p at A; constant term times the identity.
Matrix mat_poly_eval(const Polynomial& p, const Matrix& a);

}  // namespace matfunc

#endif
