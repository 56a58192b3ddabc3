#ifndef MATFUNC_POLYNOMIAL_HPP
#define MATFUNC_POLYNOMIAL_HPP

#include <complex>
#include <vector>

#include "matfunc/errors.hpp"

namespace matfunc {

/// Dense complex polynomial in the monomial basis, coeffs[m] = coefficient
/// of z^m.  Normalized form: trailing coefficient nonzero, or the single
/// element 0 for the zero polynomial (degree -1).
class Polynomial {
public:
    Polynomial() : coeffs_{cx(0.0)} {}
    explicit Polynomial(std::vector<cx> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({cx(1.0)}); }
    static Polynomial identity() { return Polynomial({cx(0.0), cx(1.0)}); }  // z
    /// The monic linear factor z - a.
    static Polynomial from_root(cx a) { return Polynomial({-a, cx(1.0)}); }

    const std::vector<cx>& coeffs() const { return coeffs_; }
    int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cx(0.0); }
    /// Coefficient of z^m, zero beyond the stored range.
    cx coeff(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : cx(0.0); }

private:
    std::vector<cx> coeffs_;
};

cx poly_eval(const Polynomial& p, cx z);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& p, cx c);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& p, int e);
Polynomial poly_derivative(const Polynomial& p);

/// First `count` Taylor coefficients of p at `center`, via repeated
/// synthetic division by (z - center).
std::vector<cx> taylor_at(const Polynomial& p, cx center, std::size_t count);

/// Truncated Taylor expansion around a fixed center; order == coeffs.size().
struct PowerSeries {
    cx center = cx(0.0);
    std::vector<cx> coeffs;

    std::size_t order() const { return coeffs.size(); }
};

/// Truncated Cauchy product; both series must share a center.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// Series t with s*t == 1 up to the truncation order.  Throws
/// SingularSeriesError when the constant term is zero.
PowerSeries series_reciprocal(const PowerSeries& s);

}  // namespace matfunc

#endif
