#ifndef MATFUNC_HERMITE_HPP
#define MATFUNC_HERMITE_HPP

#include <vector>

#include "matfunc/annihilator.hpp"
#include "matfunc/entire_function.hpp"
#include "matfunc/polynomial.hpp"

namespace matfunc {

/// Taylor coefficients b[p][n] of 1/Q_p at a_p, n = 0..alpha_p.
struct CoeffTable {
    std::vector<std::vector<cx>> b;
};

/// b_{p,0..n_max} by the closed form: b_{p,n} = (-1)^n times the sum over
/// multi-indices beta supported on j != p with |beta| = n of
/// prod_j binom(alpha_j + beta_j, alpha_j) / (a_p - a_j)^(alpha_j+1+beta_j).
/// For k == 1 this is (1, 0, 0, ...).
std::vector<cx> taylor_coeffs_closed_form(const AnnihilatorSpec& spec, int p, int n_max);

/// Same coefficients through an independent route: Taylor-shift the
/// expanded cofactor to a_p and take the series reciprocal.
std::vector<cx> taylor_coeffs_series(const AnnihilatorSpec& spec, int p, int n_max);

/// Closed-form table with n up to alpha_p per root.
CoeffTable coeff_table(const AnnihilatorSpec& spec);

/// The interpolant P(f(z), z): degree < d polynomial matching f^(j)(a_p)
/// for all p and j <= alpha_p.  Stored both as centered terms
/// c[p][q] * (z - a_p)^q * Q_p(z) and as the expanded monomial polynomial.
class HermiteInterpolant {
public:
    HermiteInterpolant(AnnihilatorSpec spec, std::vector<std::vector<cx>> c, Polynomial expanded)
        : spec_(std::move(spec)), c_(std::move(c)), expanded_(std::move(expanded)) {}

    const AnnihilatorSpec& spec() const { return spec_; }
    /// c[p][q], the coefficient of (z - a_p)^q * Q_p(z).
    const std::vector<std::vector<cx>>& term_coeffs() const { return c_; }
    const Polynomial& expanded() const { return expanded_; }

private:
    AnnihilatorSpec spec_;
    std::vector<std::vector<cx>> c_;
    Polynomial expanded_;
};

/// c_{p,q} = sum_{j<=q} f^(j)(a_p)/j! * b_{p,q-j}, with b from the closed form.
HermiteInterpolant hermite_interpolant(const EntireFunction& f, const AnnihilatorSpec& spec);

}  // namespace matfunc

#endif
