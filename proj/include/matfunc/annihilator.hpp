#ifndef MATFUNC_ANNIHILATOR_HPP
#define MATFUNC_ANNIHILATOR_HPP

#include <vector>

#include "matfunc/matrix.hpp"
#include "matfunc/polynomial.hpp"

namespace matfunc {

/// One distinct root a of Q together with its exponent: Q carries the
/// factor (z - a)^(alpha + 1).
struct Root {
    cx a;
    int alpha = 0;
};

/// Q represented by its distinct roots and multiplicities.  Construction
/// rejects coincident roots and flags near-confluent ones (the Taylor
/// coefficients of 1/Q_p blow up like separation^-(alpha+1+n)).
class AnnihilatorSpec {
public:
    explicit AnnihilatorSpec(std::vector<Root> roots, double separation_rtol = 1e-8);

    int k() const { return static_cast<int>(roots_.size()); }
    int degree() const { return d_; }
    const std::vector<Root>& roots() const { return roots_; }
    const Root& root(int p) const { return roots_.at(std::size_t(p)); }

    double max_root_abs() const { return max_abs_; }
    /// Smallest pairwise root distance; +inf for k == 1.
    double min_separation() const { return min_sep_; }
    bool near_confluent() const { return near_confluent_; }

private:
    std::vector<Root> roots_;
    int d_ = 0;
    double max_abs_ = 0.0;
    double min_sep_ = 0.0;
    bool near_confluent_ = false;
};

/// Expanded monic product of the (z - a_p)^(alpha_p + 1) factors.
Polynomial build_q(const AnnihilatorSpec& spec);

/// Q with its p-th factor removed; the constant 1 when k == 1.
Polynomial cofactor(const AnnihilatorSpec& spec, int p);

/// Frobenius norm of Q(A), with Q applied in factored form.  Policy on
/// how small "annihilated" must be lives at the call sites.
double verify_annihilates(const Matrix& a, const AnnihilatorSpec& spec);

/// Monic characteristic polynomial by the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const Matrix& a);

/// All roots of p (with multiplicity) by Durand-Kerner simultaneous
/// iteration.  Throws RootIterationError when the iterate neither settles
/// nor lands on small residuals.
std::vector<cx> polynomial_roots(const Polynomial& p);

/// Annihilator recovered from the characteristic polynomial: find its
/// roots, then single-linkage cluster at cluster_tol * (1 + max|root|);
/// each cluster becomes one root at the cluster mean with alpha + 1 equal
/// to the cluster size.
AnnihilatorSpec spec_from_matrix(const Matrix& a, double cluster_tol = 1e-6);

}  // namespace matfunc

#endif
