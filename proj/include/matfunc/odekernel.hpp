#ifndef MATFUNC_ODEKERNEL_HPP
#define MATFUNC_ODEKERNEL_HPP

#include <functional>
#include <vector>

#include "matfunc/annihilator.hpp"
#include "matfunc/polynomial.hpp"

namespace matfunc {

/// Finite sum of e^(a t) * r(t) terms with polynomial r and pairwise
/// distinct exponents a; closed under differentiation.
class ExpPoly {
public:
    struct Term {
        cx a;
        Polynomial r;
    };

    ExpPoly() = default;
    /// Merges terms whose exponents coincide within merge_tol and drops
    /// terms with zero polynomial part.
    explicit ExpPoly(std::vector<Term> terms, double merge_tol = 0.0);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Largest coefficient modulus over all polynomial parts.
    double max_coeff_abs() const;

private:
    std::vector<Term> terms_;
};

cx exppoly_eval(const ExpPoly& g, double t);
ExpPoly exppoly_derivative(const ExpPoly& g);
ExpPoly exppoly_add(const ExpPoly& a, const ExpPoly& b, double merge_tol = 0.0);
ExpPoly exppoly_scale(const ExpPoly& g, cx c);

/// The d kernel functions g_0..g_{d-1}: coefficient functions of
/// P(e^{tz}, z) in powers of z.  They form a fundamental system for
/// Q(d/dt)u = 0 with g_j^(i)(0) = delta_ij.
std::vector<ExpPoly> kernel_basis(const AnnihilatorSpec& spec);

using ForcingFn = std::function<cx(double)>;

/// Right-hand side of Q(d/dt)u = h.  The designated zero forcing skips
/// quadrature entirely.
struct Forcing {
    ForcingFn fn;  // empty means identically zero

    static Forcing zero() { return Forcing{}; }
    static Forcing of(ForcingFn f) { return Forcing{std::move(f)}; }
    bool is_zero() const { return !fn; }
};

struct IvpProblem {
    AnnihilatorSpec spec;
    std::vector<cx> init;  // u(0), u'(0), ..., u^(d-1)(0)
    Forcing forcing;
};

/// Adaptive composite Gauss-Legendre on [lo, hi]: 7-point panels, bisect
/// until the whole-panel and split-pair estimates differ by less than the
/// local tolerance.  Throws QuadratureError past max_depth.
cx integrate_adaptive(const std::function<cx(double)>& f, double lo, double hi, double tol,
                      int max_depth = 40);

/// u(t) = sum_j u^(j)(0) g_j(t) + integral_0^t g_{d-1}(t-y) h(y) dy.
/// Negative t integrates with the standard signed convention.
cx solve_ivp(const IvpProblem& prob, double t, double quad_tol = 1e-10);

/// Same solver with the kernel basis precomputed once, for grids.
class IvpSolver {
public:
    explicit IvpSolver(IvpProblem prob);
    cx solve(double t, double quad_tol = 1e-10) const;
    const std::vector<ExpPoly>& basis() const { return basis_; }

private:
    IvpProblem prob_;
    std::vector<ExpPoly> basis_;
};

}  // namespace matfunc

#endif
