#include "matfunc/odekernel.hpp"

#include <cmath>
#include <stdexcept>

#include "matfunc/errors.hpp"
#include "matfunc/hermite.hpp"

namespace matfunc {

ExpPoly::ExpPoly(std::vector<Term> terms, double merge_tol) {
    for (Term& t : terms) {
        if (t.r.is_zero()) continue;
        bool merged = false;
        for (Term& existing : terms_) {
            if (std::abs(existing.a - t.a) <= merge_tol) {
                existing.r = poly_add(existing.r, t.r);
                merged = true;
                break;
            }
        }
        if (!merged) terms_.push_back(std::move(t));
    }
    // A merge can cancel a polynomial part entirely.
    std::erase_if(terms_, [](const Term& t) { return t.r.is_zero(); });
}

double ExpPoly::max_coeff_abs() const {
    double m = 0.0;
    for (const Term& t : terms_)
        for (cx c : t.r.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

cx exppoly_eval(const ExpPoly& g, double t) {
    cx acc(0.0);
    for (const ExpPoly::Term& term : g.terms())
        acc += std::exp(term.a * t) * poly_eval(term.r, cx(t));
    return acc;
}

ExpPoly exppoly_derivative(const ExpPoly& g) {
    std::vector<ExpPoly::Term> out;
    out.reserve(g.terms().size());
    for (const ExpPoly::Term& term : g.terms())
        out.push_back({term.a, poly_add(poly_derivative(term.r), poly_scale(term.r, term.a))});
    return ExpPoly(std::move(out));
}

ExpPoly exppoly_add(const ExpPoly& a, const ExpPoly& b, double merge_tol) {
    std::vector<ExpPoly::Term> out = a.terms();
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return ExpPoly(std::move(out), merge_tol);
}

ExpPoly exppoly_scale(const ExpPoly& g, cx c) {
    std::vector<ExpPoly::Term> out;
    out.reserve(g.terms().size());
    for (const ExpPoly::Term& term : g.terms()) out.push_back({term.a, poly_scale(term.r, c)});
    return ExpPoly(std::move(out));
}

std::vector<ExpPoly> kernel_basis(const AnnihilatorSpec& spec) {
    const int d = spec.degree();
    const CoeffTable table = coeff_table(spec);

    // Polynomial part (in t) for each root p and each monomial index m:
    // coefficient of t^j is sum_{q>=j} b_{p,q-j}/j! * c_{p,q,m}, where
    // c_{p,q,m} expands (z - a_p)^q Q_p(z).
    std::vector<std::vector<std::vector<cx>>> rcoef(
        std::size_t(spec.k()),
        std::vector<std::vector<cx>>(std::size_t(d)));
    for (int p = 0; p < spec.k(); ++p) {
        const Root& rp = spec.root(p);
        Polynomial term = cofactor(spec, p);  // (z - a_p)^q Q_p(z), q = 0
        for (int q = 0; q <= rp.alpha; ++q) {
            if (q > 0) term = poly_mul(term, Polynomial::from_root(rp.a));
            double factorial = 1.0;
            for (int j = 0; j <= q; ++j) {
                if (j > 0) factorial *= double(j);
                const cx weight = table.b[std::size_t(p)][std::size_t(q - j)] / factorial;
                for (int m = 0; m <= term.degree(); ++m) {
                    auto& rc = rcoef[std::size_t(p)][std::size_t(m)];
                    if (rc.size() <= std::size_t(j)) rc.resize(std::size_t(j) + 1, cx(0.0));
                    rc[std::size_t(j)] += weight * term.coeff(std::size_t(m));
                }
            }
        }
    }

    // Merge tolerance below the spec's guaranteed root separation, so
    // distinct exponents never collapse.
    const double merge_tol = 1e-8 * (1.0 + spec.max_root_abs());
    std::vector<ExpPoly> basis;
    basis.reserve(std::size_t(d));
    for (int m = 0; m < d; ++m) {
        std::vector<ExpPoly::Term> terms;
        for (int p = 0; p < spec.k(); ++p) {
            auto& rc = rcoef[std::size_t(p)][std::size_t(m)];
            if (rc.empty()) continue;
            terms.push_back({spec.root(p).a, Polynomial(std::move(rc))});
        }
        basis.emplace_back(std::move(terms), merge_tol);
    }
    return basis;
}

namespace {

// 7-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr double kGlNode[7] = {
    -0.94910791234275848627, -0.74153118559939446008, -0.40584515137739718416,
    0.0,
    0.40584515137739718416,  0.74153118559939446008,  0.94910791234275848627};
constexpr double kGlWeight[7] = {
    0.12948496616887064659, 0.27970539148927658912, 0.38183005050511831246,
    0.41795918367346895916,
    0.38183005050511831246, 0.27970539148927658912, 0.12948496616887064659};

cx gl7(const std::function<cx(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    cx acc(0.0);
    for (int i = 0; i < 7; ++i) acc += kGlWeight[i] * f(mid + half * kGlNode[i]);
    return half * acc;
}

cx adaptive_panel(const std::function<cx(double)>& f, double lo, double hi, cx whole, double tol,
                  int depth, int max_depth) {
    const double mid = 0.5 * (lo + hi);
    const cx left = gl7(f, lo, mid);
    const cx right = gl7(f, mid, hi);
    const cx split = left + right;
    const double diff = std::abs(split - whole);
    if (diff < tol) return split;
    if (depth >= max_depth)
        throw QuadratureError("adaptive quadrature hit max depth", split, diff);
    return adaptive_panel(f, lo, mid, left, 0.5 * tol, depth + 1, max_depth) +
           adaptive_panel(f, mid, hi, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

cx integrate_adaptive(const std::function<cx(double)>& f, double lo, double hi, double tol,
                      int max_depth) {
    if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be > 0");
    if (lo == hi) return cx(0.0);
    return adaptive_panel(f, lo, hi, gl7(f, lo, hi), tol, 0, max_depth);
}

cx solve_ivp(const IvpProblem& prob, double t, double quad_tol) {
    return IvpSolver(prob).solve(t, quad_tol);
}

IvpSolver::IvpSolver(IvpProblem prob) : prob_(std::move(prob)), basis_(kernel_basis(prob_.spec)) {
    if (prob_.init.size() != std::size_t(prob_.spec.degree()))
        throw std::invalid_argument("initial data length must equal the degree of Q");
}

cx IvpSolver::solve(double t, double quad_tol) const {
    if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
    cx u(0.0);
    for (std::size_t j = 0; j < prob_.init.size(); ++j)
        u += prob_.init[j] * exppoly_eval(basis_[j], t);
    if (prob_.forcing.is_zero() || t == 0.0) return u;

    const ExpPoly& tail = basis_.back();
    const ForcingFn& h = prob_.forcing.fn;
    auto integrand = [&](double y) { return exppoly_eval(tail, t - y) * h(y); };
    // Signed convention for t < 0: integral_0^t = -integral_t^0.
    if (t > 0.0)
        u += integrate_adaptive(integrand, 0.0, t, quad_tol);
    else
        u -= integrate_adaptive(integrand, t, 0.0, quad_tol);
    return u;
}

}  // namespace matfunc
