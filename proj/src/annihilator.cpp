#include "matfunc/annihilator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "matfunc/errors.hpp"

namespace matfunc {

AnnihilatorSpec::AnnihilatorSpec(std::vector<Root> roots, double separation_rtol)
    : roots_(std::move(roots)) {
    if (roots_.empty()) throw std::invalid_argument("annihilator needs at least one root");
    for (const Root& r : roots_) {
        if (r.alpha < 0) throw std::invalid_argument("root exponent must be >= 0");
        if (!(std::isfinite(r.a.real()) && std::isfinite(r.a.imag())))
            throw std::invalid_argument("root not finite");
        d_ += r.alpha + 1;
        max_abs_ = std::max(max_abs_, std::abs(r.a));
    }
    min_sep_ = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < roots_.size(); ++p)
        for (std::size_t j = p + 1; j < roots_.size(); ++j)
            min_sep_ = std::min(min_sep_, std::abs(roots_[p].a - roots_[j].a));
    const double scale = 1.0 + max_abs_;
    if (min_sep_ <= separation_rtol * scale)
        throw std::invalid_argument("annihilator roots not pairwise distinct at tolerance");
    near_confluent_ = min_sep_ <= 1e-3 * scale;
}

Polynomial build_q(const AnnihilatorSpec& spec) {
    Polynomial q = Polynomial::one();
    for (const Root& r : spec.roots())
        q = poly_mul(q, poly_pow(Polynomial::from_root(r.a), r.alpha + 1));
    return q;
}

Polynomial cofactor(const AnnihilatorSpec& spec, int p) {
    if (p < 0 || p >= spec.k()) throw std::out_of_range("cofactor: root index out of range");
    Polynomial q = Polynomial::one();
    for (int j = 0; j < spec.k(); ++j) {
        if (j == p) continue;
        q = poly_mul(q, poly_pow(Polynomial::from_root(spec.root(j).a), spec.root(j).alpha + 1));
    }
    return q;
}

double verify_annihilates(const Matrix& a, const AnnihilatorSpec& spec) {
    Matrix acc = Matrix::identity(a.n());
    for (const Root& r : spec.roots()) {
        const Matrix factor = shifted(a, r.a);
        for (int i = 0; i <= r.alpha; ++i) acc = acc * factor;
    }
    return frobenius_norm(acc);
}

Polynomial characteristic_polynomial(const Matrix& a) {
    const int n = a.n();
    std::vector<cx> c(std::size_t(n) + 1, cx(0.0));
    c[n] = cx(1.0);
    Matrix m(n);  // M_0 = 0
    for (int step = 1; step <= n; ++step) {
        m = a * m;
        for (int i = 0; i < n; ++i) m(i, i) += c[n - step + 1];
        cx tr(0.0);
        Matrix am = a * m;
        for (int i = 0; i < n; ++i) tr += am(i, i);
        c[n - step] = -tr / double(step);
    }
    return Polynomial(std::move(c));
}

std::vector<cx> polynomial_roots(const Polynomial& p) {
    const int deg = p.degree();
    if (deg < 1) throw std::invalid_argument("polynomial_roots: degree must be >= 1");
    const cx lead = p.coeffs().back();

    // Cauchy bound for the starting circle radius.
    double radius = 0.0;
    for (int m = 0; m < deg; ++m) radius = std::max(radius, std::abs(p.coeff(m) / lead));
    radius = 1.0 + radius;

    std::vector<cx> x(deg);
    const double offset = std::numbers::phi;  // irrational, avoids symmetry traps
    for (int i = 0; i < deg; ++i) {
        double angle = 2.0 * std::numbers::pi * (double(i) + offset) / double(deg);
        x[i] = radius * cx(std::cos(angle), std::sin(angle));
    }

    const int max_iters = 500;
    bool settled = false;
    for (int iter = 0; iter < max_iters && !settled; ++iter) {
        double move = 0.0;
        double maxroot = 0.0;
        for (int i = 0; i < deg; ++i) {
            cx denom = lead;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= x[i] - x[j];
            cx step = poly_eval(p, x[i]) / denom;
            x[i] -= step;
            move = std::max(move, std::abs(step));
            maxroot = std::max(maxroot, std::abs(x[i]));
        }
        settled = move < 1e-13 * (1.0 + maxroot);
    }
    if (!settled) {
        // Clustered roots stall around eps^(1/m) movement and never meet the
        // step criterion; accept the iterate when the residuals are tiny.
        double maxroot = 0.0;
        for (cx r : x) maxroot = std::max(maxroot, std::abs(r));
        double scale = std::abs(lead) * std::pow(1.0 + maxroot, deg);
        for (cx r : x) {
            if (std::abs(poly_eval(p, r)) <= 1e-8 * scale) continue;
            throw RootIterationError("polynomial_roots: Durand-Kerner did not converge", x);
        }
    }
    return x;
}

AnnihilatorSpec spec_from_matrix(const Matrix& a, double cluster_tol) {
    std::vector<cx> roots = polynomial_roots(characteristic_polynomial(a));

    double maxroot = 0.0;
    for (cx r : roots) maxroot = std::max(maxroot, std::abs(r));
    const double tol = cluster_tol * (1.0 + maxroot);

    // Single-linkage clustering via union-find.
    const int n = static_cast<int>(roots.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= tol) parent[find(i)] = find(j);

    std::vector<Root> merged;
    std::vector<int> seen(n, -1);
    for (int i = 0; i < n; ++i) {
        int rep = find(i);
        if (seen[rep] < 0) {
            seen[rep] = static_cast<int>(merged.size());
            merged.push_back(Root{cx(0.0), -1});
        }
        Root& entry = merged[std::size_t(seen[rep])];
        entry.a += roots[std::size_t(i)];
        entry.alpha += 1;
    }
    for (Root& r : merged) r.a /= double(r.alpha + 1);
    return AnnihilatorSpec(std::move(merged));
}

}  // namespace matfunc
