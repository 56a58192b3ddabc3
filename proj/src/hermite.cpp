#include "matfunc/hermite.hpp"

#include <stdexcept>

namespace matfunc {

namespace {

// binom(alpha + beta, alpha) by multiplicative recurrence; stays in double
// range at the degrees this library targets.
double binom_shifted(int alpha, int beta) {
    double acc = 1.0;
    for (int i = 1; i <= beta; ++i) acc *= double(alpha + i) / double(i);
    return acc;
}

void check_root_index(const AnnihilatorSpec& spec, int p) {
    if (p < 0 || p >= spec.k()) throw std::out_of_range("root index out of range");
}

}  // namespace

std::vector<cx> taylor_coeffs_closed_form(const AnnihilatorSpec& spec, int p, int n_max) {
    check_root_index(spec, p);
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

    std::vector<cx> out(std::size_t(n_max) + 1, cx(0.0));
    const cx ap = spec.root(p).a;

    // Indices j != p, each with precomputed 1/(a_p - a_j) and its alpha.
    std::vector<int> others;
    for (int j = 0; j < spec.k(); ++j)
        if (j != p) others.push_back(j);
    const int m = static_cast<int>(others.size());
    if (m == 0) {
        out[0] = cx(1.0);  // 1/Q_p == 1, empty product
        return out;
    }
    // Powers of 1/(a_p - a_j) up to exponent alpha_j + 1 + n_max, per j.
    std::vector<std::vector<cx>> inv_pow{std::size_t(m), std::vector<cx>{}};
    for (int i = 0; i < m; ++i) {
        const Root& rj = spec.root(others[std::size_t(i)]);
        const cx inv = cx(1.0) / (ap - rj.a);
        auto& pw = inv_pow[std::size_t(i)];
        pw.resize(std::size_t(rj.alpha + 1 + n_max) + 1);
        pw[0] = cx(1.0);
        for (std::size_t e = 1; e < pw.size(); ++e) pw[e] = pw[e - 1] * inv;
    }

    for (int n = 0; n <= n_max; ++n) {
        // Enumerate compositions beta of n into m parts with an odometer.
        std::vector<int> beta(std::size_t(m), 0);
        beta[0] = n;
        cx sum(0.0);
        while (true) {
            cx term(1.0);
            for (int i = 0; i < m; ++i) {
                const Root& rj = spec.root(others[std::size_t(i)]);
                term *= binom_shifted(rj.alpha, beta[std::size_t(i)]) *
                        inv_pow[std::size_t(i)][std::size_t(rj.alpha + 1 + beta[std::size_t(i)])];
            }
            sum += term;

            // Next composition: move one unit from the first nonzero slot.
            int i = 0;
            while (i < m && beta[std::size_t(i)] == 0) ++i;
            if (i == m - 1 || i == m) break;  // all mass in the last slot (or n == 0)
            int carry = beta[std::size_t(i)] - 1;
            beta[std::size_t(i)] = 0;
            beta[std::size_t(i + 1)] += 1;
            beta[0] = carry;
        }
        out[std::size_t(n)] = (n % 2 == 0 ? 1.0 : -1.0) * sum;
    }
    return out;
}

std::vector<cx> taylor_coeffs_series(const AnnihilatorSpec& spec, int p, int n_max) {
    check_root_index(spec, p);
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const cx ap = spec.root(p).a;
    PowerSeries qp{ap, taylor_at(cofactor(spec, p), ap, std::size_t(n_max) + 1)};
    return series_reciprocal(qp).coeffs;
}

CoeffTable coeff_table(const AnnihilatorSpec& spec) {
    CoeffTable table;
    table.b.reserve(std::size_t(spec.k()));
    for (int p = 0; p < spec.k(); ++p)
        table.b.push_back(taylor_coeffs_closed_form(spec, p, spec.root(p).alpha));
    return table;
}

HermiteInterpolant hermite_interpolant(const EntireFunction& f, const AnnihilatorSpec& spec) {
    const CoeffTable table = coeff_table(spec);

    std::vector<std::vector<cx>> c(std::size_t(spec.k()));
    for (int p = 0; p < spec.k(); ++p) {
        const Root& rp = spec.root(p);
        c[std::size_t(p)].assign(std::size_t(rp.alpha) + 1, cx(0.0));
        double factorial = 1.0;
        std::vector<cx> scaled(std::size_t(rp.alpha) + 1);  // f^(j)(a_p)/j!
        for (int j = 0; j <= rp.alpha; ++j) {
            if (j > 0) factorial *= double(j);
            scaled[std::size_t(j)] = f.derivative_at(j, rp.a) / factorial;
        }
        for (int q = 0; q <= rp.alpha; ++q) {
            cx acc(0.0);
            for (int j = 0; j <= q; ++j)
                acc += scaled[std::size_t(j)] * table.b[std::size_t(p)][std::size_t(q - j)];
            c[std::size_t(p)][std::size_t(q)] = acc;
        }
    }

    // Expanded monomial form, grouped per root:
    // Q_p(z) * sum_q c_{p,q} (z - a_p)^q.  Degree stays < d by construction.
    Polynomial expanded = Polynomial::zero();
    for (int p = 0; p < spec.k(); ++p) {
        const Root& rp = spec.root(p);
        Polynomial centered = Polynomial::zero();
        Polynomial power = Polynomial::one();
        for (int q = 0; q <= rp.alpha; ++q) {
            centered = poly_add(centered, poly_scale(power, c[std::size_t(p)][std::size_t(q)]));
            power = poly_mul(power, Polynomial::from_root(rp.a));
        }
        expanded = poly_add(expanded, poly_mul(centered, cofactor(spec, p)));
    }
    return HermiteInterpolant(spec, std::move(c), std::move(expanded));
}

}  // namespace matfunc
