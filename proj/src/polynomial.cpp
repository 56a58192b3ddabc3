#include "matfunc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matfunc {

namespace {

bool finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Trailing coefficients below 1e-14 * (max modulus) are noise from
// arithmetic; trim them so the degree stays meaningful.
std::vector<cx> normalize(std::vector<cx> c) {
    if (c.empty()) return {cx(0.0)};
    double maxmod = 0.0;
    for (cx v : c) maxmod = std::max(maxmod, std::abs(v));
    if (maxmod == 0.0) return {cx(0.0)};
    const double cutoff = 1e-14 * maxmod;
    while (c.size() > 1 && std::abs(c.back()) <= cutoff) c.pop_back();
    if (c.size() == 1 && std::abs(c[0]) <= cutoff) c[0] = cx(0.0);
    return c;
}

}  // namespace

Polynomial::Polynomial(std::vector<cx> coeffs) : coeffs_(normalize(std::move(coeffs))) {
    for (cx v : coeffs_)
        if (!finite(v)) throw std::invalid_argument("polynomial coefficient not finite");
}

cx poly_eval(const Polynomial& p, cx z) {
    const auto& c = p.coeffs();
    cx acc = c.back();
    for (std::size_t m = c.size() - 1; m-- > 0;) acc = acc * z + c[m];
    return acc;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<cx> out(std::max(a.coeffs().size(), b.coeffs().size()), cx(0.0));
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = a.coeff(m) + b.coeff(m);
    return Polynomial(std::move(out));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    std::vector<cx> out(std::max(a.coeffs().size(), b.coeffs().size()), cx(0.0));
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = a.coeff(m) - b.coeff(m);
    return Polynomial(std::move(out));
}

Polynomial poly_scale(const Polynomial& p, cx c) {
    std::vector<cx> out = p.coeffs();
    for (cx& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<cx> out(ca.size() + cb.size() - 1, cx(0.0));
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
    return Polynomial(std::move(out));
}

Polynomial poly_pow(const Polynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Polynomial acc = Polynomial::one();
    for (int i = 0; i < e; ++i) acc = poly_mul(acc, p);
    return acc;
}

Polynomial poly_derivative(const Polynomial& p) {
    if (p.degree() < 1) return Polynomial::zero();
    const auto& c = p.coeffs();
    std::vector<cx> out(c.size() - 1);
    for (std::size_t m = 1; m < c.size(); ++m) out[m - 1] = double(m) * c[m];
    return Polynomial(std::move(out));
}

std::vector<cx> taylor_at(const Polynomial& p, cx center, std::size_t count) {
    // Repeated synthetic division by (z - center); remainders are the
    // Taylor coefficients in increasing order.
    std::vector<cx> work = p.coeffs();
    std::vector<cx> out(count, cx(0.0));
    for (std::size_t n = 0; n < count; ++n) {
        cx rem(0.0);
        for (std::size_t m = work.size(); m-- > 0;) {
            cx next = work[m] + rem * center;
            rem = next;
            work[m] = next;  // in-place quotient, shifted by one below
        }
        out[n] = work[0];
        work.erase(work.begin());
        if (work.empty()) break;
    }
    return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    if (a.center != b.center)
        throw std::invalid_argument("series_mul: centers differ");
    std::size_t order = std::min(a.order(), b.order());
    PowerSeries out{a.center, std::vector<cx>(order, cx(0.0))};
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; i + j < order && j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

PowerSeries series_reciprocal(const PowerSeries& s) {
    if (s.coeffs.empty() || s.coeffs[0] == cx(0.0))
        throw SingularSeriesError("series_reciprocal: constant term is zero");
    const std::size_t order = s.order();
    PowerSeries out{s.center, std::vector<cx>(order, cx(0.0))};
    const cx inv0 = cx(1.0) / s.coeffs[0];
    out.coeffs[0] = inv0;
    for (std::size_t n = 1; n < order; ++n) {
        cx acc(0.0);
        for (std::size_t i = 1; i <= n; ++i) acc += s.coeffs[i] * out.coeffs[n - i];
        out.coeffs[n] = -inv0 * acc;
    }
    return out;
}

}  // namespace matfunc
