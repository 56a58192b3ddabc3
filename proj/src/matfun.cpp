#include "matfunc/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "matfunc/errors.hpp"

namespace matfunc {

double annihilation_threshold(const Matrix& a, const AnnihilatorSpec& spec, double rtol) {
    return rtol * std::pow(1.0 + frobenius_norm(a), spec.degree());
}

namespace {

double check_annihilation(const Matrix& a, const AnnihilatorSpec& spec, const ApplyOptions& opts) {
    const double residual = verify_annihilates(a, spec);
    if (opts.check_annihilation) {
        const double threshold = annihilation_threshold(a, spec, opts.residual_rtol);
        if (!(residual <= threshold))
            throw AnnihilationError("Q(A) residual exceeds threshold", residual, threshold);
    }
    return residual;
}

// Q_p(A) in factored form, skipping root p.
Matrix cofactor_at(const Matrix& a, const AnnihilatorSpec& spec, int p) {
    Matrix acc = Matrix::identity(a.n());
    for (int j = 0; j < spec.k(); ++j) {
        if (j == p) continue;
        const Matrix factor = shifted(a, spec.root(j).a);
        for (int i = 0; i <= spec.root(j).alpha; ++i) acc = acc * factor;
    }
    return acc;
}

}  // namespace

Matrix apply_function(const EntireFunction& f, const Matrix& a, const AnnihilatorSpec& spec,
                      const ApplyOptions& opts) {
    check_annihilation(a, spec, opts);
    const HermiteInterpolant interp = hermite_interpolant(f, spec);

    Matrix result(a.n());
    for (int p = 0; p < spec.k(); ++p) {
        const Root& rp = spec.root(p);
        const Matrix centered = shifted(a, rp.a);
        Matrix power = cofactor_at(a, spec, p);  // (A - a_p)^q Q_p(A), q = 0
        for (int q = 0; q <= rp.alpha; ++q) {
            if (q > 0) power = centered * power;
            result = result + interp.term_coeffs()[std::size_t(p)][std::size_t(q)] * power;
        }
    }
    return result;
}

bool SpectralDiagnostics::all_ok() const {
    return projector_sum.ok() && idempotence.ok() && nilpotency.ok() && reconstruction.ok() &&
           commutation.ok();
}

double SpectralDiagnostics::worst_ratio() const {
    double worst = 0.0;
    for (const InvariantCheck* c :
         {&projector_sum, &idempotence, &nilpotency, &reconstruction, &commutation}) {
        if (c->threshold > 0.0)
            worst = std::max(worst, c->deviation / c->threshold);
        else if (c->deviation > 0.0)
            worst = std::max(worst, std::numeric_limits<double>::infinity());
    }
    return worst;
}

SpectralDecomposition spectral_decomposition(const Matrix& a, const AnnihilatorSpec& spec,
                                             const ApplyOptions& opts) {
    const double residual = check_annihilation(a, spec, opts);
    const CoeffTable table = coeff_table(spec);
    const int n = a.n();
    const int k = spec.k();

    std::vector<Matrix> projectors;
    std::vector<Matrix> nilpotents;
    projectors.reserve(std::size_t(k));
    nilpotents.reserve(std::size_t(k));
    for (int p = 0; p < k; ++p) {
        const Root& rp = spec.root(p);
        const auto& b = table.b[std::size_t(p)];
        const Matrix centered = shifted(a, rp.a);
        Matrix power = cofactor_at(a, spec, p);
        Matrix ep(n);
        Matrix np(n);
        for (int q = 0; q <= rp.alpha; ++q) {
            if (q > 0) power = centered * power;
            ep = ep + b[std::size_t(q)] * power;
        }
        // N_p reuses the shifted powers: b_{p,q} (A - a_p)^(q+1) Q_p(A).
        if (rp.alpha > 0) {
            Matrix shifted_power = cofactor_at(a, spec, p);
            for (int q = 0; q <= rp.alpha - 1; ++q) {
                shifted_power = centered * shifted_power;
                np = np + b[std::size_t(q)] * shifted_power;
            }
        }
        projectors.push_back(std::move(ep));
        nilpotents.push_back(std::move(np));
    }

    Matrix semisimple(n);
    Matrix nilpotent(n);
    for (int p = 0; p < k; ++p) {
        semisimple = semisimple + spec.root(p).a * projectors[std::size_t(p)];
        nilpotent = nilpotent + nilpotents[std::size_t(p)];
    }

    SpectralDiagnostics diag;
    diag.annihilation_residual = residual;
    const double norm_a = frobenius_norm(a);

    Matrix sum_e(n);
    for (const Matrix& e : projectors) sum_e = sum_e + e;
    diag.projector_sum = {frobenius_norm(sum_e - Matrix::identity(n)), 1e-8 * n};

    double idem_dev = 0.0;
    double idem_thresh = 0.0;
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            Matrix prod = projectors[std::size_t(p)] * projectors[std::size_t(q)];
            if (p == q) prod = prod - projectors[std::size_t(p)];
            const double norm_e = std::max(frobenius_norm(projectors[std::size_t(p)]),
                                           frobenius_norm(projectors[std::size_t(q)]));
            const double thresh = 1e-8 * n * (1.0 + norm_e) * (1.0 + norm_e);
            if (frobenius_norm(prod) / thresh >= idem_dev / std::max(idem_thresh, 1e-300)) {
                idem_dev = frobenius_norm(prod);
                idem_thresh = thresh;
            }
        }
    diag.idempotence = {idem_dev, idem_thresh};

    double nil_dev = 0.0;
    double nil_thresh = 0.0;
    bool nil_set = false;
    for (int p = 0; p < k; ++p) {
        const Root& rp = spec.root(p);
        const double norm_np = frobenius_norm(nilpotents[std::size_t(p)]);
        if (norm_np == 0.0) continue;
        Matrix power = nilpotents[std::size_t(p)];
        for (int i = 0; i < rp.alpha; ++i) power = power * nilpotents[std::size_t(p)];
        const double dev = frobenius_norm(power);
        const double thresh = 1e-7 * std::pow(norm_np, rp.alpha + 1);
        if (!nil_set || dev / thresh > nil_dev / std::max(nil_thresh, 1e-300)) {
            nil_dev = dev;
            nil_thresh = thresh;
            nil_set = true;
        }
    }
    if (!nil_set) nil_thresh = 1e-7;  // all N_p identically zero
    diag.nilpotency = {nil_dev, nil_thresh};

    diag.reconstruction = {frobenius_norm(a - semisimple - nilpotent), 1e-8 * norm_a};
    diag.commutation = {frobenius_norm(semisimple * nilpotent - nilpotent * semisimple),
                        1e-8 * norm_a};

    return SpectralDecomposition(spec, std::move(projectors), std::move(nilpotents),
                                 std::move(semisimple), std::move(nilpotent), diag);
}

std::pair<Matrix, Matrix> jordan_parts(const SpectralDecomposition& dec) {
    return {dec.semisimple(), dec.nilpotent()};
}

}  // namespace matfunc
