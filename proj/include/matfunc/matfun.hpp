#ifndef MATFUNC_MATFUN_HPP
#define MATFUNC_MATFUN_HPP

#include <utility>
#include <vector>

#include "matfunc/annihilator.hpp"
#include "matfunc/entire_function.hpp"
#include "matfunc/hermite.hpp"
#include "matfunc/matrix.hpp"

namespace matfunc {

struct ApplyOptions {
    /// Check ||Q(A)||_F <= residual_rtol * (1 + ||A||_F)^d before evaluating.
    bool check_annihilation = true;
    double residual_rtol = 1e-8;
};

double annihilation_threshold(const Matrix& a, const AnnihilatorSpec& spec, double rtol);

/// f(A) through the interpolant, evaluated in centered form: Q_p(A) is
/// built once per root and the (A - a_p I)^q powers run incrementally.
/// Throws AnnihilationError when the residual check fails.
Matrix apply_function(const EntireFunction& f, const Matrix& a, const AnnihilatorSpec& spec,
                      const ApplyOptions& opts = {});

/// Post-hoc measurements of the projector algebra.  Each deviation is the
/// worst Frobenius norm over the matrices it covers; `threshold` is the
/// acceptance bound it was compared against.
struct InvariantCheck {
    double deviation = 0.0;
    double threshold = 0.0;
    bool ok() const { return deviation <= threshold; }
};

struct SpectralDiagnostics {
    double annihilation_residual = 0.0;
    InvariantCheck projector_sum;    // sum E_p = I
    InvariantCheck idempotence;      // E_p E_q = delta_pq E_p
    InvariantCheck nilpotency;       // N_p^(alpha_p+1) = 0
    InvariantCheck reconstruction;   // A = S + N
    InvariantCheck commutation;      // S N = N S
    bool all_ok() const;
    /// Largest deviation/threshold ratio (0 when a threshold is 0 and the
    /// deviation is too).
    double worst_ratio() const;
};

class SpectralDecomposition {
public:
    SpectralDecomposition(AnnihilatorSpec spec, std::vector<Matrix> projectors,
                          std::vector<Matrix> nilpotents, Matrix semisimple, Matrix nilpotent,
                          SpectralDiagnostics diag)
        : spec_(std::move(spec)),
          projectors_(std::move(projectors)),
          nilpotents_(std::move(nilpotents)),
          semisimple_(std::move(semisimple)),
          nilpotent_(std::move(nilpotent)),
          diag_(diag) {}

    const AnnihilatorSpec& spec() const { return spec_; }
    const Matrix& projector(int p) const { return projectors_.at(std::size_t(p)); }
    const Matrix& nilpotent_part(int p) const { return nilpotents_.at(std::size_t(p)); }
    const std::vector<Matrix>& projectors() const { return projectors_; }
    const std::vector<Matrix>& nilpotent_parts() const { return nilpotents_; }
    const Matrix& semisimple() const { return semisimple_; }
    const Matrix& nilpotent() const { return nilpotent_; }
    const SpectralDiagnostics& diagnostics() const { return diag_; }

private:
    AnnihilatorSpec spec_;
    std::vector<Matrix> projectors_;
    std::vector<Matrix> nilpotents_;
    Matrix semisimple_;
    Matrix nilpotent_;
    SpectralDiagnostics diag_;
};

/// E_p = sum_{q<=alpha_p} b_{p,q} (A - a_p)^q Q_p(A) and
/// N_p = sum_{q<alpha_p}  b_{p,q} (A - a_p)^(q+1) Q_p(A), plus S and N.
/// The algebra invariants are measured afterwards and reported in the
/// diagnostics; violations degrade to a reported deviation, not a failure.
SpectralDecomposition spectral_decomposition(const Matrix& a, const AnnihilatorSpec& spec,
                                             const ApplyOptions& opts = {});

/// The Jordan split (S, N) cached inside the decomposition.
std::pair<Matrix, Matrix> jordan_parts(const SpectralDecomposition& dec);

}  // namespace matfunc

#endif
