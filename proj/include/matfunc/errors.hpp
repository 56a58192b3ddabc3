#ifndef MATFUNC_ERRORS_HPP
#define MATFUNC_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace matfunc {

using cx = std::complex<double>;

/// Reciprocal of a power series whose constant term vanishes.
class SingularSeriesError : public std::runtime_error {
public:
    explicit SingularSeriesError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Simultaneous root iteration failed to settle; carries the last iterate.
class RootIterationError : public std::runtime_error {
public:
    RootIterationError(const std::string& msg, std::vector<cx> last)
        : std::runtime_error(msg), last_iterate(std::move(last)) {}
    std::vector<cx> last_iterate;
};

/// Q(A) residual exceeded the caller's threshold.
class AnnihilationError : public std::runtime_error {
public:
    AnnihilationError(const std::string& msg, double residual_, double threshold_)
        : std::runtime_error(msg), residual(residual_), threshold(threshold_) {}
    double residual;
    double threshold;
};

/// Adaptive quadrature hit max depth; carries the best estimate so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, cx best, double achieved)
        : std::runtime_error(msg), best_estimate(best), achieved_tol(achieved) {}
    cx best_estimate;
    double achieved_tol;
};

}  // namespace matfunc

#endif
