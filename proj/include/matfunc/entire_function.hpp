#ifndef MATFUNC_ENTIRE_FUNCTION_HPP
#define MATFUNC_ENTIRE_FUNCTION_HPP

#include <functional>
#include <string>
#include <utility>

#include "matfunc/polynomial.hpp"

namespace matfunc {

/// An entire function given through a derivative oracle: derivative_at(j, a)
/// returns f^(j)(a), with j = 0 the plain value.  The built-ins use closed
/// forms for their derivatives, never numeric differentiation.  Oracles are
/// called reentrantly and must be stateless.
class EntireFunction {
public:
    using DerivFn = std::function<cx(int, cx)>;

    EntireFunction(std::string name, DerivFn fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    cx derivative_at(int j, cx a) const { return fn_(j, a); }
    const std::string& name() const { return name_; }

    static EntireFunction exp();
    /// z -> e^(t z); the j-th derivative is t^j e^(t a).
    static EntireFunction exp_scaled(double t);
    static EntireFunction sin();
    static EntireFunction cos();
    static EntireFunction sinh();
    static EntireFunction cosh();
    static EntireFunction polynomial(const Polynomial& p);

private:
    std::string name_;
    DerivFn fn_;
};

}  // namespace matfunc

#endif
