#include "matfunc/entire_function.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

namespace matfunc {

EntireFunction EntireFunction::exp() {
    return EntireFunction("exp", [](int, cx a) { return std::exp(a); });
}

EntireFunction EntireFunction::exp_scaled(double t) {
    std::string name = "exp:t=" + std::to_string(t);
    return EntireFunction(std::move(name), [t](int j, cx a) {
        return std::pow(t, j) * std::exp(t * a);
    });
}

EntireFunction EntireFunction::sin() {
    // Derivatives cycle sin, cos, -sin, -cos.
    return EntireFunction("sin", [](int j, cx a) {
        switch (j % 4) {
            case 0: return std::sin(a);
            case 1: return std::cos(a);
            case 2: return -std::sin(a);
            default: return -std::cos(a);
        }
    });
}

EntireFunction EntireFunction::cos() {
    return EntireFunction("cos", [](int j, cx a) {
        switch (j % 4) {
            case 0: return std::cos(a);
            case 1: return -std::sin(a);
            case 2: return -std::cos(a);
            default: return std::sin(a);
        }
    });
}

EntireFunction EntireFunction::sinh() {
    return EntireFunction("sinh", [](int j, cx a) {
        return j % 2 == 0 ? std::sinh(a) : std::cosh(a);
    });
}

EntireFunction EntireFunction::cosh() {
    return EntireFunction("cosh", [](int j, cx a) {
        return j % 2 == 0 ? std::cosh(a) : std::sinh(a);
    });
}

EntireFunction EntireFunction::polynomial(const Polynomial& p) {
    // Derivative chain computed once and shared by the closure.
    auto chain = std::make_shared<std::vector<Polynomial>>();
    chain->push_back(p);
    while (!chain->back().is_zero()) chain->push_back(poly_derivative(chain->back()));
    return EntireFunction("poly", [chain](int j, cx a) {
        if (j >= static_cast<int>(chain->size())) return cx(0.0);
        return poly_eval((*chain)[std::size_t(j)], a);
    });
}

}  // namespace matfunc
