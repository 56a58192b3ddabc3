#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <utility>
#include <vector>

#include "matfunc/annihilator.hpp"
#include "matfunc/entire_function.hpp"
#include "matfunc/hermite.hpp"
#include "matfunc/io.hpp"
#include "matfunc/matfun.hpp"
#include "matfunc/odekernel.hpp"

namespace py = pybind11;
using namespace matfunc;

namespace {

using ComplexArray = py::array_t<cx, py::array::c_style | py::array::forcecast>;

Matrix matrix_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw std::invalid_argument("expected a square 2-D array");
    const int n = static_cast<int>(arr.shape(0));
    std::vector<cx> entries(arr.data(), arr.data() + std::size_t(n) * n);
    return Matrix(n, std::move(entries));
}

py::array_t<cx> matrix_to_array(const Matrix& m) {
    py::array_t<cx> out({m.n(), m.n()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

using PyRoots = std::vector<std::pair<cx, int>>;

AnnihilatorSpec spec_from_pairs(const PyRoots& roots) {
    std::vector<Root> rs;
    rs.reserve(roots.size());
    for (const auto& [a, alpha] : roots) rs.push_back(Root{a, alpha});
    return AnnihilatorSpec(std::move(rs));
}

PyRoots spec_to_pairs(const AnnihilatorSpec& spec) {
    PyRoots out;
    for (const Root& r : spec.roots()) out.emplace_back(r.a, r.alpha);
    return out;
}

Forcing forcing_from_object(const py::object& obj) {
    if (obj.is_none()) return Forcing::zero();
    if (py::isinstance<py::str>(obj)) return io::parse_forcing_selector(obj.cast<std::string>());
    if (!py::isinstance<py::function>(obj) && !py::hasattr(obj, "__call__"))
        throw std::invalid_argument("forcing must be None, a selector string, or callable");
    py::object fn = obj;
    return Forcing::of([fn](double y) { return fn(y).cast<cx>(); });
}

py::array_t<cx> coeffs_to_array(const std::vector<cx>& v) {
    py::array_t<cx> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "matrix functions, spectral projectors, and ODE kernels from "
              "annihilating polynomials";

    py::register_exception<AnnihilationError>(m, "AnnihilationError", PyExc_ArithmeticError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
    py::register_exception<RootIterationError>(m, "RootIterationError", PyExc_ArithmeticError);

    m.def(
        "apply_function",
        [](const ComplexArray& a, const PyRoots& roots, const std::string& function,
           bool check_annihilation, double residual_rtol) {
            ApplyOptions opts{check_annihilation, residual_rtol};
            return matrix_to_array(apply_function(io::parse_function_selector(function),
                                                  matrix_from_array(a), spec_from_pairs(roots),
                                                  opts));
        },
        py::arg("a"), py::arg("roots"), py::arg("function"),
        py::arg("check_annihilation") = true, py::arg("residual_rtol") = 1e-8,
        "Evaluate f(A) given the roots/multiplicities of an annihilating polynomial.\n"
        "roots is a list of (root, alpha) pairs; Q carries (z-root)^(alpha+1).");

    m.def(
        "expm",
        [](const ComplexArray& a, double t, const py::object& roots, double cluster_tol) {
            const Matrix mat = matrix_from_array(a);
            const AnnihilatorSpec spec = roots.is_none()
                                             ? spec_from_matrix(mat, cluster_tol)
                                             : spec_from_pairs(roots.cast<PyRoots>());
            return matrix_to_array(apply_function(EntireFunction::exp_scaled(t), mat, spec));
        },
        py::arg("a"), py::arg("t") = 1.0, py::arg("roots") = py::none(),
        py::arg("cluster_tol") = 1e-6,
        "e^(tA); derives the annihilator from the characteristic polynomial when "
        "roots is None.");

    m.def(
        "spec_from_matrix",
        [](const ComplexArray& a, double cluster_tol) {
            return spec_to_pairs(spec_from_matrix(matrix_from_array(a), cluster_tol));
        },
        py::arg("a"), py::arg("cluster_tol") = 1e-6,
        "Annihilator roots recovered from the characteristic polynomial.");

    m.def(
        "verify_annihilates",
        [](const ComplexArray& a, const PyRoots& roots) {
            return verify_annihilates(matrix_from_array(a), spec_from_pairs(roots));
        },
        py::arg("a"), py::arg("roots"), "Frobenius norm of Q(A).");

    m.def(
        "characteristic_polynomial",
        [](const ComplexArray& a) {
            return coeffs_to_array(characteristic_polynomial(matrix_from_array(a)).coeffs());
        },
        py::arg("a"), "Monic characteristic polynomial coefficients, low order first.");

    m.def(
        "taylor_coeffs",
        [](const PyRoots& roots, int p, int n_max, const std::string& method) {
            const AnnihilatorSpec spec = spec_from_pairs(roots);
            if (method == "closed") return coeffs_to_array(taylor_coeffs_closed_form(spec, p, n_max));
            if (method == "series") return coeffs_to_array(taylor_coeffs_series(spec, p, n_max));
            throw std::invalid_argument("method must be 'closed' or 'series'");
        },
        py::arg("roots"), py::arg("p"), py::arg("n_max"), py::arg("method") = "closed",
        "Taylor coefficients of 1/Q_p at the p-th root.");

    m.def(
        "hermite_interpolant",
        [](const PyRoots& roots, const std::string& function) {
            const auto interp =
                hermite_interpolant(io::parse_function_selector(function), spec_from_pairs(roots));
            return coeffs_to_array(interp.expanded().coeffs());
        },
        py::arg("roots"), py::arg("function"),
        "Monomial coefficients of the degree < d interpolant matching f and its "
        "derivatives at the roots.");

    m.def(
        "spectral_decomposition",
        [](const ComplexArray& a, const py::object& roots, double cluster_tol) {
            const Matrix mat = matrix_from_array(a);
            const AnnihilatorSpec spec = roots.is_none()
                                             ? spec_from_matrix(mat, cluster_tol)
                                             : spec_from_pairs(roots.cast<PyRoots>());
            const SpectralDecomposition dec = spectral_decomposition(mat, spec);
            py::list projectors, nilpotents;
            for (int p = 0; p < spec.k(); ++p) {
                projectors.append(matrix_to_array(dec.projector(p)));
                nilpotents.append(matrix_to_array(dec.nilpotent_part(p)));
            }
            const SpectralDiagnostics& diag = dec.diagnostics();
            py::dict diagnostics;
            diagnostics["annihilation_residual"] = diag.annihilation_residual;
            diagnostics["worst_invariant_ratio"] = diag.worst_ratio();
            diagnostics["all_ok"] = diag.all_ok();
            py::dict out;
            out["roots"] = spec_to_pairs(spec);
            out["projectors"] = std::move(projectors);
            out["nilpotents"] = std::move(nilpotents);
            out["S"] = matrix_to_array(dec.semisimple());
            out["N"] = matrix_to_array(dec.nilpotent());
            out["diagnostics"] = std::move(diagnostics);
            return out;
        },
        py::arg("a"), py::arg("roots") = py::none(), py::arg("cluster_tol") = 1e-6,
        "Spectral projectors E_p, nilpotent parts N_p, and the Jordan split "
        "S + N, with post-hoc invariant diagnostics.");

    m.def(
        "kernel_values",
        [](const PyRoots& roots, double t) {
            std::vector<cx> values;
            for (const ExpPoly& g : kernel_basis(spec_from_pairs(roots)))
                values.push_back(exppoly_eval(g, t));
            return coeffs_to_array(values);
        },
        py::arg("roots"), py::arg("t"),
        "Values g_0(t)..g_{d-1}(t) of the fundamental system for Q(d/dt)u = 0.");

    m.def(
        "solve_ivp",
        [](const PyRoots& roots, const std::vector<cx>& init, double t, const py::object& forcing,
           double quad_tol) {
            IvpProblem prob{spec_from_pairs(roots), init, forcing_from_object(forcing)};
            return solve_ivp(prob, t, quad_tol);
        },
        py::arg("roots"), py::arg("init"), py::arg("t"), py::arg("forcing") = py::none(),
        py::arg("quad_tol") = 1e-10,
        "Solve Q(d/dt)u = h with initial data u(0), ..., u^(d-1)(0); forcing is "
        "None, a selector string, or a callable y -> complex.");
}
