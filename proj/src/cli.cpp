#include "matfunc/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matfunc/errors.hpp"
#include "matfunc/io.hpp"
#include "matfunc/matfun.hpp"
#include "matfunc/odekernel.hpp"

namespace matfunc {

namespace {

using io::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_finite(double v, const std::string& what) {
    if (!std::isfinite(v)) throw std::runtime_error(what + " is not finite");
}

void require_finite(const Matrix& a, const std::string& what) {
    for (cx v : a.entries())
        if (!(std::isfinite(v.real()) && std::isfinite(v.imag())))
            throw std::runtime_error(what + " has non-finite entries");
}

// stdout report: key=value lines, then a '---' separator and a JSON block.
struct Report {
    explicit Report(std::string command) : body{{"command", command}} {
        lines.emplace_back("command", command);
        body["inputs"] = json::object();
        body["outputs"] = json::object();
        body["diagnostics"] = json::object();
    }

    void kv(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
    void kv(const std::string& key, double value) {
        require_finite(value, key);
        lines.emplace_back(key, io::format_double(value));
    }
    void kv(const std::string& key, int value) { lines.emplace_back(key, std::to_string(value)); }
    void kv(const std::string& key, cx value) {
        kv(key + ".re", value.real());
        kv(key + ".im", value.imag());
    }

    void print(std::ostream& out) const {
        for (const auto& [k, v] : lines) out << k << '=' << v << '\n';
        out << "---\n" << body.dump(2) << '\n';
    }

    std::vector<std::pair<std::string, std::string>> lines;
    json body;
};

struct SpecSource {
    std::string path;       // --spec
    bool auto_spec = false; // --auto-spec
    double cluster_tol = 1e-6;
};

void add_spec_options(CLI::App* cmd, SpecSource& src) {
    auto* spec_opt = cmd->add_option("--spec", src.path, "annihilator spec file (JSON)");
    auto* auto_opt = cmd->add_flag("--auto-spec", src.auto_spec,
                                   "derive the spec from the characteristic polynomial");
    cmd->add_option("--cluster-tol", src.cluster_tol,
                    "root clustering tolerance for --auto-spec (scaled by 1 + max|root|)");
    spec_opt->excludes(auto_opt);
}

AnnihilatorSpec resolve_spec(const Matrix& a, const SpecSource& src, Report& rep) {
    std::optional<AnnihilatorSpec> spec;
    if (src.auto_spec) {
        spec = spec_from_matrix(a, src.cluster_tol);
        rep.body["inputs"]["auto_spec"] = true;
        rep.body["inputs"]["cluster_tol"] = src.cluster_tol;
    } else if (!src.path.empty()) {
        spec = io::read_spec(src.path);
        rep.body["inputs"]["spec_path"] = src.path;
    } else {
        throw CLI::RequiredError("--spec or --auto-spec");
    }
    rep.body["inputs"]["spec"] = io::spec_to_json(*spec);
    rep.kv("spec.k", spec->k());
    rep.kv("spec.d", spec->degree());
    if (spec->near_confluent())
        std::cerr << "warning: nearly confluent roots (min separation "
                  << io::format_double(spec->min_separation())
                  << "); coefficient magnitudes may blow up\n";
    return std::move(*spec);
}

// Measures the residual, records it, and decides pass/fail.  The residual
// is reported even on success.
bool record_annihilation(const Matrix& a, const AnnihilatorSpec& spec, double rtol, Report& rep) {
    const double residual = verify_annihilates(a, spec);
    const double threshold = annihilation_threshold(a, spec, rtol);
    rep.kv("residual", residual);
    rep.kv("residual.threshold", threshold);
    rep.body["diagnostics"]["annihilation_residual"] = residual;
    rep.body["diagnostics"]["annihilation_threshold"] = threshold;
    if (residual <= threshold) return true;
    rep.kv("error", "annihilation residual exceeds threshold");
    std::cerr << "error: Q(A) residual " << io::format_double(residual) << " exceeds threshold "
              << io::format_double(threshold) << '\n';
    return false;
}

json meta_for_output(const Report& rep) {
    json meta = json::object();
    meta["command"] = rep.body["command"];
    if (rep.body["inputs"].contains("spec")) meta["spec"] = rep.body["inputs"]["spec"];
    if (rep.body["inputs"].contains("function")) meta["function"] = rep.body["inputs"]["function"];
    meta["diagnostics"] = rep.body["diagnostics"];
    return meta;
}

int finish(Report& rep, double timing_ms, int code = 0) {
    rep.kv("timing_ms", timing_ms);
    rep.body["diagnostics"]["timing_ms"] = timing_ms;
    rep.kv("status", code == 0 ? "ok" : "error");
    rep.body["status"] = code == 0 ? "ok" : "error";
    rep.print(std::cout);
    return code;
}

int run_funm(const std::string& matrix_path, const SpecSource& spec_src,
             const std::string& function_selector, const std::string& out_path,
             double residual_rtol, const char* command) {
    const auto start = Clock::now();
    Report rep(command);
    const Matrix a = io::read_matrix(matrix_path);
    rep.body["inputs"]["matrix_path"] = matrix_path;
    rep.body["inputs"]["matrix"] = io::matrix_to_json(a);
    rep.body["inputs"]["function"] = function_selector;
    rep.kv("matrix", matrix_path);
    rep.kv("n", a.n());
    rep.kv("function", function_selector);
    const EntireFunction f = io::parse_function_selector(function_selector);
    const AnnihilatorSpec spec = resolve_spec(a, spec_src, rep);

    if (!record_annihilation(a, spec, residual_rtol, rep)) return finish(rep, ms_since(start), 2);

    ApplyOptions opts;
    opts.check_annihilation = false;  // measured above
    const Matrix result = apply_function(f, a, spec, opts);
    require_finite(result, "f(A)");
    rep.body["outputs"]["matrix"] = io::matrix_to_json(result);
    if (!out_path.empty()) {
        io::write_matrix(out_path, result, meta_for_output(rep));
        rep.body["outputs"]["out_path"] = out_path;
        rep.kv("out", out_path);
    }
    return finish(rep, ms_since(start));
}

int run_spectral(const std::string& matrix_path, const SpecSource& spec_src,
                 const std::string& out_dir, double residual_rtol) {
    const auto start = Clock::now();
    Report rep("spectral");
    const Matrix a = io::read_matrix(matrix_path);
    rep.body["inputs"]["matrix_path"] = matrix_path;
    rep.body["inputs"]["matrix"] = io::matrix_to_json(a);
    rep.kv("matrix", matrix_path);
    rep.kv("n", a.n());
    const AnnihilatorSpec spec = resolve_spec(a, spec_src, rep);

    if (!record_annihilation(a, spec, residual_rtol, rep)) return finish(rep, ms_since(start), 2);

    ApplyOptions opts;
    opts.check_annihilation = false;
    const SpectralDecomposition dec = spectral_decomposition(a, spec, opts);
    const SpectralDiagnostics& diag = dec.diagnostics();

    json checks = json::object();
    auto record = [&](const char* name, const InvariantCheck& c) {
        checks[name] = {{"deviation", c.deviation}, {"threshold", c.threshold}, {"ok", c.ok()}};
        rep.kv(std::string("deviation.") + name, c.deviation);
    };
    record("projector_sum", diag.projector_sum);
    record("idempotence", diag.idempotence);
    record("nilpotency", diag.nilpotency);
    record("reconstruction", diag.reconstruction);
    record("commutation", diag.commutation);
    rep.body["diagnostics"]["invariants"] = std::move(checks);
    const double worst = diag.worst_ratio();
    rep.kv("worst_invariant_ratio", worst);
    rep.body["diagnostics"]["worst_invariant_ratio"] = worst;
    if (!diag.all_ok())
        std::cerr << "warning: spectral invariants degraded (worst deviation/threshold "
                  << io::format_double(worst) << ")\n";

    std::filesystem::create_directories(out_dir);
    const json meta = meta_for_output(rep);
    json files = json::object();
    auto emit = [&](const std::string& name, const Matrix& m) {
        require_finite(m, name);
        const auto path = std::filesystem::path(out_dir) / (name + ".json");
        io::write_matrix(path, m, meta);
        files[name] = path.string();
    };
    for (int p = 0; p < spec.k(); ++p) {
        emit("E_" + std::to_string(p + 1), dec.projector(p));
        emit("N_" + std::to_string(p + 1), dec.nilpotent_part(p));
    }
    emit("S", dec.semisimple());
    emit("N", dec.nilpotent());
    rep.body["outputs"]["files"] = std::move(files);
    rep.kv("out_dir", out_dir);
    return finish(rep, ms_since(start));
}

int run_ode(const std::string& spec_path, const std::string& init_text,
            const std::string& forcing_selector, double t, double quad_tol, int grid) {
    const auto start = Clock::now();
    Report rep("ode");
    const AnnihilatorSpec spec = io::read_spec(spec_path);
    rep.body["inputs"]["spec_path"] = spec_path;
    rep.body["inputs"]["spec"] = io::spec_to_json(spec);
    rep.kv("spec.d", spec.degree());
    rep.kv("t", t);
    rep.kv("forcing", forcing_selector);

    std::vector<cx> init = io::parse_complex_list(init_text);
    if (static_cast<int>(init.size()) != spec.degree())
        throw std::invalid_argument("--init needs exactly d = " + std::to_string(spec.degree()) +
                                    " values");
    json init_json = json::array();
    for (cx c : init) init_json.push_back(io::complex_to_json(c));
    rep.body["inputs"]["init"] = std::move(init_json);
    rep.body["inputs"]["forcing"] = forcing_selector;
    rep.body["inputs"]["quad_tol"] = quad_tol;

    const IvpSolver solver(
        IvpProblem{spec, std::move(init), io::parse_forcing_selector(forcing_selector)});
    try {
        const cx u = solver.solve(t, quad_tol);
        rep.kv("u", u);
        rep.body["outputs"]["u"] = io::complex_to_json(u);
        if (grid > 0) {
            json samples = json::array();
            for (int i = 0; i <= grid; ++i) {
                const double ti = t * double(i) / double(grid);
                const cx ui = solver.solve(ti, quad_tol);
                rep.kv("sample." + std::to_string(i), io::format_double(ti) + ";" +
                                                          io::format_double(ui.real()) + ";" +
                                                          io::format_double(ui.imag()));
                samples.push_back(
                    {{"t", ti}, {"u", io::complex_to_json(ui)}});
            }
            rep.body["outputs"]["grid"] = std::move(samples);
        }
    } catch (const QuadratureError& e) {
        rep.kv("error", "quadrature did not converge");
        rep.kv("best_estimate", e.best_estimate);
        rep.kv("achieved_tol", e.achieved_tol);
        rep.body["diagnostics"]["best_estimate"] = io::complex_to_json(e.best_estimate);
        rep.body["diagnostics"]["achieved_tol"] = e.achieved_tol;
        std::cerr << "error: " << e.what() << " (achieved " << io::format_double(e.achieved_tol)
                  << ", requested " << io::format_double(quad_tol) << ")\n";
        return finish(rep, ms_since(start), 3);
    }
    return finish(rep, ms_since(start));
}

int run_coeffs(const std::string& spec_path, int p, int n_max, const std::string& method) {
    const auto start = Clock::now();
    Report rep("coeffs");
    const AnnihilatorSpec spec = io::read_spec(spec_path);
    rep.body["inputs"]["spec_path"] = spec_path;
    rep.body["inputs"]["spec"] = io::spec_to_json(spec);
    rep.body["inputs"]["p"] = p;
    rep.body["inputs"]["n_max"] = n_max;
    rep.body["inputs"]["method"] = method;
    rep.kv("p", p);
    rep.kv("n_max", n_max);
    rep.kv("method", method);
    if (method != "closed" && method != "series" && method != "both")
        throw std::invalid_argument("--method must be closed, series, or both");

    auto emit = [&](const char* label, const std::vector<cx>& b) {
        json arr = json::array();
        for (std::size_t n = 0; n < b.size(); ++n) {
            rep.kv(std::string(label) + "." + std::to_string(n), b[n]);
            arr.push_back(io::complex_to_json(b[n]));
        }
        rep.body["outputs"][label] = std::move(arr);
    };
    if (method == "closed" || method == "both")
        emit("b", taylor_coeffs_closed_form(spec, p, n_max));
    if (method == "series" || method == "both")
        emit(method == "both" ? "b_series" : "b", taylor_coeffs_series(spec, p, n_max));
    if (method == "both") {
        const auto closed = taylor_coeffs_closed_form(spec, p, n_max);
        const auto series = taylor_coeffs_series(spec, p, n_max);
        double dev = 0.0;
        for (std::size_t n = 0; n < closed.size(); ++n)
            dev = std::max(dev, std::abs(closed[n] - series[n]));
        rep.kv("max_deviation", dev);
        rep.body["diagnostics"]["max_deviation"] = dev;
    }
    return finish(rep, ms_since(start));
}

int run_charpoly(const std::string& matrix_path) {
    const auto start = Clock::now();
    Report rep("charpoly");
    const Matrix a = io::read_matrix(matrix_path);
    rep.body["inputs"]["matrix_path"] = matrix_path;
    rep.body["inputs"]["matrix"] = io::matrix_to_json(a);
    rep.kv("matrix", matrix_path);
    rep.kv("n", a.n());
    const Polynomial p = characteristic_polynomial(a);
    for (std::size_t m = 0; m < p.coeffs().size(); ++m)
        rep.kv("coeff." + std::to_string(m), p.coeffs()[m]);
    rep.body["outputs"]["charpoly"] = io::poly_to_json(p);
    return finish(rep, ms_since(start));
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"matrix functions, spectral projectors, and ODE kernels from annihilating polynomials"};
    app.require_subcommand(1);

    int exit_code = 0;

    // funm / expm
    struct {
        std::string matrix, function = "exp", out;
        SpecSource spec;
        double residual_rtol = 1e-8;
        double t = 1.0;
    } fo;
    auto* funm = app.add_subcommand("funm", "evaluate f(A)");
    funm->add_option("matrix", fo.matrix, "matrix file (JSON)")->required();
    add_spec_options(funm, fo.spec);
    funm->add_option("--function", fo.function,
                     "exp | exp:t=<real> | sin | cos | sinh | cosh | poly:<c0,c1,...>")
        ->required();
    funm->add_option("--out", fo.out, "output matrix file");
    funm->add_option("--residual-rtol", fo.residual_rtol, "annihilation residual tolerance");
    funm->callback([&] {
        exit_code = run_funm(fo.matrix, fo.spec, fo.function, fo.out, fo.residual_rtol, "funm");
    });

    auto* expm = app.add_subcommand("expm", "evaluate e^(tA)");
    expm->add_option("matrix", fo.matrix, "matrix file (JSON)")->required();
    add_spec_options(expm, fo.spec);
    expm->add_option("--t", fo.t, "time scale (default 1)");
    expm->add_option("--out", fo.out, "output matrix file");
    expm->add_option("--residual-rtol", fo.residual_rtol, "annihilation residual tolerance");
    expm->callback([&] {
        exit_code = run_funm(fo.matrix, fo.spec, "exp:t=" + io::format_double(fo.t), fo.out,
                             fo.residual_rtol, "expm");
    });

    // spectral
    struct {
        std::string matrix, out_dir = ".";
        SpecSource spec;
        double residual_rtol = 1e-8;
    } so;
    auto* spectral = app.add_subcommand("spectral", "projectors E_p, nilpotents N_p, S and N");
    spectral->add_option("matrix", so.matrix, "matrix file (JSON)")->required();
    add_spec_options(spectral, so.spec);
    spectral->add_option("--out-dir", so.out_dir, "directory for output matrices");
    spectral->add_option("--residual-rtol", so.residual_rtol, "annihilation residual tolerance");
    spectral->callback(
        [&] { exit_code = run_spectral(so.matrix, so.spec, so.out_dir, so.residual_rtol); });

    // ode
    struct {
        std::string spec, init, forcing = "zero";
        double t = 1.0, quad_tol = 1e-10;
        int grid = 0;
    } oo;
    auto* ode = app.add_subcommand("ode", "solve Q(d/dt)u = h with given initial data");
    ode->add_option("--spec", oo.spec, "annihilator spec file (JSON)")->required();
    ode->add_option("--init", oo.init, "comma-separated u^(j)(0), each re or re:im")->required();
    ode->add_option("--forcing", oo.forcing,
                    "zero | const:<re,im> | cos | sin | exp:<re,im> | poly:<c0,c1,...>");
    ode->add_option("--t", oo.t, "evaluation time")->required();
    ode->add_option("--quad-tol", oo.quad_tol, "quadrature tolerance");
    ode->add_option("--grid", oo.grid, "also print N+1 equally spaced samples on [0, t]");
    ode->callback(
        [&] { exit_code = run_ode(oo.spec, oo.init, oo.forcing, oo.t, oo.quad_tol, oo.grid); });

    // coeffs
    struct {
        std::string spec, method = "closed";
        int p = 0, n_max = 0;
    } co;
    auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of 1/Q_p at a_p");
    coeffs->add_option("--spec", co.spec, "annihilator spec file (JSON)")->required();
    coeffs->add_option("--p", co.p, "root index (0-based)")->required();
    coeffs->add_option("--n-max", co.n_max, "highest coefficient order");
    coeffs->add_option("--method", co.method, "closed | series | both");
    coeffs->callback([&] { exit_code = run_coeffs(co.spec, co.p, co.n_max, co.method); });

    // charpoly
    struct {
        std::string matrix;
    } cp;
    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    charpoly->add_option("matrix", cp.matrix, "matrix file (JSON)")->required();
    charpoly->callback([&] { exit_code = run_charpoly(cp.matrix); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}

}  // namespace matfunc
