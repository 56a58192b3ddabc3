#include "matfunc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace matfunc::io {

namespace {

cx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex entry must be a [re, im] number pair");
    return cx(j[0].get<double>(), j[1].get<double>());
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
    }
    return j;
}

}  // namespace

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("matrix file needs \"n\" and \"rows\"");
    const int n = j["n"].get<int>();
    const json& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix row count does not match n");
    std::vector<cx> entries;
    entries.reserve(std::size_t(n) * std::size_t(n));
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix row length does not match n");
        for (const json& e : row) entries.push_back(complex_from_json(e));
    }
    return Matrix(n, std::move(entries));
}

json matrix_to_json(const Matrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.n(); ++j) row.push_back(complex_to_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", a.n()}, {"rows", std::move(rows)}};
}

Matrix read_matrix(const std::filesystem::path& path) { return matrix_from_json(load_json(path)); }

void write_matrix(const std::filesystem::path& path, const Matrix& a, const json& meta) {
    json j = matrix_to_json(a);
    if (!meta.is_null()) j["meta"] = meta;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

AnnihilatorSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("roots") || !j["roots"].is_array() || j["roots"].empty())
        throw std::invalid_argument("spec file needs a non-empty \"roots\" array");
    std::vector<Root> roots;
    for (const json& r : j["roots"]) {
        if (!r.is_object() || !r.contains("a") || !r.contains("alpha"))
            throw std::invalid_argument("each root needs \"a\" and \"alpha\"");
        roots.push_back(Root{complex_from_json(r["a"]), r["alpha"].get<int>()});
    }
    return AnnihilatorSpec(std::move(roots));
}

json spec_to_json(const AnnihilatorSpec& spec) {
    json roots = json::array();
    for (const Root& r : spec.roots())
        roots.push_back(json{{"a", complex_to_json(r.a)}, {"alpha", r.alpha}});
    return json{{"roots", std::move(roots)}};
}

AnnihilatorSpec read_spec(const std::filesystem::path& path) {
    return spec_from_json(load_json(path));
}

json complex_to_json(cx z) { return json::array({z.real(), z.imag()}); }

json poly_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (cx c : p.coeffs()) coeffs.push_back(complex_to_json(c));
    return json{{"coeffs", std::move(coeffs)}, {"degree", p.degree()}};
}

cx parse_complex(const std::string& text) {
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return cx(re, 0.0);
        }
        double re = std::stod(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
        std::string imtext = text.substr(colon + 1);
        double im = std::stod(imtext, &used);
        if (used != imtext.size()) throw std::invalid_argument("");
        return cx(re, im);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse complex value \"" + text +
                                    "\" (expected re or re:im)");
    }
}

std::vector<cx> parse_complex_list(const std::string& text) {
    std::vector<cx> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_complex(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

namespace {

// "<re>,<im>" as used inside const:/exp: forcing selectors.
cx parse_re_im_pair(const std::string& text, const std::string& what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument(what + " needs \"<re>,<im>\"");
    return cx(parse_complex(text.substr(0, comma)).real(),
              parse_complex(text.substr(comma + 1)).real());
}

}  // namespace

EntireFunction parse_function_selector(const std::string& selector) {
    if (selector == "exp") return EntireFunction::exp();
    if (selector == "sin") return EntireFunction::sin();
    if (selector == "cos") return EntireFunction::cos();
    if (selector == "sinh") return EntireFunction::sinh();
    if (selector == "cosh") return EntireFunction::cosh();
    if (selector.rfind("exp:t=", 0) == 0)
        return EntireFunction::exp_scaled(parse_complex(selector.substr(6)).real());
    if (selector.rfind("poly:", 0) == 0)
        return EntireFunction::polynomial(Polynomial(parse_complex_list(selector.substr(5))));
    throw std::invalid_argument("unknown function selector \"" + selector + "\"");
}

Forcing parse_forcing_selector(const std::string& selector) {
    if (selector == "zero") return Forcing::zero();
    if (selector == "cos")
        return Forcing::of([](double y) { return cx(std::cos(y), 0.0); });
    if (selector == "sin")
        return Forcing::of([](double y) { return cx(std::sin(y), 0.0); });
    if (selector.rfind("const:", 0) == 0) {
        const cx c = parse_re_im_pair(selector.substr(6), "const forcing");
        return Forcing::of([c](double) { return c; });
    }
    if (selector.rfind("exp:", 0) == 0) {
        const cx rate = parse_re_im_pair(selector.substr(4), "exp forcing");
        return Forcing::of([rate](double y) { return std::exp(rate * y); });
    }
    if (selector.rfind("poly:", 0) == 0) {
        const Polynomial p(parse_complex_list(selector.substr(5)));
        return Forcing::of([p](double y) { return poly_eval(p, cx(y)); });
    }
    throw std::invalid_argument("unknown forcing selector \"" + selector + "\"");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace matfunc::io
