#ifndef MATFUNC_IO_HPP
#define MATFUNC_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "matfunc/annihilator.hpp"
#include "matfunc/entire_function.hpp"
#include "matfunc/matrix.hpp"
#include "matfunc/odekernel.hpp"

namespace matfunc::io {

using json = nlohmann::json;

// Matrix files: {"n": int, "rows": [[[re, im], ...], ...]}, row-major.
// Written matrices may carry a "meta" object; the reader ignores it.
Matrix matrix_from_json(const json& j);
json matrix_to_json(const Matrix& a);
Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& a,
                  const json& meta = json());

// Spec files: {"roots": [{"a": [re, im], "alpha": int}, ...]}.
AnnihilatorSpec spec_from_json(const json& j);
json spec_to_json(const AnnihilatorSpec& spec);
AnnihilatorSpec read_spec(const std::filesystem::path& path);

json complex_to_json(cx z);
json poly_to_json(const Polynomial& p);

/// "1.5" or "1.5:-2" -> complex; comma-separated lists of those.
cx parse_complex(const std::string& text);
std::vector<cx> parse_complex_list(const std::string& text);

/// Selectors: exp | exp:t=<real> | sin | cos | sinh | cosh | poly:<c0,c1,...>
EntireFunction parse_function_selector(const std::string& selector);

/// Selectors: zero | const:<re,im> | cos | sin | exp:<re,im> | poly:<c0,c1,...>
Forcing parse_forcing_selector(const std::string& selector);

/// Full-precision decimal rendering (17 significant digits).
std::string format_double(double v);

}  // namespace matfunc::io

#endif
