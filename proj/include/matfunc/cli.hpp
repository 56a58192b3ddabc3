#ifndef MATFUNC_CLI_HPP
#define MATFUNC_CLI_HPP

namespace matfunc {

/// Full command-line front end.  Exit codes: 0 success, 2 annihilation
/// residual over threshold, 3 quadrature failure, 64 usage or input error,
/// 1 unexpected internal error.
int run_cli(int argc, const char* const* argv);

}  // namespace matfunc

#endif
