"""Matrix functions, spectral projectors, and ODE kernels from annihilating polynomials."""

from matfunc._core import (
    AnnihilationError,
    QuadratureError,
    RootIterationError,
    apply_function,
    characteristic_polynomial,
    expm,
    hermite_interpolant,
    kernel_values,
    solve_ivp,
    spec_from_matrix,
    spectral_decomposition,
    taylor_coeffs,
    verify_annihilates,
)

__all__ = [
    "AnnihilationError",
    "QuadratureError",
    "RootIterationError",
    "apply_function",
    "characteristic_polynomial",
    "expm",
    "hermite_interpolant",
    "kernel_values",
    "solve_ivp",
    "spec_from_matrix",
    "spectral_decomposition",
    "taylor_coeffs",
    "verify_annihilates",
]
