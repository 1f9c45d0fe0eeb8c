"""Series solver for a nonlocal conjugation problem with Caputo fractional
derivatives: Mittag-Leffler evaluation, Green-kernel Nystrom eigensolver,
two-sided fractional mode solutions and the assembled series field."""

from ._core import (
    EigenBasis,
    ModeSolution,
    Quadrature,
    build_quadrature,
    caputo_of_mode,
    compute_basis,
    delta_limit,
    delta_n,
    gamma,
    green_eval,
    kernel_eval,
    ml_envelope_constant,
    ml_eval,
    ml_eval_bounded,
    ml_largest_real_zero,
    reciprocal_gamma,
    run_cli,
    solve,
    solve_mode,
    y_eval,
)

__all__ = [
    "EigenBasis",
    "ModeSolution",
    "Quadrature",
    "build_quadrature",
    "caputo_of_mode",
    "compute_basis",
    "delta_limit",
    "delta_n",
    "gamma",
    "green_eval",
    "kernel_eval",
    "ml_envelope_constant",
    "ml_eval",
    "ml_eval_bounded",
    "ml_largest_real_zero",
    "reciprocal_gamma",
    "run_cli",
    "solve",
    "solve_mode",
    "y_eval",
]
