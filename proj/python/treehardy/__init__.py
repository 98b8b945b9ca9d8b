"""Operator calculus on a homogeneous tree.

Constants algebra, Hardy-module series, point evaluation, reproducing
kernels, Blaschke factors, Schur-kernel positivity, and homogeneous
interpolation, backed by the C++ core.
"""

from treehardy._core import (
    BlaschkeResult,
    CuntzReport,
    DivergenceError,
    Error,
    FiniteTree,
    HardySeries,
    InterpolationSolution,
    KElement,
    KernelResult,
    PsdReport,
    RecursionBreakdownError,
    bezout_div,
    blaschke,
    bracket,
    conj,
    cuntz_residuals,
    gram,
    h2_inner,
    h2_norm,
    in_disk,
    interpolate,
    invert,
    is_psd,
    k2_inner,
    k2_norm,
    kernel,
    matrix_to_series,
    norm_inf,
    point_eval,
    rho,
    schur_kernel,
    series_dist,
    series_mul,
    series_to_matrix,
    shift,
    sqrt,
)

__all__ = [
    "BlaschkeResult",
    "CuntzReport",
    "DivergenceError",
    "Error",
    "FiniteTree",
    "HardySeries",
    "InterpolationSolution",
    "KElement",
    "KernelResult",
    "PsdReport",
    "RecursionBreakdownError",
    "bezout_div",
    "blaschke",
    "bracket",
    "conj",
    "cuntz_residuals",
    "gram",
    "h2_inner",
    "h2_norm",
    "in_disk",
    "interpolate",
    "invert",
    "is_psd",
    "k2_inner",
    "k2_norm",
    "kernel",
    "matrix_to_series",
    "norm_inf",
    "point_eval",
    "rho",
    "schur_kernel",
    "series_dist",
    "series_mul",
    "series_to_matrix",
    "shift",
    "sqrt",
]
