"""Euler's constant from accelerated series, with certified error bounds."""

from ._core import (
    DomainError,
    PrecisionError,
    approx,
    bound,
    coefficients,
    gamma,
    gamma_alpha,
    optimal_n,
    run_cli,
    scheme_names,
    transform,
    verify,
)

__all__ = [
    "DomainError",
    "PrecisionError",
    "approx",
    "bound",
    "coefficients",
    "gamma",
    "gamma_alpha",
    "optimal_n",
    "run_cli",
    "scheme_names",
    "transform",
    "verify",
]
