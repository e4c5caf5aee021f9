"""Takenaka-Malmquist systems and Fejer-type positive operators."""

from ._core import (
    Error,
    PointSequence,
    TMBasis,
    TestFunction,
    boundary_phase,
    cd_kernel,
    cesaro_e0,
    delta,
    eval_blaschke,
    fejer_kernel,
    frostman_minimum,
    run,
    schur_bounds,
    sigma_positive,
    sigma_positive_mobius,
    test_function,
    voronovskaya_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Error",
    "PointSequence",
    "TMBasis",
    "TestFunction",
    "boundary_phase",
    "cd_kernel",
    "cesaro_e0",
    "delta",
    "eval_blaschke",
    "fejer_kernel",
    "frostman_minimum",
    "run",
    "schur_bounds",
    "sigma_positive",
    "sigma_positive_mobius",
    "test_function",
    "voronovskaya_bound",
]
