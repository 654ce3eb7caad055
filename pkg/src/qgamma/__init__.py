"""Numerical library and verification harness for gamma / q-gamma inequalities."""

from .special import (
    EULER_GAMMA,
    ConvergenceError,
    DomainError,
    EvalConfig,
    QValue,
    SeriesResult,
    DEFAULT_CONFIG,
    dilog_F,
    gamma,
    gamma_q,
    log_gamma,
    log_gamma_q,
    measure_moment,
    measure_moment_over_t,
    psi,
    psi_n,
    psi_q,
    psi_q_n,
)

__version__ = "0.1.0"

__all__ = [
    "EULER_GAMMA",
    "ConvergenceError",
    "DomainError",
    "EvalConfig",
    "QValue",
    "SeriesResult",
    "DEFAULT_CONFIG",
    "dilog_F",
    "gamma",
    "gamma_q",
    "log_gamma",
    "log_gamma_q",
    "measure_moment",
    "measure_moment_over_t",
    "psi",
    "psi_n",
    "psi_q",
    "psi_q_n",
]
