"""Two-sided gamma-ratio bounds and their complex-plane extensions.

Every ratio of gamma values here is computed as exp of log-gamma differences,
never as a quotient of direct values, so moderate-to-large arguments neither
overflow nor cancel.  Margins within ``EQUALITY_TOL`` of zero are reported as
exactly zero: the analytic equality cases (s -> 1, q = 1 reductions, c in
{0, 1}, a = 0) would otherwise show as spurious hair-thin violations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .special import (
    DEFAULT_CONFIG,
    DomainError,
    EvalConfig,
    QValue,
    log_gamma,
    log_gamma_q,
    psi,
    psi_q,
)

__all__ = [
    "EQUALITY_TOL",
    "BoundTriple",
    "ComplexSample",
    "gautschi_bounds",
    "kershaw_psi_bounds",
    "kershaw_power_bounds",
    "q_sandwich",
    "rademacher_ratio_bound",
    "beta_ratio_modulus",
]

EQUALITY_TOL = 1e-12


def _clamp(margin: float) -> float:
    return 0.0 if abs(margin) <= EQUALITY_TOL else margin


@dataclass(frozen=True)
class BoundTriple:
    """lower < value < upper sandwich with clamped margins."""

    lower: float
    value: float
    upper: float

    @property
    def lower_margin(self) -> float:
        return _clamp(self.value - self.lower)

    @property
    def upper_margin(self) -> float:
        return _clamp(self.upper - self.value)


@dataclass(frozen=True)
class ComplexSample:
    """One complex-plane bound evaluation; construction enforces the hypothesis."""

    s: complex
    a: float
    b: float
    modulus: float

    def __post_init__(self):
        if self.s.real <= (1.0 - self.a - self.b) / 2.0:
            raise DomainError(
                f"Re(s)={self.s.real} violates Re(s) > (1-a-b)/2 for a={self.a}, b={self.b}"
            )


def _lg(z, cfg: EvalConfig) -> float:
    return log_gamma(z, cfg).value


def gautschi_bounds(n: int, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> BoundTriple:
    """n^{1-s} < Gamma(n+1)/Gamma(n+s) < exp[(1-s) psi(n+1)] for integer n >= 1."""
    n = int(n)
    s = float(s)
    if n < 1:
        raise DomainError(f"gautschi_bounds requires n >= 1, got {n!r}")
    if not (0.0 < s < 1.0):
        raise DomainError(f"gautschi_bounds requires 0 < s < 1, got {s!r}")
    value = math.exp(_lg(n + 1.0, cfg) - _lg(n + s, cfg))
    lower = float(n) ** (1.0 - s)
    upper = math.exp((1.0 - s) * psi(n + 1.0, cfg).value)
    return BoundTriple(lower, value, upper)


def kershaw_psi_bounds(x: float, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> BoundTriple:
    """exp[(1-s) psi(x + sqrt(s))] < Gamma(x+1)/Gamma(x+s) < exp[(1-s) psi(x + (s+1)/2)]."""
    x = float(x)
    s = float(s)
    if x <= 0.0:
        raise DomainError(f"kershaw_psi_bounds requires x > 0, got {x!r}")
    if not (0.0 < s < 1.0):
        raise DomainError(f"kershaw_psi_bounds requires 0 < s < 1, got {s!r}")
    value = math.exp(_lg(x + 1.0, cfg) - _lg(x + s, cfg))
    lower = math.exp((1.0 - s) * psi(x + math.sqrt(s), cfg).value)
    upper = math.exp((1.0 - s) * psi(x + (s + 1.0) / 2.0, cfg).value)
    return BoundTriple(lower, value, upper)


def kershaw_power_bounds(x: float, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> BoundTriple:
    """(x + s/2)^{1-s} < Gamma(x+1)/Gamma(x+s) < (x - 1/2 + sqrt(s + 1/4))^{1-s}."""
    x = float(x)
    s = float(s)
    if x <= 0.0:
        raise DomainError(f"kershaw_power_bounds requires x > 0, got {x!r}")
    if not (0.0 < s < 1.0):
        raise DomainError(f"kershaw_power_bounds requires 0 < s < 1, got {s!r}")
    value = math.exp(_lg(x + 1.0, cfg) - _lg(x + s, cfg))
    lower = (x + s / 2.0) ** (1.0 - s)
    upper = (x - 0.5 + math.sqrt(s + 0.25)) ** (1.0 - s)
    return BoundTriple(lower, value, upper)


def q_sandwich(x: float, s: float, q, cfg: EvalConfig = DEFAULT_CONFIG) -> BoundTriple:
    """q-analogue sandwich for Gamma_q(x+1)/Gamma_q(x+s) on x > -s/2.

    lower = ((1-q^{x+s/2})/(1-q))^{1-s}, upper = exp[(1-s) psi_q(x+(s+1)/2)];
    at q = 1 both members reduce to the classical forms.
    """
    x = float(x)
    s = float(s)
    q = q if isinstance(q, QValue) else QValue(float(q))
    if not (0.0 < s < 1.0):
        raise DomainError(f"q_sandwich requires 0 < s < 1, got {s!r}")
    if not x > -s / 2.0:
        raise DomainError(f"q_sandwich requires x > -s/2, got x={x!r}, s={s!r}")
    if q.is_classical:
        lower = (x + s / 2.0) ** (1.0 - s)
        value = math.exp(_lg(x + 1.0, cfg) - _lg(x + s, cfg))
        upper = math.exp((1.0 - s) * psi(x + (s + 1.0) / 2.0, cfg).value)
    else:
        lq = math.log(q.q)
        lower = (-math.expm1((x + s / 2.0) * lq) / (1.0 - q.q)) ** (1.0 - s)
        value = math.exp(
            log_gamma_q(x + 1.0, q, cfg).value - log_gamma_q(x + s, q, cfg).value
        )
        upper = math.exp((1.0 - s) * psi_q(x + (s + 1.0) / 2.0, q, cfg).value)
    return BoundTriple(lower, value, upper)


def _lgamma_shifted(z: complex, cfg: EvalConfig) -> complex:
    """Complex log-gamma continued to Re z <= 0 by the recurrence (poles excluded)."""
    k = 0
    while (z.real + k) < 0.5:
        k += 1
    acc = 0.0 + 0.0j
    for j in range(k):
        w = z + j
        if w == 0:
            raise DomainError(f"log-gamma pole at {z!r} + {j}")
        acc += cmath.log(w)
    return log_gamma(z + k, cfg).value - acc


def rademacher_ratio_bound(
    s: complex, c: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> tuple[float, float]:
    """(|Gamma(s+c)/Gamma(s)|, |s|^c) under Re(s) >= (1-c)/2, 0 <= c <= 1.

    c = 1 is the recurrence equality |Gamma(s+1)/Gamma(s)| = |s| and is handled
    exactly; c = 0 degenerates to (1, 1).
    """
    s = complex(s)
    c = float(c)
    if not (0.0 <= c <= 1.0):
        raise DomainError(f"rademacher_ratio_bound requires 0 <= c <= 1, got {c!r}")
    if s == 0:
        raise DomainError("rademacher_ratio_bound requires s != 0")
    if s.real < (1.0 - c) / 2.0:
        raise DomainError(
            f"hypothesis Re(s) >= (1-c)/2 violated: Re(s)={s.real}, c={c}"
        )
    bound = abs(s) ** c
    if c == 0.0:
        return 1.0, bound
    if c == 1.0:
        return abs(s), bound
    modulus = math.exp((_lgamma_shifted(s + c, cfg) - _lgamma_shifted(s, cfg)).real)
    return modulus, bound


def beta_ratio_modulus(
    s: complex, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> tuple[float, float]:
    """(|Gamma(s+a)Gamma(s+b) / (Gamma(s)Gamma(s+a+b))|, 1.0) for Re(s) > (1-a-b)/2.

    Arguments left of the imaginary axis (possible when a + b > 1) are reached
    through the recurrence, not reflection, so gamma poles raise cleanly.
    """
    s = complex(s)
    a = float(a)
    b = float(b)
    if not (0.0 <= a <= 1.0):
        raise DomainError(f"beta_ratio_modulus requires 0 <= a <= 1, got {a!r}")
    if b < 0.0:
        raise DomainError(f"beta_ratio_modulus requires b >= 0, got {b!r}")
    if s.real <= (1.0 - a - b) / 2.0:
        raise DomainError(
            f"hypothesis Re(s) > (1-a-b)/2 violated: Re(s)={s.real}, a={a}, b={b}"
        )
    if a == 0.0:
        return 1.0, 1.0
    lg = lambda z: _lgamma_shifted(z, cfg)
    log_ratio = lg(s + a) + lg(s + b) - lg(s) - lg(s + a + b)
    return math.exp(log_ratio.real), 1.0
