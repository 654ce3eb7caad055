"""Numerical complete-monotonicity testing via alternating forward differences.

A function f is completely monotonic when (-1)^n f^(n)(x) >= 0 for all orders;
the finite analogue tested here is (-1)^n Delta_h^n f(x) >= 0 over a grid of
(x, h, n).  The test is one-sided: "consistent-with-CM" is necessary-condition
evidence, never a proof, while "violates-CM" comes with a concrete witness
(x, h, n).  Witnesses with h = 0 denote analytic-derivative checks.

Order 0 (f >= 0 pointwise) is included by default for bare function handles
and excluded for difference checks; theorem cases opt in only when their
statement asserts it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .special import DomainError, _lgamma_core

__all__ = [
    "GridSpec",
    "CMReport",
    "forward_difference",
    "check_cm",
    "check_difference_cm",
    "gautschi_sum_check",
    "DEFAULT_TOL_ABS",
    "DEFAULT_TOL_REL",
]

# High-order alternating sums amplify roundoff by ~2^n, so the violation
# threshold sits well above it for the function scales in the corpus.
DEFAULT_TOL_ABS = 1e-9
DEFAULT_TOL_REL = 1e-9

CONSISTENT = "consistent-with-CM"
VIOLATES = "violates-CM"


@dataclass(frozen=True)
class GridSpec:
    """Sampling plan for a CM check.

    ``x_max + max_order * max(h_set)`` must stay inside the tested function's
    valid interval; geometric spacing requires x_min > 0.
    """

    x_min: float
    x_max: float
    points: int = 21
    spacing: str = "geometric"
    h_set: tuple[float, ...] = (0.125, 0.5, 1.0)
    max_order: int = 8

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise DomainError(f"grid requires x_min < x_max, got {self}")
        if self.points < 2:
            raise DomainError("grid requires points >= 2")
        if self.max_order < 1:
            raise DomainError("grid requires max_order >= 1")
        if not self.h_set or any(h <= 0.0 for h in self.h_set):
            raise DomainError("all difference steps h must be positive")
        if self.spacing not in ("linear", "geometric"):
            raise DomainError(f"unknown spacing {self.spacing!r}")
        if self.spacing == "geometric" and self.x_min <= 0.0:
            raise DomainError("geometric spacing requires x_min > 0")

    def xs(self) -> np.ndarray:
        if self.spacing == "geometric":
            return np.geomspace(self.x_min, self.x_max, self.points)
        return np.linspace(self.x_min, self.x_max, self.points)


@dataclass(frozen=True)
class CMReport:
    """Outcome of a CM scan; ``verdict`` is violates-CM iff the worst signed
    value falls below -(tol_abs + tol_rel * scale) at its own stencil scale."""

    case_id: str
    grid: GridSpec
    tol_abs: float
    tol_rel: float
    per_order_worst: dict[int, float] = field(repr=False)
    worst_violation: float = math.inf
    worst_threshold: float = 0.0
    witness: tuple[float, float, int] = (math.nan, math.nan, -1)  # (x, h, n)
    verdict: str = CONSISTENT
    evaluations: int = 0


def forward_difference(f: Callable[[float], float], x: float, h: float, n: int) -> float:
    """Delta_h^n f(x) = sum_j (-1)^j C(n, j) f(x + (n-j) h)."""
    if h <= 0.0:
        raise DomainError(f"forward_difference requires h > 0, got {h!r}")
    if n < 0:
        raise DomainError(f"forward_difference requires n >= 0, got {n!r}")
    total = 0.0
    for j in range(n + 1):
        total += (-1) ** j * math.comb(n, j) * f(x + (n - j) * h)
    return total


class _Tracker:
    def __init__(self):
        self.per_order: dict[int, float] = {}
        self.worst_margin = math.inf
        self.worst = (math.inf, 0.0, (math.nan, math.nan, -1))
        self.violated = False

    def record(self, signed: float, thresh: float, x: float, h: float, n: int):
        self.per_order[n] = min(self.per_order.get(n, math.inf), signed)
        margin = signed + thresh
        if margin < self.worst_margin:
            self.worst_margin = margin
            self.worst = (signed, thresh, (x, h, n))
        if signed < -thresh:
            self.violated = True


def check_cm(
    fn: Callable[[float], float],
    grid: GridSpec,
    tol_abs: float = DEFAULT_TOL_ABS,
    tol_rel: float = DEFAULT_TOL_REL,
    derivs: Callable[[int, float], float] | None = None,
    include_order_zero: bool = True,
    case_id: str = "",
) -> CMReport:
    """Scan (-1)^n Delta_h^n fn(x) over the grid, plus analytic derivative signs.

    ``derivs(k, x)``, when given, must return the k-th derivative of ``fn``;
    orders 1..3 are checked directly as (-1)^k fn^(k)(x) >= 0.  The violation
    threshold at each stencil is tol_abs + tol_rel * max |fn| over the stencil.
    """
    xs = grid.xs()
    cache: dict[float, float] = {}

    def ev(x: float) -> float:
        v = cache.get(x)
        if v is None:
            v = float(fn(x))
            cache[x] = v
        return v

    tracker = _Tracker()
    if include_order_zero:
        for x in xs:
            v = ev(float(x))
            tracker.record(v, tol_abs + tol_rel * abs(v), float(x), 0.0, 0)

    binom = [[math.comb(n, j) for j in range(n + 1)] for n in range(grid.max_order + 1)]
    for n in range(1, grid.max_order + 1):
        for h in grid.h_set:
            for x in xs:
                x = float(x)
                vals = [ev(x + j * h) for j in range(n + 1)]
                delta = 0.0
                for j in range(n + 1):
                    delta += (-1) ** j * binom[n][j] * vals[n - j]
                signed = delta if n % 2 == 0 else -delta
                scale = max(abs(v) for v in vals)
                tracker.record(signed, tol_abs + tol_rel * scale, x, h, n)

    if derivs is not None:
        for k in range(1, 4):
            for x in xs:
                x = float(x)
                d = float(derivs(k, x))
                signed = d if k % 2 == 0 else -d
                scale = max(abs(ev(x)), abs(d))
                tracker.record(signed, tol_abs + tol_rel * scale, x, 0.0, k)

    signed, thresh, witness = tracker.worst
    return CMReport(
        case_id=case_id,
        grid=grid,
        tol_abs=tol_abs,
        tol_rel=tol_rel,
        per_order_worst=dict(sorted(tracker.per_order.items())),
        worst_violation=signed,
        worst_threshold=thresh,
        witness=witness,
        verdict=VIOLATES if tracker.violated else CONSISTENT,
        evaluations=len(cache),
    )


def check_difference_cm(
    fn: Callable[[float], float],
    a: float,
    grid: GridSpec,
    tol_abs: float = DEFAULT_TOL_ABS,
    tol_rel: float = DEFAULT_TOL_REL,
    case_id: str = "",
) -> CMReport:
    """CM check of x -> fn(x) - fn(x + a), the difference of a CM candidate.

    For CM fn this difference is again CM; the converse fails, so order 0 is
    not tested here (a non-CM fn with constant difference passes by design).
    """
    if a <= 0.0:
        raise DomainError(f"check_difference_cm requires a > 0, got {a!r}")
    return check_cm(
        lambda x: fn(x) - fn(x + a),
        grid,
        tol_abs=tol_abs,
        tol_rel=tol_rel,
        include_order_zero=False,
        case_id=case_id or f"difference(a={a})",
    )


def gautschi_sum_check(n: int, samples: int, seed: int) -> float:
    """Worst margin of n - sum_k 1/Gamma(x_k) over constrained random tuples.

    Tuples x_1..x_n > 0 with product 1 are drawn in log space from a seeded
    normal generator and re-centered so the log-sum is exactly zero.  The
    inequality holds for n <= 8, so the returned minimum should be >= 0 up to
    roundoff (n = 1 pins x_1 = 1 and gives margin 0).
    """
    n = int(n)
    if not (1 <= n <= 8):
        raise DomainError(f"gautschi_sum_check requires 1 <= n <= 8, got {n!r}")
    if samples < 1:
        raise DomainError("samples must be >= 1")
    rng = np.random.default_rng(int(seed))
    y = rng.normal(0.0, 0.75, size=(int(samples), n))
    y -= y.mean(axis=1, keepdims=True)
    x = np.exp(y)
    inv_gamma = np.exp(-_lgamma_core(x))
    margins = n - inv_gamma.sum(axis=1)
    return float(margins.min())
