"""Oracle and invariant tests for the gamma / q-gamma / psi evaluators.

Expected values are either closed forms, high-precision references computed
with mpmath, or independent brute-force oracles (partial products, partial
sums, quadrature, finite differences) evaluated inside the tests.
"""

import math

import mpmath as mp
import numpy as np
import pytest
from scipy.integrate import quad

from qgamma import special as sp

mp.mp.dps = 30

EULER_GAMMA = 0.5772156649015329
PI2_OVER_6 = 1.6449340668482264


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


def test_qvalue_range():
    assert sp.QValue(0.5).q == 0.5
    assert sp.QValue(1.0).is_classical
    assert not sp.QValue(0.999999).is_classical
    for bad in (0.0, -0.1, 1.0000001, float("nan")):
        with pytest.raises(sp.DomainError):
            sp.QValue(bad)


def test_eval_config_validation():
    sp.EvalConfig(rel_tol=1e-10, max_terms=10, q_series_max=0.9)
    with pytest.raises(sp.DomainError):
        sp.EvalConfig(rel_tol=0.0)
    with pytest.raises(sp.DomainError):
        sp.EvalConfig(max_terms=0)
    with pytest.raises(sp.DomainError):
        sp.EvalConfig(q_series_max=1.0)


def test_euler_gamma_partial_sum_oracle():
    # midpoint-accelerated form of lim (sum 1/k - log n); plain log n converges
    # only like 1/(2n), the log(n + 1/2) variant like 1/(24 n^2)
    n = 2_000_000
    harmonic = float(np.sum(1.0 / np.arange(1, n + 1, dtype=float)))
    limit = harmonic - math.log(n + 0.5)
    assert abs(sp.EULER_GAMMA - limit) < 1e-12


# ---------------------------------------------------------------------------
# classical log-gamma / psi / polygamma
# ---------------------------------------------------------------------------


def test_log_gamma_trivial_and_frozen():
    assert abs(sp.log_gamma(1.0).value) <= 1e-13
    assert abs(sp.log_gamma(2.0).value) <= 1e-13
    assert abs(sp.log_gamma(0.5).value - 0.57236494292470009) <= 1e-13
    assert abs(sp.log_gamma(1.5).value - (-0.12078223763524522)) <= 1e-13


def test_log_gamma_real_grid_relative_accuracy():
    xs = np.concatenate(
        [np.geomspace(1e-3, 0.98, 25), np.geomspace(1.02, 1.98, 10), np.geomspace(2.02, 170.0, 40)]
    )
    for x in xs:
        want = float(mp.loggamma(mp.mpf(float(x))))
        got = sp.log_gamma(float(x)).value
        assert abs(got - want) <= 1e-12 * max(abs(want), 1e-2), x


def test_log_gamma_complex_strip():
    for z in (0.3 + 1j, 1 + 3j, 2.5 - 40j, 0.05 + 100j, 30 + 100j, 7 - 0.1j, 169 + 99j):
        want = mp.loggamma(z)
        got = sp.log_gamma(z).value
        assert abs(got - complex(want.real, want.imag)) <= 1e-12 * max(1.0, abs(want)), z


def test_log_gamma_domain():
    for z in (0.0, -1.0, -0.5 + 2j):
        with pytest.raises(sp.DomainError):
            sp.log_gamma(z)


def test_gamma_wrapper():
    assert abs(sp.gamma(0.5).value - math.sqrt(math.pi)) <= 1e-12
    with pytest.raises(OverflowError):
        sp.gamma(200.0)


def test_psi_frozen_values():
    assert abs(sp.psi(1.0).value - (-EULER_GAMMA)) <= 1e-13
    assert abs(sp.psi(2.0).value - (1.0 - EULER_GAMMA)) <= 1e-13
    assert abs(sp.psi(0.5).value - (-1.9635100260214235)) <= 1e-13
    with pytest.raises(sp.DomainError):
        sp.psi(0.0)


def test_psi_recurrence_and_reference():
    for x in np.geomspace(0.05, 160.0, 30):
        x = float(x)
        assert abs(sp.psi(x + 1.0).value - sp.psi(x).value - 1.0 / x) <= 1e-12 * max(
            1.0, abs(sp.psi(x).value)
        )
        want = float(mp.digamma(mp.mpf(x)))
        assert abs(sp.psi(x).value - want) <= 1e-12 * max(1.0, abs(want))


def test_psi_n_frozen_values():
    assert abs(sp.psi_n(1, 1.0).value - PI2_OVER_6) <= 1e-12
    assert abs(sp.psi_n(2, 1.0).value - (-2.4041138063191886)) <= 1e-12
    for n, x in [(1, 0.1), (2, 3.3), (3, 0.7), (5, 12.0)]:
        want = float(mp.polygamma(n, mp.mpf(x)))
        assert abs(sp.psi_n(n, x).value - want) <= 1e-12 * max(1.0, abs(want))
    with pytest.raises(sp.DomainError):
        sp.psi_n(0, 1.0)
    with pytest.raises(sp.DomainError):
        sp.psi_n(1, -1.0)


def test_psi_n_asymptotic_consistency():
    x = 100.0
    approx = 1.0 / x + 1.0 / (2.0 * x * x)
    got = sp.psi_n(1, x).value
    assert abs(got - approx) / got < 1e-3


def test_psi_matches_central_difference_of_log_gamma():
    for x in (0.6, 1.7, 9.0):
        h = 1e-5
        diff = (sp.log_gamma(x + h).value - sp.log_gamma(x - h).value) / (2.0 * h)
        assert abs(diff - sp.psi(x).value) <= 1e-6


def test_psi_n_matches_central_difference_of_psi():
    for x in (0.6, 1.7, 9.0):
        h = 1e-5
        diff = (sp.psi(x + h).value - sp.psi(x - h).value) / (2.0 * h)
        assert abs(diff - sp.psi_n(1, x).value) <= 1e-6


# ---------------------------------------------------------------------------
# q-gamma
# ---------------------------------------------------------------------------


def _telescoped_gamma_q(k: int, q: float) -> float:
    # Gamma_q(k) from Gamma_q(1) = 1 and the recurrence factor (1-q^x)/(1-q)
    val = 1.0
    for j in range(1, k):
        val *= -math.expm1(j * math.log(q)) / (1.0 - q)
    return val


def test_log_gamma_q_identity_case():
    res = sp.log_gamma_q(1.0, 0.5)
    assert res.value == 0.0 and res.converged


def test_gamma_q_telescoping_oracle():
    for q in (0.1, 0.5, 0.9):
        for k in (2, 3, 4, 7):
            want = _telescoped_gamma_q(k, q)
            got = sp.gamma_q(float(k), q).value
            assert abs(got - want) <= 1e-12 * want, (k, q)
    assert abs(sp.log_gamma_q(3.0, 0.5).value - math.log(1.5)) <= 1e-13
    assert abs(sp.gamma_q(4.0, 0.5).value - 2.625) <= 1e-12


def test_log_gamma_q_partial_product_oracle():
    x, q = 0.5, 0.9
    n = np.arange(0, 2000, dtype=float)
    oracle = (1.0 - x) * math.log1p(-q) + float(
        np.sum(np.log1p(-(q ** (n + 1.0))) - np.log1p(-(q ** (n + x))))
    )
    res = sp.log_gamma_q(x, q)
    assert abs(res.value - oracle) <= res.abs_error_bound + 1e-14


def test_log_gamma_q_routes_and_domain():
    assert abs(sp.log_gamma_q(3.0, 1.0).value - math.log(2.0)) <= 1e-12
    with pytest.raises(sp.DomainError):
        sp.log_gamma_q(-1.0, 0.5)
    with pytest.raises(sp.DomainError):
        sp.log_gamma_q(1.0, 0.9999999)  # above q_series_max
    with pytest.raises(sp.ConvergenceError):
        sp.log_gamma_q(0.01, 0.999, sp.EvalConfig(max_terms=100))


def test_gamma_q_overflow():
    with pytest.raises(OverflowError):
        sp.gamma_q(3000.0, 0.99)


def test_gamma_q_recurrence_residual():
    for q in (0.1, 0.5, 0.9):
        lq = math.log(q)
        for x in np.linspace(0.1, 20.0, 23):
            x = float(x)
            left = sp.gamma_q(x + 1.0, q).value
            right = -math.expm1(x * lq) / (1.0 - q) * sp.gamma_q(x, q).value
            assert abs(left - right) <= 1e-10 * left, (x, q)


def test_gamma_q_classical_limit_decreasing():
    for x in (0.5, 1.5, 2.5):
        gx = sp.gamma(x).value
        errs = [abs(sp.gamma_q(x, q).value - gx) for q in (0.9, 0.99, 0.999)]
        assert errs[0] > errs[1] > errs[2], (x, errs)


# ---------------------------------------------------------------------------
# q-psi
# ---------------------------------------------------------------------------


def test_psi_q_partial_sum_oracle():
    x, q = 1.0, 0.5
    k = np.arange(1, 201, dtype=float)
    oracle = -math.log1p(-q) + math.log(q) * float(np.sum(q ** (k * x) / (1.0 - q ** k)))
    res = sp.psi_q(x, q)
    assert abs(res.value - oracle) <= res.abs_error_bound + 1e-14


def test_psi_q_matches_log_gamma_q_derivative():
    h = 1e-5
    for x, q in [(0.7, 0.5), (2.3, 0.9), (5.0, 0.2)]:
        diff = (sp.log_gamma_q(x + h, q).value - sp.log_gamma_q(x - h, q).value) / (2 * h)
        assert abs(diff - sp.psi_q(x, q).value) <= 1e-6, (x, q)


def test_psi_q_classical_limit():
    target = sp.psi(2.0).value
    errs = [abs(sp.psi_q(2.0, q).value - target) for q in (0.9, 0.99, 0.999)]
    assert errs[0] > errs[1] > errs[2]
    assert abs(sp.psi_q(2.0, 1.0).value - target) == 0.0


def test_psi_q_representation_consistency():
    # psi_q(x) = -log(1-q) - sum_k mass e^{-x t_k} / (1 - e^{-t_k}), t_k = -k log q
    for x, q in [(0.5, 0.3), (1.0, 0.5), (2.0, 0.8)]:
        lq = math.log(q)
        k = np.arange(1, 4000, dtype=float)
        t = -k * lq
        rep = -math.log1p(-q) - float(np.sum(-lq * np.exp(-x * t) / -np.expm1(-t)))
        res = sp.psi_q(x, q)
        assert abs(res.value - rep) <= res.abs_error_bound + 1e-10, (x, q)


def test_psi_q_n_partial_sum_oracle():
    n, x, q = 1, 1.0, 0.5
    k = np.arange(1, 400, dtype=float)
    oracle = math.log(q) ** 2 * float(np.sum(k * q ** (k * x) / (1.0 - q ** k)))
    res = sp.psi_q_n(n, x, q)
    assert abs(res.value - oracle) <= res.abs_error_bound + 1e-14


def test_psi_q_n_matches_central_difference():
    h = 1e-5
    for x, q in [(0.8, 0.5), (2.0, 0.9)]:
        diff = (sp.psi_q(x + h, q).value - sp.psi_q(x - h, q).value) / (2 * h)
        assert abs(diff - sp.psi_q_n(1, x, q).value) <= 1e-6
        diff2 = (sp.psi_q_n(1, x + h, q).value - sp.psi_q_n(1, x - h, q).value) / (2 * h)
        assert abs(diff2 - sp.psi_q_n(2, x, q).value) <= 1e-6


def test_psi_q_n_first_derivative_positive():
    for q in (0.1, 0.5, 0.9):
        for x in np.geomspace(0.05, 30.0, 12):
            assert sp.psi_q_n(1, float(x), q).value > 0.0
            assert sp.psi_q_n(2, float(x), q).value < 0.0


def test_psi_q_n_classical_route():
    assert sp.psi_q_n(1, 1.0, 1.0).value == sp.psi_n(1, 1.0).value


# ---------------------------------------------------------------------------
# dilogarithm-type series
# ---------------------------------------------------------------------------


def test_dilog_trivial_and_frozen():
    res0 = sp.dilog_F(0.0)
    assert res0.value == 0.0 and res0.terms_used == 0
    assert abs(sp.dilog_F(0.5).value - 0.58224052646501251) <= 1e-13


def test_dilog_at_one_integral_tail():
    res = sp.dilog_F(1.0)
    assert not res.converged
    assert res.abs_error_bound == 1.0 / res.terms_used
    assert abs(res.value - PI2_OVER_6) <= res.abs_error_bound


def test_dilog_quadrature_oracle():
    val, err = quad(lambda t: -math.log1p(-t) / t, 0.0, 0.5, epsabs=1e-13)
    assert err < 1e-11
    assert abs(sp.dilog_F(0.5).value - val) <= 1e-10


def test_dilog_domain():
    for x in (-0.1, 1.1):
        with pytest.raises(sp.DomainError):
            sp.dilog_F(x)


# ---------------------------------------------------------------------------
# measure moments
# ---------------------------------------------------------------------------


def test_measure_moment_closed_forms():
    assert abs(sp.measure_moment(1.0, 0.5) - math.log(2.0)) <= 1e-15
    assert abs(sp.measure_moment_over_t(1.0, 0.5) - math.log(2.0)) <= 1e-15
    assert abs(sp.measure_moment_over_t(2.0, 0.5) - 0.28768207245178093) <= 1e-15


def test_measure_moment_discrete_sum_oracle():
    for x, q in [(1.0, 0.5), (2.0, 0.3), (3.0, 0.5)]:
        lq = math.log(q)
        k = np.arange(1, 61, dtype=float)
        s1 = float(np.sum(-lq * q ** (k * x)))
        s2 = float(np.sum(q ** (k * x) / k))
        assert abs(sp.measure_moment(x, q) - s1) <= 1e-10
        assert abs(sp.measure_moment_over_t(x, q) - s2) <= 1e-10


def test_measure_moment_decays():
    xs = np.geomspace(0.5, 200.0, 12)
    vals = [sp.measure_moment(float(x), 0.5) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1e-30


def test_measure_moment_domain():
    with pytest.raises(sp.DomainError):
        sp.measure_moment(1.0, 1.0)
    with pytest.raises(sp.DomainError):
        sp.measure_moment_over_t(-1.0, 0.5)


# ---------------------------------------------------------------------------
# cross-cutting invariants
# ---------------------------------------------------------------------------


def _converged_invariant(res, cfg):
    assert res.terms_used <= cfg.max_terms
    if res.converged:
        assert res.abs_error_bound <= cfg.rel_tol * max(1.0, abs(res.value))


def test_series_result_invariants():
    cfg = sp.DEFAULT_CONFIG
    samples = [
        sp.log_gamma_q(0.7, 0.9, cfg),
        sp.gamma_q(2.5, 0.5, cfg),
        sp.psi_q(0.7, 0.9, cfg),
        sp.psi_q_n(2, 0.7, 0.9, cfg),
        sp.dilog_F(0.9, cfg),
        sp.psi(3.3, cfg),
        sp.psi_n(1, 3.3, cfg),
        sp.log_gamma(3.3, cfg),
    ]
    for res in samples:
        _converged_invariant(res, cfg)


def test_error_honesty_under_tightening():
    loose = sp.EvalConfig(rel_tol=1e-10)
    tight = sp.EvalConfig(rel_tol=5e-11)
    pairs = [
        (sp.log_gamma_q(0.7, 0.9, loose), sp.log_gamma_q(0.7, 0.9, tight)),
        (sp.psi_q(0.7, 0.9, loose), sp.psi_q(0.7, 0.9, tight)),
        (sp.psi_q_n(1, 0.7, 0.9, loose), sp.psi_q_n(1, 0.7, 0.9, tight)),
        (sp.dilog_F(0.9, loose), sp.dilog_F(0.9, tight)),
        (sp.gamma_q(0.7, 0.9, loose), sp.gamma_q(0.7, 0.9, tight)),
    ]
    for a, b in pairs:
        assert abs(a.value - b.value) <= a.abs_error_bound


def test_gamma_ratio_asymptotic_sanity():
    # z^{b-a} Gamma(z+a)/Gamma(z+b) - 1 - (a-b)(a+b+1)/(2z) shrinks at least
    # as fast as 1/z between z = 400 and z = 200
    for a, b in [(0.3, 0.7), (0.0, 1.0)]:
        def residual(z):
            ratio = math.exp(
                (b - a) * math.log(z) + sp.log_gamma(z + a).value - sp.log_gamma(z + b).value
            )
            return ratio - 1.0 - (a - b) * (a + b + 1.0) / (2.0 * z)

        assert abs(residual(200.0)) <= 4.0 * abs(residual(400.0)) + 1e-13, (a, b)
