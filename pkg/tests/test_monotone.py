"""Decreasing-function calculus: evaluation, inverses, regularization."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from growthbound.errors import ArgumentError, DomainError
from growthbound.monotone import (
    INF,
    AffineConcave,
    CallableDecreasing,
    ExpPower,
    Interval,
    Log1pConcave,
    LogPower,
    PowerConcave,
    PowerLaw,
    PsiEta,
    Tabulated,
    derivative,
    evaluate,
    fundamental_eta,
    gen_inverse,
    right_regularize,
)


def test_interval_requires_order():
    with pytest.raises(ArgumentError):
        Interval(2.0, 1.0)


class TestEvaluate:
    def test_power_law(self):
        f = PowerLaw(C=1.0, b=2.0)
        assert evaluate(f, 0.5) == pytest.approx(4.0, abs=1e-12)

    def test_exp_power(self):
        f = ExpPower(alpha=1.0)
        assert evaluate(f, 1.0) == pytest.approx(math.e, rel=1e-12)

    def test_tabulated_hits_knots_exactly(self):
        ts = np.linspace(0.1, 2.0, 17)
        f = Tabulated(ts, 1.0 / ts)
        for t in ts:
            assert evaluate(f, t) == 1.0 / t

    def test_outside_domain_raises(self):
        f = LogPower(b=1.0, eps_scale=1.0)  # domain (0, 1/e]
        with pytest.raises(DomainError):
            evaluate(f, 0.5)
        with pytest.raises(DomainError):
            evaluate(f, 0.0)

    def test_vectorized(self):
        f = PowerLaw(C=2.0, b=1.0)
        np.testing.assert_allclose(f(np.array([1.0, 2.0, 4.0])), [2.0, 1.0, 0.5])


class TestFundamentalEta:
    def test_k3(self):
        assert fundamental_eta(3)(0.5) == pytest.approx(2.0, abs=1e-12)

    def test_k2(self):
        assert fundamental_eta(2)(math.exp(-1.0)) == pytest.approx(1.0, abs=1e-12)

    def test_k4(self):
        assert fundamental_eta(4)(0.1) == pytest.approx(100.0, rel=1e-12)

    def test_k2_domain_is_unit(self):
        eta = fundamental_eta(2)
        assert eta.domain.hi == 1.0
        assert eta(0.5) == pytest.approx(math.log(2.0), rel=1e-12)

    def test_rejects_k1(self):
        with pytest.raises(ArgumentError):
            fundamental_eta(1)


class TestGenInverse:
    def test_power_law_closed_form(self):
        f = PowerLaw(C=1.0, b=2.0)
        assert gen_inverse(f)(4.0) == pytest.approx(0.5, abs=1e-12)

    def test_step_jump_inf_convention(self):
        # jump at t=1 from 4 down to 2: values in the gap map to the left
        # endpoint of the preimage interval
        f = Tabulated(np.array([0.0, 1.0, 1.0, 2.0]),
                      np.array([5.0, 4.0, 2.0, 1.0]))
        finv = gen_inverse(f)
        assert finv(3.0) == pytest.approx(1.0, abs=1e-12)
        assert finv(2.5) == pytest.approx(1.0, abs=1e-12)

    def test_tabulated_exp_vs_brute_force_scan(self):
        # oracle: brute-force scan of t -> e^(1/t) over a 10^6-point grid
        ts = np.linspace(0.2, 5.0, 4001)
        f = Tabulated(ts, np.exp(1.0 / ts))
        s = math.e
        scan_ts = np.linspace(0.2, 5.0, 10**6)
        scan_vals = np.interp(scan_ts, f.knots_t, f.knots_v)
        oracle = scan_ts[np.argmax(scan_vals <= s)]  # first t with f(t) <= s
        got = gen_inverse(f)(s)
        assert got == pytest.approx(1.0, abs=5e-4)
        assert got == pytest.approx(oracle, abs=5e-5)

    def test_above_sup_clamps_to_left_endpoint(self):
        f = Tabulated(np.array([0.5, 1.0, 2.0]), np.array([3.0, 2.0, 1.0]))
        assert gen_inverse(f)(10.0) == pytest.approx(0.5)

    def test_psieta_roundtrip(self):
        g = PsiEta(psi=PowerConcave(theta=0.5), k=3)
        ginv = gen_inverse(g)
        for t in [0.05, 0.2, 0.7]:
            assert ginv(g(t)) == pytest.approx(t, rel=1e-10)


class TestRightRegularize:
    def test_continuous_identity(self):
        f = PowerLaw(C=1.0, b=1.0)
        g = right_regularize(f)
        ts = np.logspace(-3, 3, 101)
        np.testing.assert_allclose(g(ts), f(ts))

    def test_jump_takes_right_limit(self):
        f = Tabulated(np.array([0.0, 1.0, 1.0, 2.0]),
                      np.array([5.0, 4.0, 2.0, 1.0]))
        assert evaluate(f, 1.0) == 4.0
        assert evaluate(right_regularize(f), 1.0) == 2.0

    def test_gen_inverse_unchanged(self):
        f = Tabulated(np.array([0.0, 1.0, 1.0, 2.0]),
                      np.array([5.0, 4.0, 2.0, 1.0]))
        fi, ri = gen_inverse(f), gen_inverse(right_regularize(f))
        probes = np.linspace(1.01, 4.99, 1000)
        np.testing.assert_allclose(fi(probes), ri(probes), atol=1e-12)


class TestDerivative:
    def test_power_law(self):
        f = PowerLaw(C=1.0, b=1.0)
        assert derivative(f, 2.0) == pytest.approx(-0.25, abs=1e-12)

    def test_log_power(self):
        f = LogPower(b=1.0, eps_scale=1.0, domain=Interval(0.0, 1.0))
        assert derivative(f, 0.5) == pytest.approx(-2.0, abs=1e-12)

    def test_tabulated_fd_matches_closed_form(self):
        ts = np.linspace(0.1, 3.0, 20001)
        tab = Tabulated(ts, 1.0 / ts)
        exact = PowerLaw(C=1.0, b=1.0)
        probes = np.linspace(0.3, 2.8, 37)
        dev = np.abs(tab.derivative(probes) - exact.derivative(probes))
        assert dev.max() <= 10 * tab.fd_step(probes).max()

    def test_outside_domain(self):
        with pytest.raises(DomainError):
            derivative(LogPower(b=1.0), 1.0)


# -- invariants ---------------------------------------------------------------


def _random_instances(seed, count):
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        kind = i % 5
        if kind == 0:
            out.append(PowerLaw(C=float(rng.uniform(0.2, 5.0)),
                                b=float(rng.uniform(0.2, 3.0))))
        elif kind == 1:
            out.append(LogPower(b=float(rng.uniform(0.3, 2.5)),
                                eps_scale=float(rng.uniform(0.5, 4.0))))
        elif kind == 2:
            out.append(ExpPower(alpha=float(rng.uniform(0.2, 1.5))))
        elif kind == 3:
            psi = [PowerConcave(theta=float(rng.uniform(0.2, 1.0))),
                   Log1pConcave(),
                   AffineConcave(a=float(rng.uniform(0.0, 2.0)), b=float(rng.uniform(0.5, 2.0)))][i % 3]
            out.append(PsiEta(psi=psi, k=int(rng.integers(2, 5))))
        else:
            ts = np.sort(rng.uniform(0.05, 3.0, size=30))
            ts = np.unique(ts)
            b = float(rng.uniform(0.3, 2.0))
            out.append(Tabulated(ts, ts ** (-b)))
    return out


def test_inverse_law_on_random_instances():
    # eval(f, gen_inverse(f)(s)) <= s + tol  across all families
    for f in _random_instances(7, 40):
        finv = gen_inverse(f)
        s_lo = max(finv.domain.lo, 1e-6)
        ss = np.logspace(math.log10(s_lo + 1e-9 + 1e-3 * abs(s_lo)),
                         math.log10(s_lo + 1e3), 25)
        for s in ss:
            t = finv(float(s))
            if t <= f.domain.lo or not f.domain.contains(float(t)):
                continue
            assert evaluate(f, float(t)) <= s + 1e-6

    # double inverse agrees with the right-regularized original
    f = PowerLaw(C=2.0, b=1.5)
    ff = gen_inverse(gen_inverse(f))
    probes = np.logspace(-2, 2, 50)
    np.testing.assert_allclose(ff(probes), f(probes), rtol=1e-9)


def test_gen_inverse_nonincreasing():
    for f in _random_instances(11, 10):
        finv = gen_inverse(f)
        ss = np.sort(np.logspace(-2, 2, 64)) + max(finv.domain.lo, 0.0)
        vals = finv(ss)
        assert np.all(np.diff(vals) <= 1e-12)


@given(c=st.floats(0.1, 10.0), t=st.floats(0.01, 100.0),
       b=st.floats(0.1, 4.0))
@settings(max_examples=60, deadline=None)
def test_power_law_exact_scaling(c, t, b):
    f = PowerLaw(C=1.0, b=b)
    assert evaluate(f, c * t) == pytest.approx(c ** (-b) * evaluate(f, t), rel=1e-9)


def test_log_power_weak_singularity():
    f = LogPower(b=1.0, eps_scale=1.0)
    ratio = evaluate(f, 0.5 * 1e-8) / evaluate(f, 1e-8)
    assert 1.0 <= ratio <= 1.1


def test_concavity_probes():
    assert PowerConcave(theta=0.5).concavity_probe()
    assert Log1pConcave().concavity_probe()
    assert AffineConcave(a=1.0, b=2.0).concavity_probe()


def test_concave_second_difference_property():
    psi = PowerConcave(theta=0.7)
    ss = np.logspace(-2, 3, 200)
    v = psi(ss)
    interp = (v[:-2] * (ss[2:] - ss[1:-1]) + v[2:] * (ss[1:-1] - ss[:-2])) / (ss[2:] - ss[:-2])
    assert np.all(v[1:-1] >= interp - 1e-9)


def test_callable_decreasing_with_limits():
    f = CallableDecreasing(fn=lambda t: np.asarray(t) ** -0.1,
                           domain=Interval(0.0, INF),
                           limit_lo=INF, limit_hi=0.0)
    finv = gen_inverse(f)
    assert finv.domain.lo == 0.0
    # bisection inverse of t^-0.1 at s=2 -> t = 2^-10
    assert finv(2.0) == pytest.approx(2.0 ** -10, rel=1e-9)


def test_eval_clamped_is_sound_upper_proxy():
    g = LogPower(b=1.0, eps_scale=1.0)  # domain (0, 1/e]
    # beyond the right edge the clamped value equals the edge value
    assert g.eval_clamped(2.0) == pytest.approx(1.0)
    assert g.eval_clamped(0.0) == INF
    assert g.eval_clamped(0.1) == pytest.approx(math.log(10.0), rel=1e-9)
