import cmath
import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from legendre_dmu import (
    DiffScheme,
    DomainError,
    NonConvergence,
    StepCollision,
    cut_limit,
    fd_dmu,
    legendre_p,
    ode_residual,
    p_on_cut,
)
from legendre_dmu.oracle import expansion_residual, limit_to_integer, richardson


def test_scheme_validation():
    for bad in (dict(h0=1e-1), dict(levels=5), dict(order=3)):
        with pytest.raises(DomainError):
            DiffScheme(**bad)


def test_richardson_removes_quadratic_error():
    values = [1 + 0.3 * h**2 + 0.1 * h**4 for h in (0.1, 0.05, 0.025)]
    best, err = richardson(values)
    assert abs(best - 1) < 1e-12
    assert err < 1e-6


def test_fd_on_known_functions():
    est, _ = fd_dmu(cmath.sin, 0.7)
    assert abs(est - math.cos(0.7)) < 1e-12
    est, _ = fd_dmu(cmath.exp, 1.5, DiffScheme(order=2))
    assert abs(est - math.exp(1.5)) < 1e-6


def test_fd_refuses_integer_samples():
    # mu0 - h0 lands exactly on 2
    with pytest.raises(StepCollision):
        fd_dmu(lambda t: t, 2 + 1e-3)
    # an integer center is fine: only mu0 +/- h is sampled
    est, _ = fd_dmu(lambda t: t * t, 2.0)
    assert abs(est - 4) < 1e-10
    est, _ = limit_to_integer(lambda t: t * t, 3)
    assert abs(est - 9) < 1e-12


def test_second_order_stencil_skips_center():
    # the center itself is integer; the stencil must not sample it
    est, _ = fd_dmu(lambda t: complex(t**3), 2.0, DiffScheme(order=2))
    # round-off in the 1/h**2 stencil dominates at these steps
    assert abs(est - 12) < 1e-6


def test_cut_limit_recovers_boundary_value():
    for n, mu, x in [(2, 0.3, 0.4), (3, 1.5, -0.6), (1, -0.5, 0.0)]:
        for side in (1, -1):
            lim = cut_limit(lambda z: legendre_p(n, mu, z), x, side, tol=1e-6)
            # Ferrers value times the boundary phase
            expected = p_on_cut(n, mu, x) * complex(math.cos(side * math.pi * mu / 2), -math.sin(side * math.pi * mu / 2))
            assert abs(lim - expected) <= 1e-6 * max(1, abs(expected))


def test_cut_limit_detects_divergence():
    with pytest.raises(NonConvergence):
        cut_limit(lambda z: 1 / (z - 0.2), 0.2)
    with pytest.raises(DomainError):
        cut_limit(lambda z: z, 1.0)


def test_residual_kinds():
    for kind in ("P", "dP", "U"):
        r = ode_residual(kind, 4, 0.35, 1.6 + 0.4j)
        assert r.passed and r.residual <= 1e-30 * r.scale
    assert ode_residual("P", 3, -5, 2.0).passed
    with pytest.raises(DomainError):
        ode_residual("X", 1, 0.3, 2.0)
    for ident in ("sum", "derivative"):
        assert expansion_residual(ident, 5, -0.7, 1.2 + 0.7j).passed
    with pytest.raises(DomainError):
        expansion_residual("sum", 0, 0.3, 2.0)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 8),
    st.floats(-3, 3).filter(lambda v: abs(v - round(v)) > 1e-3),
    st.floats(-3, 3),
    st.floats(0.05, 3),
)
def test_residuals_vanish_everywhere(n, mu, re, im):
    z = complex(re, im)
    for kind in ("P", "dP", "U"):
        r = ode_residual(kind, n, mu, z)
        assert r.passed, r


@settings(max_examples=40, deadline=None)
@given(st.floats(-3, 3).filter(lambda v: abs(v - round(v)) > 2e-3))
def test_default_scheme_accuracy_on_analytic_functions(mu):
    est, _ = fd_dmu(cmath.exp, mu)
    assert abs(est - math.exp(mu)) <= 1e-9 * max(1, math.exp(mu))
    est, _ = fd_dmu(lambda t: 3 * t**5 - t**2 + 2, mu)
    assert abs(est - (15 * mu**4 - 2 * mu)) <= 1e-9 * max(1, abs(15 * mu**4))
