import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from legendre_dmu import (
    DiffScheme,
    NearIntegerOrder,
    RepresentationMismatch,
    URepresentation,
    d2p_dmu2_at_int,
    dp_dmu,
    dp_dmu_at_int,
    dp_dmu_at_neg_int,
    dp_dmu_general,
    dp_dmu_on_cut,
    fd_dmu,
    legendre_u,
    p_general,
    p_on_cut,
    u_general,
    u_int,
)
from legendre_dmu.order_derivative import u_representations
from legendre_dmu.first_kind import GENERAL, NEG_GT, NEG_LE, POS_GT, POS_LE

EULER_GAMMA = 0.57721566490153286061

# d/dmu P_n^mu(z), frozen from mpmath.diff applied to mpmath.legenp
DP_REFERENCE = [
    (2, 0.3, 2, 5.423785147603191),
    (3, 2, 1.5, 5.773530068248925),
    (1, -3, 0.5 + 2j, -0.009585568386461903 + 0.17882820923446605j),
]


@pytest.mark.parametrize("n, mu, z, expected", DP_REFERENCE)
def test_dp_reference_values(n, mu, z, expected):
    assert abs(dp_dmu(n, mu, z) - expected) <= 1e-12 * abs(expected)


def test_dp_zero_degree_zero_order():
    # d/dmu P_0^mu(2) at mu = 0 is -gamma + ln(3)/2
    expected = -EULER_GAMMA + 0.5 * math.log(3)
    assert abs(dp_dmu_at_int(0, 0, 2) - expected) < 1e-14


def test_u_regimes_cover_every_tag():
    for rep in URepresentation:
        for regime in rep.regimes:
            assert rep in u_representations(regime)
    for regime in (GENERAL, POS_LE, POS_GT, NEG_LE, NEG_GT):
        assert u_representations(regime)


@pytest.mark.parametrize("regime, n, m", [(POS_LE, 4, 2), (POS_GT, 2, 5), (NEG_LE, 4, -3), (NEG_GT, 1, -4)])
def test_u_integer_forms_agree(regime, n, m):
    z = 1.3 + 0.6j
    values = [u_int(n, m, z, repr=r) for r in u_representations(regime) if regime in r.regimes]
    for v in values:
        assert abs(v - values[0]) <= 1e-11 * max(1, abs(values[0]))


def test_u_general_forms_agree():
    values = [u_general(3, 0.35 - 0.2j, 2.2 + 0.5j, repr=r) for r in u_representations(GENERAL)]
    for v in values:
        assert abs(v - values[0]) <= 1e-11 * abs(values[0])


def test_u_tag_outside_regime_rejected():
    with pytest.raises(RepresentationMismatch):
        u_int(2, 1, 2.0, repr="U3_6")
    with pytest.raises(NearIntegerOrder):
        u_general(2, 1.0, 2.0)


def test_dispatcher_routes_by_order():
    z = 1.8 + 0.2j
    assert dp_dmu(3, 0.4, z) == dp_dmu_general(3, 0.4, z)
    assert dp_dmu(3, 2, z) == dp_dmu_at_int(3, 2, z)
    assert dp_dmu(3, -5, z) == dp_dmu_at_neg_int(3, 5, z)
    assert legendre_u(3, 0.4, z) == u_general(3, 0.4, z)


@pytest.mark.parametrize("n, m", [(0, 1), (2, 3), (3, 7)])
def test_second_derivative_against_stencil(n, m):
    z = 2.5
    est, _ = fd_dmu(lambda mu: p_general(n, mu, z), m, DiffScheme(order=2))
    exact = d2p_dmu2_at_int(n, m, z)
    assert abs(est - exact) <= 1e-4 * max(1, abs(exact))


@settings(max_examples=25, deadline=None)
@given(
    st.integers(0, 8),
    st.floats(-2.5, 2.5).filter(lambda v: abs(v - round(v)) > 0.01),
    st.floats(1.1, 3.5),
    st.floats(-1.5, 1.5),
)
def test_general_derivative_matches_finite_difference(n, mu, re, im):
    z = complex(re, im)
    est, _ = fd_dmu(lambda t: p_general(n, t, z), mu)
    exact = dp_dmu_general(n, mu, z)
    assert abs(est - exact) <= 1e-6 * max(1, abs(exact), abs(p_general(n, mu, z)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 6), st.integers(-6, 6), st.floats(-0.9, 0.9))
def test_on_cut_derivative_matches_finite_difference(n, m, x):
    est, _ = fd_dmu(lambda t: p_on_cut(n, t, x), m)
    exact = dp_dmu_on_cut(n, m, x)
    peak = max(abs(p_on_cut(n, m + s, x)) for s in (-2e-3, 2e-3))
    assert abs(est - exact) <= 1e-6 * max(1, abs(exact), peak)
