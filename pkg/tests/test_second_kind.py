import cmath
import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from legendre_dmu import (
    DiffScheme,
    EndpointError,
    NonexistentFunction,
    WRepresentation,
    dq_dmu_at_int,
    dq_dmu_at_zero,
    fd_dmu,
    legendre_q,
    q_general,
    q_int,
    q_neg_degree_general,
    q_neg_degree_int_gt,
    q_on_cut,
    w_on_cut,
    w_poly,
)
from legendre_dmu.second_kind import christoffel_descending, christoffel_odd_sum

EULER_GAMMA = 0.57721566490153286061

# frozen from mpmath.legenq (type 3 off the cut, type 2 on it)
Q_REFERENCE = [
    (2, 0.3, 2, 0.016739177605551454 + 0.02303950141983697j),
    (3, 1.5 + 0.5j, 1.2 + 0.7j, -0.03208265684757629 + 0.012798666957534753j),
    (1, 1, 2, -0.20327438748290555),
    (2, 0, 2, 0.02118379383730165),
    (0, 0.3, -0.5 + 1.5j, 0.32400146067548136 - 0.39622317865269135j),
    (3, 5, 2.5, -15.201028544330354),
]

Q_CUT_REFERENCE = [(1, 1, 0.3, -0.609748335072981), (2, 0, 0.5, -0.8186632680417568)]


@pytest.mark.parametrize("n, mu, z, expected", Q_REFERENCE)
def test_q_reference_values(n, mu, z, expected):
    assert abs(legendre_q(n, mu, z) - expected) <= 1e-13 * abs(expected)


@pytest.mark.parametrize("n, m, x, expected", Q_CUT_REFERENCE)
def test_q_on_cut_reference_values(n, m, x, expected):
    assert abs(q_on_cut(n, m, x) - expected) <= 1e-13 * abs(expected)


def test_classic_closed_forms():
    # Q_0(z) = L/2 and Q_1(z) = z L/2 - 1 with L = ln((z+1)/(z-1))
    for z in (2, 1.5, 3 + 1j):
        L = cmath.log((z + 1) / (z - 1))
        assert abs(q_int(0, 0, z) - L / 2) < 1e-14 * abs(L)
        assert abs(q_int(1, 0, z) - (z * L / 2 - 1)) < 1e-13 * max(1, abs(z * L))


def test_every_w_form_agrees():
    z = 1.4 - 0.8j
    for n in range(5):
        for m in range(n + 1):
            values = [w_poly(n, m, z, repr=r) for r in WRepresentation]
            for v in values:
                assert abs(v - values[0]) <= 1e-11 * max(1, abs(values[0]))


def test_christoffel_collapse():
    for n in range(9):
        for z in (2, 1.2 + 0.7j):
            w = w_poly(n, 0, z)
            assert abs(christoffel_odd_sum(n, z) - w) <= 1e-13 * max(1, abs(w))
            assert abs(christoffel_descending(n, z) - w) <= 1e-13 * max(1, abs(w))


def test_general_q_forms_agree():
    z = 1.7 + 0.4j
    for mu in (0.3, -1.6 + 0.2j):
        a = q_general(3, mu, z, form="order")
        b = q_general(3, mu, z, form="argument")
        assert abs(a - b) <= 1e-12 * abs(a)
        forms = [q_neg_degree_general(2, mu, z, form=f) for f in ("complement", "order", "argument")]
        for v in forms:
            assert abs(v - forms[0]) <= 1e-12 * abs(forms[0])


def test_negative_degree_argument_selects_partner():
    # a negative degree argument selects the partner degree -n-1
    for n, m in [(0, 1), (1, 3), (2, 4)]:
        lhs = q_int(-n - 1, m, 2.5)
        assert lhs == q_neg_degree_int_gt(n, m, 2.5)


def test_nonexistent_cases_raise():
    with pytest.raises(NonexistentFunction):
        q_int(1, 2, 2.0, sign=-1)
    with pytest.raises(NonexistentFunction):
        q_int(-2, 1, 2.0)
    with pytest.raises(NonexistentFunction):
        q_neg_degree_general(3, 2, 2.0)
    with pytest.raises(NonexistentFunction):
        legendre_q(1, -2, 2.0)
    with pytest.raises(EndpointError):
        w_on_cut(2, 1, -1.0)


def test_w_on_cut_direct_form():
    for n in range(6):
        for m in range(n + 1):
            for x in (0.0, 0.45, -0.8):
                a = w_on_cut(n, m, x)
                b = w_on_cut(n, m, x, repr="direct")
                assert abs(a - b) <= 1e-11 * max(1, abs(a))


def test_dq_at_zero_closed_value():
    # d/dmu Q_0^mu(2) at mu = 0 is (i pi - gamma) ln(3)/2
    expected = (1j * math.pi - EULER_GAMMA) * 0.5 * math.log(3)
    assert abs(dq_dmu_at_zero(0, 2) - expected) < 1e-14


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 5), st.integers(1, 4), st.floats(1.1, 3.0), st.floats(-1.0, 1.0))
def test_dq_at_integer_matches_finite_difference(n, k, re, im):
    m = n + k
    z = complex(re, im)
    est, _ = fd_dmu(lambda mu: q_general(n, mu, z), m, DiffScheme())
    exact = dq_dmu_at_int(n, m, z)
    peak = max(abs(q_general(n, m + s, z)) for s in (-1e-3, 1e-3))
    assert abs(est - exact) <= 1e-5 * max(1, abs(exact), peak)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 8), st.floats(-0.95, 0.95))
def test_w_on_cut_parity(n, x):
    for m in range(n + 1):
        a = w_on_cut(n, m, -x)
        b = (-1) ** (n + m + 1) * w_on_cut(n, m, x)
        assert abs(a - b) <= 1e-10 * max(1, abs(a))
