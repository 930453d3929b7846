import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from legendre_dmu import (
    DomainError,
    LogPoly,
    differentiate,
    p_int,
    q_int,
    rodrigues_p_int,
    rodrigues_q_int,
    rodrigues_u_int,
    u_int,
)
from legendre_dmu.logpoly import legendre_coefficients


def test_legendre_coefficients_low_degrees():
    assert legendre_coefficients(0) == [1]
    assert legendre_coefficients(2) == [Fraction(-1, 2), 0, Fraction(3, 2)]
    assert legendre_coefficients(3) == [0, Fraction(-3, 2), 0, Fraction(5, 2)]


def test_log_derivative_is_rational():
    d = LogPoly.log().derivative()
    assert not d.b
    z = 2.5 + 0.5j
    assert abs(d.evaluate(z) - (1 / (z + 1) - 1 / (z - 1))) < 1e-15


def test_log_squared_rejected():
    with pytest.raises(DomainError):
        LogPoly.log() * LogPoly.log()
    with pytest.raises(DomainError):
        differentiate(LogPoly.log(), -1)


def test_arithmetic_matches_numbers():
    z = 1.7 + 0.3j
    p = LogPoly.monomial(2, 1, 3) + LogPoly.monomial(-1, 0, Fraction(1, 2), log=True)
    q = LogPoly.monomial(0, 2, -1)
    L = cmath.log((z + 1) / (z - 1))
    pv = 3 * (z - 1) ** 2 * (z + 1) + 0.5 / (z - 1) * L
    qv = -((z + 1) ** 2)
    assert abs((p * q).evaluate(z) - pv * qv) < 1e-12 * abs(pv * qv)
    assert abs((p - q).evaluate(z) - (pv - qv)) < 1e-12 * abs(pv - qv)
    assert abs((2 * p).evaluate(z) - 2 * pv) < 1e-12 * abs(pv)


@pytest.mark.parametrize("n", range(9))
def test_rodrigues_matches_series(n):
    z = 1.3 + 0.9j
    for m in range(n + 1):
        for s in (1, -1):
            assert abs(rodrigues_p_int(n, s * m, z) - p_int(n, s * m, z)) <= 1e-11 * max(1, abs(p_int(n, s * m, z)))
            q = q_int(n, m, z, sign=s)
            assert abs(rodrigues_q_int(n, m, z, sign=s) - q) <= 1e-11 * max(1, abs(q))
        u = u_int(n, m, z)
        assert abs(rodrigues_u_int(n, m, z) - u) <= 1e-11 * max(1, abs(u))


@settings(max_examples=40, deadline=None)
@given(
    st.integers(-3, 3),
    st.integers(-3, 3),
    st.integers(0, 4),
    st.booleans(),
    st.floats(1.2, 3),
    st.floats(-1, 1),
)
def test_derivative_matches_central_difference(i, j, times, log, re, im):
    z = complex(re, im)
    p = LogPoly.monomial(i, j, 1, log)
    d = differentiate(p, 1)
    h = 1e-5
    fd = (p.evaluate(z + h) - p.evaluate(z - h)) / (2 * h)
    assert abs(d.evaluate(z) - fd) <= 1e-6 * max(1, abs(fd))
    # repeated differentiation composes
    assert differentiate(differentiate(p, times), 1) == differentiate(p, times + 1)
