"""Associated Legendre functions of the first kind of integer degree.

Hobson's conventions: P_n^mu(z) carries the factor ((z+1)/(z-1))**(mu/2)
and is single valued off the cut (-inf, 1].  Each finite-sum form is kept
as a separate evaluator so the forms can be checked against each other.
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .errors import DomainError, RepresentationMismatch
from .numerics import (
    Arg,
    CutPoint,
    GeneralOrder,
    IntegerOrder,
    as_arg,
    as_order,
    ctx,
    fact,
    mp_gamma,
    mp_rgamma,
    require_general,
    to_complex,
    to_mp,
)

GENERAL = "general"
POS_LE = "+m<=n"
NEG_LE = "-m<=n"
POS_GT = "+m>n"
NEG_GT = "-m>n"


class PRepresentation(Enum):
    SUM_2_7_UPPER = "Sum2_7_Upper"
    SUM_2_7_LOWER = "Sum2_7_Lower"
    SUM_2_8_UPPER = "Sum2_8_Upper"
    SUM_2_8_LOWER = "Sum2_8_Lower"
    JACOBI_2_3 = "Jacobi2_3"
    INT_2_10 = "IntForm2_10"
    INT_2_13 = "IntForm2_13"
    INT_2_14 = "IntForm2_14"
    INT_2_15_UPPER = "IntForm2_15_Upper"
    INT_2_15_LOWER = "IntForm2_15_Lower"
    INT_2_16 = "IntForm2_16"
    INT_2_17 = "IntForm2_17"
    INT_2_18_UPPER = "IntForm2_18_Upper"
    INT_2_18_LOWER = "IntForm2_18_Lower"
    INT_2_19 = "IntForm2_19"
    INT_2_20 = "IntForm2_20"
    INT_2_21 = "IntForm2_21"
    INT_2_22 = "IntForm2_22"

    @property
    def regime(self) -> str:
        return _P_REGIME[self]


R = PRepresentation
_P_REGIME = {
    R.SUM_2_7_UPPER: GENERAL,
    R.SUM_2_7_LOWER: GENERAL,
    R.SUM_2_8_UPPER: GENERAL,
    R.SUM_2_8_LOWER: GENERAL,
    R.JACOBI_2_3: GENERAL,
    R.INT_2_10: POS_GT,
    R.INT_2_13: POS_LE,
    R.INT_2_14: POS_LE,
    R.INT_2_15_UPPER: POS_LE,
    R.INT_2_15_LOWER: POS_LE,
    R.INT_2_16: NEG_LE,
    R.INT_2_17: NEG_LE,
    R.INT_2_18_UPPER: NEG_LE,
    R.INT_2_18_LOWER: NEG_LE,
    R.INT_2_19: NEG_GT,
    R.INT_2_20: NEG_GT,
    R.INT_2_21: NEG_GT,
    R.INT_2_22: NEG_GT,
}

DEFAULT_P = {
    GENERAL: R.SUM_2_7_UPPER,
    POS_LE: R.INT_2_13,
    NEG_LE: R.INT_2_16,
    POS_GT: R.INT_2_10,
    NEG_GT: R.INT_2_19,
}


def representations(regime: str) -> list[PRepresentation]:
    return [r for r in PRepresentation if r.regime == regime]


def normalize_degree(n: int) -> int:
    """P_{-n-1} = P_n: map any integer degree to a non-negative one."""
    n = int(n)
    return n if n >= 0 else -n - 1


def int_regime(n: int, order: IntegerOrder) -> str:
    if order.m <= n:
        return POS_LE if order.sign > 0 else NEG_LE
    return POS_GT if order.sign > 0 else NEG_GT


def _coerce_repr(rep, enum_cls):
    if rep is None or isinstance(rep, enum_cls):
        return rep
    try:
        return enum_cls(rep)
    except ValueError:
        raise RepresentationMismatch(f"unknown {enum_cls.__name__} tag {rep!r}") from None


# -- general order --------------------------------------------------------------

def jacobi_mp(n: int, alpha, beta, z):
    """Jacobi polynomial via the terminating 2F1(-n, n+a+b+1; a+1; (1-z)/2).

    (a+1)_n/(a+1)_s is expanded as the product (a+s+1)_{n-s}, so no
    division by a vanishing Pochhammer symbol can occur.
    """
    t = (1 - z) / 2
    c = n + alpha + beta + 1
    terms = []
    lower = ctx.mpc(1)  # (-n)_s (c)_s / s!
    for s in range(n + 1):
        upper = ctx.mpc(1)
        for j in range(s + 1, n + 1):
            upper *= alpha + j
        terms.append(upper * lower * t**s)
        lower *= (-n + s) * (c + s) / (s + 1)
    return ctx.fsum(terms) / fact(n)


def jacobi_poly(n: int, alpha: complex, beta: complex, z: complex) -> complex:
    if n < 0:
        raise DomainError("Jacobi polynomial degree must be non-negative")
    return to_complex(jacobi_mp(n, to_mp(alpha), to_mp(beta), to_mp(z)))


@lru_cache(maxsize=8192)
def upper_coeffs(n: int, mu) -> tuple:
    """(k+n)!/(k!(n-k)!) / Gamma(k-mu+1), the coefficients of the default series."""
    return tuple(fact(k + n) * mp_rgamma(k - mu + 1) / (fact(k) * fact(n - k)) for k in range(n + 1))


def horner(coeffs, w):
    s = ctx.mpc(0)
    for c in reversed(coeffs):
        s = s * w + c
    return s


def p_general_mp(n: int, mu, a: Arg, rep: PRepresentation = R.SUM_2_7_UPPER):
    """P_n^mu at a branch-tracked argument, mu a working-precision complex."""
    n = normalize_degree(n)
    rp = a.ratio_pow(mu / 2)
    if rep is R.SUM_2_7_UPPER:
        return rp * horner(upper_coeffs(n, mu), a.zm / 2)
    if rep is R.SUM_2_7_LOWER:
        w = a.zp / 2
        s = ctx.fsum(
            (-1) ** k * fact(k + n) * mp_rgamma(k + mu + 1) / (fact(k) * fact(n - k)) * w**k
            for k in range(n + 1)
        )
        return (-1) ** n * mp_gamma(n + mu + 1) * mp_rgamma(n - mu + 1) * rp * s
    if rep is R.SUM_2_8_UPPER:
        q = a.zm / a.zp
        s = ctx.fsum(
            mp_rgamma(k - mu + 1) * mp_rgamma(n - k + mu + 1) / (fact(k) * fact(n - k)) * q**k
            for k in range(n + 1)
        )
        return fact(n) * mp_gamma(n + mu + 1) * rp * (a.zp / 2) ** n * s
    if rep is R.SUM_2_8_LOWER:
        q = a.zp / a.zm
        s = ctx.fsum(
            mp_rgamma(k + mu + 1) * mp_rgamma(n - k - mu + 1) / (fact(k) * fact(n - k)) * q**k
            for k in range(n + 1)
        )
        return fact(n) * mp_gamma(n + mu + 1) * rp * (a.zm / 2) ** n * s
    if rep is R.JACOBI_2_3:
        return fact(n) * mp_rgamma(n - mu + 1) * rp * jacobi_mp(n, -mu, mu, a.z)
    raise RepresentationMismatch(f"{rep.value} is not a general-order representation")


def p_general(n: int, mu, z, repr=None) -> complex:
    """P_n^mu(z) for non-integer complex mu."""
    n = normalize_degree(n)
    mu = complex(mu.mu if isinstance(mu, GeneralOrder) else mu)
    require_general(mu)
    rep = _coerce_repr(repr, PRepresentation) or DEFAULT_P[GENERAL]
    if rep.regime != GENERAL:
        raise RepresentationMismatch(f"{rep.value} does not apply to general order")
    return to_complex(p_general_mp(n, to_mp(mu), as_arg(z), rep))


# -- integer order --------------------------------------------------------------

@lru_cache(maxsize=65536)
def p_int_mp(n: int, sign: int, m: int, a: Arg, rep: PRepresentation | None = None):
    order = IntegerOrder(sign, m)
    sign = order.sign
    regime = int_regime(n, order)
    rep = rep or DEFAULT_P[regime]
    if rep.regime != regime:
        raise RepresentationMismatch(
            f"{rep.value} covers {rep.regime}, not order {order.value} at degree {n} ({regime})"
        )
    if rep is R.INT_2_10:
        return ctx.mpc(0)
    if rep is R.INT_2_13:
        w = a.zm / 2
        s = ctx.fsum(
            ctx.mpf(fact(k + n + m)) / (fact(k) * fact(k + m) * fact(n - m - k)) * w**k
            for k in range(n - m + 1)
        )
        return a.quarter_sq_pow(m) * s
    if rep is R.INT_2_14:
        w = a.zp / 2
        s = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(k + n)) / (fact(k) * fact(k + m) * fact(n - k)) * w**k
            for k in range(n + 1)
        )
        return (-1) ** n * ctx.mpf(fact(n + m)) / fact(n - m) * a.ratio_pow(ctx.mpf(m) / 2) * s
    if rep in (R.INT_2_15_UPPER, R.INT_2_15_LOWER, R.INT_2_18_UPPER, R.INT_2_18_LOWER):
        upper = rep in (R.INT_2_15_UPPER, R.INT_2_18_UPPER)
        q = a.zm / a.zp if upper else a.zp / a.zm
        lead = (a.zp if upper else a.zm) / 2
        pre = a.ratio_pow(-ctx.mpf(m) / 2 if upper else ctx.mpf(m) / 2)
        s = ctx.fsum(
            ctx.mpf(1) / (fact(k) * fact(k + m) * fact(n - k) * fact(n - m - k)) * q**k
            for k in range(n - m + 1)
        )
        big = fact(n + m) if sign > 0 else fact(n - m)
        return ctx.mpf(fact(n) * big) * pre * lead**n * s
    if rep in (R.INT_2_16, R.INT_2_19):
        w = a.zm / 2
        s = ctx.fsum(
            ctx.mpf(fact(k + n)) / (fact(k) * fact(k + m) * fact(n - k)) * w**k for k in range(n + 1)
        )
        return a.ratio_pow(-ctx.mpf(m) / 2) * s
    if rep is R.INT_2_17:
        w = a.zp / 2
        s = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(k + n + m)) / (fact(k) * fact(k + m) * fact(n - m - k)) * w**k
            for k in range(n - m + 1)
        )
        return (-1) ** (n + m) * ctx.mpf(fact(n - m)) / fact(n + m) * a.quarter_sq_pow(m) * s
    if rep is R.INT_2_20:
        w = a.zp / 2
        s = ctx.fsum(
            ctx.mpf(fact(k + n) * fact(m - k - 1)) / (fact(k) * fact(n - k)) * w**k for k in range(n + 1)
        )
        return a.ratio_pow(-ctx.mpf(m) / 2) * s / (fact(n + m) * fact(m - n - 1))
    if rep is R.INT_2_21:
        q = a.zm / a.zp
        s = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(k + m - n - 1)) / (fact(k) * fact(k + m) * fact(n - k)) * q**k
            for k in range(n + 1)
        )
        return ctx.mpf(fact(n)) / fact(m - n - 1) * a.ratio_pow(-ctx.mpf(m) / 2) * (a.zp / 2) ** n * s
    if rep is R.INT_2_22:
        q = a.zp / a.zm
        s = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(m - k - 1)) / (fact(k) * fact(n - k) * fact(n + m - k)) * q**k
            for k in range(n + 1)
        )
        return (
            (-1) ** n * ctx.mpf(fact(n)) / fact(m - n - 1) * a.ratio_pow(-ctx.mpf(m) / 2) * (a.zm / 2) ** n * s
        )
    raise RepresentationMismatch(f"{rep.value} is not an integer-order representation")


def p_int(n: int, order, z, repr=None) -> complex:
    """P_n^{+/-m}(z); P_n^m with m > n is returned as an exact zero."""
    n = normalize_degree(n)
    order = as_order(order)
    if not isinstance(order, IntegerOrder):
        raise DomainError("p_int needs an integer order")
    rep = _coerce_repr(repr, PRepresentation)
    return to_complex(p_int_mp(n, order.sign, order.m, as_arg(z), rep))


# -- dispatch and on-cut values ---------------------------------------------------

def p_mp(n: int, order, a: Arg, rep=None):
    """Evaluate for either kind of order (internal helper)."""
    n = normalize_degree(n)
    order = as_order(order)
    if isinstance(order, IntegerOrder):
        return p_int_mp(n, order.sign, order.m, a, rep)
    require_general(order.mu)
    return p_general_mp(n, to_mp(order.mu), a, rep or DEFAULT_P[GENERAL])


def legendre_p(n: int, mu, z, repr=None) -> complex:
    """P_n^mu(z) dispatching on whether mu is an exact integer."""
    rep = _coerce_repr(repr, PRepresentation)
    return to_complex(p_mp(n, mu, as_arg(z), rep))


def order_mp(order):
    order = as_order(order)
    if isinstance(order, IntegerOrder):
        return ctx.mpc(order.value)
    return to_mp(order.mu)


def p_on_cut_mp(n: int, order, x: float, side: int = 1, rep=None):
    a = Arg.boundary(x, side)
    mu = order_mp(order)
    return ctx.exp(side * ctx.mpc(0, 1) * ctx.pi * mu / 2) * p_mp(n, order, a, rep)


def p_on_cut(n: int, mu, x, repr=None, side: int = 1) -> complex:
    """Hobson's on-cut value e^{+/- i pi mu/2} P_n^mu(x +/- i0).

    ``side`` picks the boundary used; both give the same value and the
    default (+i0) is the canonical path.
    """
    x = x.x if isinstance(x, CutPoint) else CutPoint(x).x
    rep = _coerce_repr(repr, PRepresentation)
    value = to_complex(p_on_cut_mp(n, mu, x, side, rep))
    if isinstance(as_order(mu), IntegerOrder):
        return complex(value.real, 0.0)
    return value


# -- z-derivatives of ratio-power series ------------------------------------------

def ratio_series_derivs(coeffs, mu, a: Arg):
    """Value, d/dz and d2/dz2 of ((z+1)/(z-1))**(mu/2) * sum_k c_k ((z-1)/2)**k.

    Used for ODE residuals; the differentiation is term by term, exact.
    """
    w = a.zm / 2
    s0 = ctx.fsum(c * w**k for k, c in enumerate(coeffs))
    s1 = ctx.fsum(k * c * w ** (k - 1) / 2 for k, c in enumerate(coeffs) if k >= 1)
    s2 = ctx.fsum(k * (k - 1) * c * w ** (k - 2) / 4 for k, c in enumerate(coeffs) if k >= 2)
    q = a.z**2 - 1
    rho = -mu / q
    drho = 2 * mu * a.z / q**2
    r = a.ratio_pow(mu / 2)
    return r * s0, r * (s1 + rho * s0), r * (s2 + 2 * rho * s1 + (drho + rho**2) * s0)


def p_series_coeffs(n: int, order):
    """Coefficients c_k and the effective order for ratio_series_derivs."""
    n = normalize_degree(n)
    order = as_order(order)
    if isinstance(order, GeneralOrder):
        mu = to_mp(order.mu)
        return list(upper_coeffs(n, mu)), mu
    m = order.m
    scale = 1
    if order.sign > 0:
        if m > n:
            return [ctx.mpc(0)] * (n + 1), ctx.mpc(m)
        scale = ctx.mpf(fact(n + m)) / fact(n - m)
    coeffs = [scale * ctx.mpf(fact(k + n)) / (fact(k) * fact(k + m) * fact(n - k)) for k in range(n + 1)]
    return coeffs, ctx.mpc(-m)


def p_z_derivs_mp(n: int, order, a: Arg):
    coeffs, mu = p_series_coeffs(n, order)
    return ratio_series_derivs(coeffs, mu, a)
