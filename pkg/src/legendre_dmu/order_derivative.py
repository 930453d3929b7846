"""Derivatives of P_n^mu(z) with respect to the order mu.

Everything is organised around the split

    dP_n^mu/dmu = 1/2 P_n^mu(z) ln((z+1)/(z-1)) + U_n^mu(z)

where U_n^mu has the same ((z+1)/(z-1))**(mu/2) * polynomial structure as
P_n^mu itself.  Each displayed form of U is a separate tag; the regime
(general mu, mu = +m <= n, +m > n, -m <= n, -m > n) decides which apply.
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .errors import DomainError, RepresentationMismatch
from .first_kind import (
    GENERAL,
    NEG_GT,
    NEG_LE,
    POS_GT,
    POS_LE,
    _coerce_repr,
    horner,
    int_regime,
    normalize_degree,
    order_mp,
    p_general_mp,
    p_int_mp,
    p_mp,
    p_on_cut_mp,
    ratio_series_derivs,
)
from .numerics import (
    Arg,
    CutPoint,
    GeneralOrder,
    IntegerOrder,
    as_arg,
    as_order,
    ctx,
    fact,
    mp_digamma,
    mp_gamma,
    mp_rgamma,
    psi_int,
    require_general,
    to_complex,
    to_mp,
)


class URepresentation(Enum):
    U3_6 = "U3_6"
    U3_7 = "U3_7"
    U3_10 = "U3_10"
    U3_12 = "U3_12"
    U3_13 = "U3_13"
    U3_33 = "U3_33"
    U3_34 = "U3_34"
    UM3_38 = "Um3_38"
    UM3_39 = "Um3_39"
    UM3_40 = "Um3_40"
    UM3_41 = "Um3_41"
    UM3_42 = "Um3_42"
    UM3_43 = "Um3_43"
    UMGT3_52 = "Umgt3_52"
    UMGT3_53 = "Umgt3_53"
    UNEG3_57 = "Uneg3_57"
    UNEG3_59 = "Uneg3_59"
    UNEG3_60 = "Uneg3_60"
    UNEG3_61 = "Uneg3_61"
    UNEG3_62 = "Uneg3_62"
    UNEG3_63 = "Uneg3_63"

    @property
    def regimes(self) -> tuple[str, ...]:
        return _U_REGIMES[self]


U = URepresentation
_U_REGIMES = {
    U.U3_6: (GENERAL,),
    U.U3_7: (GENERAL,),
    U.U3_10: (GENERAL,),
    U.U3_12: (GENERAL,),
    U.U3_13: (GENERAL,),
    U.U3_33: (GENERAL,),
    # the reflected expansion stays finite at mu = m <= n
    U.U3_34: (GENERAL, POS_LE),
    U.UM3_38: (POS_LE,),
    U.UM3_39: (POS_LE,),
    U.UM3_40: (POS_LE,),
    U.UM3_41: (POS_LE,),
    U.UM3_42: (POS_LE,),
    U.UM3_43: (POS_LE,),
    U.UMGT3_52: (POS_GT,),
    U.UMGT3_53: (POS_GT,),
    U.UNEG3_57: (NEG_LE,),
    U.UNEG3_59: (NEG_GT,),
    U.UNEG3_60: (NEG_GT,),
    U.UNEG3_61: (NEG_GT,),
    U.UNEG3_62: (NEG_GT,),
    U.UNEG3_63: (NEG_GT,),
}

DEFAULT_U = {
    GENERAL: U.U3_6,
    POS_LE: U.UM3_38,
    POS_GT: U.UMGT3_52,
    NEG_LE: U.UNEG3_57,
    NEG_GT: U.UNEG3_59,
}


def u_representations(regime: str) -> list[URepresentation]:
    return [r for r in URepresentation if regime in r.regimes]


def _bracket_coeff(n: int, k: int):
    """(-1)^(k+n) (2k+1) / ((n-k)(k+n+1)) as an exact working-precision real."""
    return (-1) ** (k + n) * ctx.mpf(2 * k + 1) / ((n - k) * (k + n + 1))


# -- general order --------------------------------------------------------------

@lru_cache(maxsize=8192)
def u_upper_coeffs(n: int, mu) -> tuple:
    return tuple(
        fact(k + n) * mp_digamma(k - mu + 1) * mp_rgamma(k - mu + 1) / (fact(k) * fact(n - k)) for k in range(n + 1)
    )


def u_general_mp(n: int, mu, a: Arg, rep: URepresentation = U.U3_6):
    rp = a.ratio_pow(mu / 2)
    psi = mp_digamma
    if rep is U.U3_6:
        return rp * horner(u_upper_coeffs(n, mu), a.zm / 2)
    if rep is U.U3_33 or rep is U.U3_34:
        return u_expansion_mp(n, mu, a, rep)
    p = p_general_mp(n, mu, a)
    if rep is U.U3_7:
        w = a.zp / 2
        s = ctx.fsum(
            (-1) ** k * fact(k + n) * psi(k + mu + 1) * mp_rgamma(k + mu + 1) / (fact(k) * fact(n - k)) * w**k
            for k in range(n + 1)
        )
        ratio = mp_gamma(n + mu + 1) * mp_rgamma(n - mu + 1)
        return (psi(n + mu + 1) + psi(n - mu + 1)) * p - (-1) ** n * ratio * rp * s
    if rep is U.U3_10:
        w = a.zp / 2
        s = ctx.fsum(
            fact(k + n) * mp_gamma(-k - mu) * psi(-k - mu) / (fact(k) * fact(n - k)) * w**k
            for k in range(n + 1)
        )
        return (psi(n - mu + 1) + psi(-n - mu)) * p - mp_rgamma(n - mu + 1) * mp_rgamma(-n - mu) * rp * s
    if rep is U.U3_12:
        q = a.zm / a.zp
        s = ctx.fsum(
            (-1) ** k * mp_gamma(k - n - mu) * mp_rgamma(k - mu + 1) / (fact(k) * fact(n - k))
            * (psi(k - mu + 1) - psi(k - n - mu)) * q**k
            for k in range(n + 1)
        )
        return psi(-n - mu) * p + fact(n) * mp_rgamma(-n - mu) * rp * (a.zp / 2) ** n * s
    if rep is U.U3_13:
        q = a.zp / a.zm
        s = ctx.fsum(
            (-1) ** k * mp_gamma(-k - mu) * mp_rgamma(n - k - mu + 1) / (fact(k) * fact(n - k))
            * (psi(n - k - mu + 1) - psi(-k - mu)) * q**k
            for k in range(n + 1)
        )
        return psi(-n - mu) * p + (-1) ** n * fact(n) * mp_rgamma(-n - mu) * rp * (a.zm / 2) ** n * s
    raise RepresentationMismatch(f"{rep.value} is not a general-order U representation")


def expansion_coeffs_mp(n: int, mu) -> list:
    gn = mp_gamma(n + mu + 1) * mp_rgamma(n - mu + 1)
    coeffs = []
    for k in range(n):
        ratio = gn * mp_gamma(k - mu + 1) * mp_rgamma(k + mu + 1)
        coeffs.append(_bracket_coeff(n, k) * (1 - (-1) ** (k + n) * ratio))
    coeffs.append(mp_digamma(n - mu + 1))
    return coeffs


def expansion_coeffs(n: int, mu) -> list[complex]:
    """c_{nk}^mu, k = 0..n, with U_n^mu = sum_k c_{nk}^mu P_k^mu."""
    n = normalize_degree(n)
    mu = complex(mu.mu if isinstance(mu, GeneralOrder) else mu)
    require_general(mu)
    return [to_complex(c) for c in expansion_coeffs_mp(n, to_mp(mu))]


def u_expansion_mp(n: int, mu, a: Arg, rep: URepresentation):
    if rep is U.U3_33:
        c = expansion_coeffs_mp(n, mu)
        return ctx.fsum(c[k] * p_general_mp(k, mu, a) for k in range(n + 1))
    # reflected expansion: P_k^mu(z) paired with P_k^{-mu}(-z)
    neg = a.negate()
    gn = mp_gamma(n + mu + 1) * mp_rgamma(n - mu + 1)
    total = mp_digamma(n - mu + 1) * p_mp(n, _mu_order(mu), a)
    terms = [total]
    for k in range(n):
        bracket = p_mp(k, _mu_order(mu), a) - (-1) ** n * gn * p_mp(k, _mu_order(-mu), neg)
        terms.append(_bracket_coeff(n, k) * bracket)
    return ctx.fsum(terms)


def _mu_order(mu):
    """Turn a working-precision order back into an OrderSpec for p_mp."""
    c = complex(mu)
    if c.imag == 0 and c.real == int(c.real) and ctx.mpc(mu) == ctx.mpc(int(c.real)):
        return as_order(int(c.real))
    return GeneralOrder(c)


# -- integer order --------------------------------------------------------------

def _u_pos_le(n: int, m: int, a: Arg, rep: URepresentation):
    mh = ctx.mpf(m) / 2
    if rep is U.UM3_38:
        w = a.zm / 2
        s1 = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(k + n) * fact(m - k - 1)) / (fact(k) * fact(n - k)) * w**k
            for k in range(m)
        )
        s2 = ctx.fsum(
            fact(k + n + m) * psi_int(k + 1) / (fact(k) * fact(k + m) * fact(n - m - k)) * w**k
            for k in range(n - m + 1)
        )
        return (-1) ** m * a.ratio_pow(mh) * s1 + a.quarter_sq_pow(m) * s2
    p = p_int_mp(n, 1, m, a)
    if rep is U.UM3_39:
        w = a.zp / 2
        s = ctx.fsum(
            (-1) ** k * fact(k + n) * psi_int(k + m + 1) / (fact(k) * fact(k + m) * fact(n - k)) * w**k
            for k in range(n + 1)
        )
        return (psi_int(n + m + 1) + psi_int(n - m + 1)) * p - (-1) ** n * ctx.mpf(
            fact(n + m)
        ) / fact(n - m) * a.ratio_pow(mh) * s
    big = ctx.mpf(fact(n) * fact(n + m))
    if rep is U.UM3_40:
        q = a.zm / a.zp
        s1 = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(m - k - 1)) / (fact(k) * fact(n - k) * fact(n + m - k)) * q**k
            for k in range(m)
        )
        s2 = ctx.fsum(
            (psi_int(n - k + 1) - psi_int(k + 1)) / (fact(k) * fact(k + m) * fact(n - k) * fact(n - m - k)) * q**k
            for k in range(n - m + 1)
        )
        lead = (a.zp / 2) ** n
        return psi_int(n + m + 1) * p + (-1) ** m * big * a.ratio_pow(mh) * lead * s1 - big * a.ratio_pow(
            -mh
        ) * lead * s2
    if rep is U.UM3_41:
        q = a.zp / a.zm
        s1 = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(k - 1)) / (fact(k + n) * fact(k + n - m) * fact(m - k)) * q**k
            for k in range(1, m + 1)
        )
        s2 = ctx.fsum(
            (psi_int(n - m - k + 1) - psi_int(k + m + 1)) / (fact(k) * fact(k + m) * fact(n - k) * fact(n - m - k))
            * q**k
            for k in range(n - m + 1)
        )
        return (
            psi_int(n + m + 1) * p
            + big * a.ratio_pow(-mh) * (a.zp / 2) ** n * s1
            + big * a.ratio_pow(mh) * (a.zm / 2) ** n * s2
        )
    if rep is U.UM3_42 or rep is U.UM3_43:
        neg = a.negate()
        first_upper = n if rep is U.UM3_42 else m
        ratio = ctx.mpf(fact(n + m)) / fact(n - m)
        s1 = ctx.fsum(
            (-1) ** k * ctx.mpf(2 * k + 1) / ((n - k) * (k + n + 1)) * p_int_mp(k, -1, m, neg)
            for k in range(first_upper)
        )
        terms = []
        for k in range(n - m):
            c = (-1) ** (k + n + m) * ctx.mpf(2 * k + 2 * m + 1) / ((n - m - k) * (k + n + m + 1))
            if rep is U.UM3_43:
                c *= 1 - (-1) ** (k + n + m) * ctx.mpf(fact(k) * fact(n + m)) / (fact(k + 2 * m) * fact(n - m))
            terms.append(c * p_int_mp(k + m, 1, m, a))
        return psi_int(n - m + 1) * p - ratio * s1 + ctx.fsum(terms)
    if rep is U.U3_34:
        return u_expansion_mp(n, ctx.mpc(m), a, rep)
    raise RepresentationMismatch(f"{rep.value} does not cover mu = +m <= n")


def _u_pos_gt(n: int, m: int, a: Arg, rep: URepresentation):
    if rep is U.UMGT3_52:
        w = a.zm / 2
        s = ctx.fsum(
            (-1) ** k * ctx.mpf(fact(k + n) * fact(m - k - 1)) / (fact(k) * fact(n - k)) * w**k
            for k in range(n + 1)
        )
        return (-1) ** m * a.ratio_pow(ctx.mpf(m) / 2) * s
    if rep is U.UMGT3_53:
        return (-1) ** m * ctx.mpf(fact(n + m) * fact(m - n - 1)) * p_int_mp(n, -1, m, a.negate())
    raise RepresentationMismatch(f"{rep.value} does not cover mu = +m > n")


def _u_neg_gt(n: int, m: int, a: Arg, rep: URepresentation):
    mh = ctx.mpf(m) / 2
    rp = a.ratio_pow(-mh)
    if rep is U.UNEG3_59:
        w = a.zm / 2
        return rp * ctx.fsum(
            fact(k + n) * psi_int(k + m + 1) / (fact(k) * fact(k + m) * fact(n - k)) * w**k for k in range(n + 1)
        )
    p = p_int_mp(n, -1, m, a)
    if rep is U.UNEG3_60:
        w = a.zp / 2
        s = ctx.fsum(
            fact(k + n) * fact(m - k - 1) * psi_int(m - k) / (fact(k) * fact(n - k)) * w**k for k in range(n + 1)
        )
        return (psi_int(n + m + 1) + psi_int(m - n)) * p - rp * s / (fact(n + m) * fact(m - n - 1))
    if rep is U.UNEG3_61:
        q = a.zm / a.zp
        s = ctx.fsum(
            (-1) ** k * fact(k + m - n - 1) / ctx.mpf(fact(k) * fact(k + m) * fact(n - k))
            * (psi_int(k + m + 1) - psi_int(k + m - n)) * q**k
            for k in range(n + 1)
        )
        return psi_int(m - n) * p + ctx.mpf(fact(n)) / fact(m - n - 1) * rp * (a.zp / 2) ** n * s
    if rep is U.UNEG3_62:
        q = a.zp / a.zm
        s = ctx.fsum(
            (-1) ** k * fact(m - k - 1) / ctx.mpf(fact(k) * fact(n - k) * fact(n + m - k))
            * (psi_int(n + m - k + 1) - psi_int(m - k)) * q**k
            for k in range(n + 1)
        )
        return psi_int(m - n) * p + (-1) ** n * ctx.mpf(fact(n)) / fact(m - n - 1) * rp * (a.zm / 2) ** n * s
    if rep is U.UNEG3_63:
        denom = fact(n + m) * fact(m - n - 1)
        terms = [psi_int(n + m + 1) * p]
        for k in range(n):
            c = _bracket_coeff(n, k) * (1 - ctx.mpf(fact(k + m) * fact(m - k - 1)) / denom)
            terms.append(c * p_int_mp(k, -1, m, a))
        return ctx.fsum(terms)
    raise RepresentationMismatch(f"{rep.value} does not cover mu = -m with m > n")


def u_int_mp(n: int, sign: int, m: int, a: Arg, rep: URepresentation | None = None, inner=None):
    order = IntegerOrder(sign, m)
    regime = int_regime(n, order)
    rep = rep or DEFAULT_U[regime]
    if regime not in rep.regimes:
        raise RepresentationMismatch(f"{rep.value} does not cover order {order.value} at degree {n} ({regime})")
    if regime == POS_LE:
        return _u_pos_le(n, m, a, rep)
    if regime == POS_GT:
        return _u_pos_gt(n, m, a, rep)
    if regime == NEG_GT:
        return _u_neg_gt(n, m, a, rep)
    # U_n^{-m}(z) from U_n^m(-z); ``inner`` picks the form used for the latter
    um_neg = _u_pos_le(n, m, a.negate(), inner or U.UM3_38)
    p = p_int_mp(n, -1, m, a)
    ratio = ctx.mpf(fact(n - m)) / fact(n + m)
    return (-1) ** (n + 1) * ratio * um_neg + (psi_int(n + m + 1) + psi_int(n - m + 1)) * p


def u_mp(n: int, order, a: Arg, rep=None):
    n = normalize_degree(n)
    order = as_order(order)
    if isinstance(order, IntegerOrder):
        return u_int_mp(n, order.sign, order.m, a, rep)
    require_general(order.mu)
    rep = rep or DEFAULT_U[GENERAL]
    if GENERAL not in rep.regimes:
        raise RepresentationMismatch(f"{rep.value} does not apply to general order")
    return u_general_mp(n, to_mp(order.mu), a, rep)


def u_general(n: int, mu, z, repr=None) -> complex:
    mu = complex(mu.mu if isinstance(mu, GeneralOrder) else mu)
    require_general(mu)
    return to_complex(u_mp(n, GeneralOrder(mu), as_arg(z), _coerce_repr(repr, URepresentation)))


def u_int(n: int, order, z, repr=None) -> complex:
    order = as_order(order)
    if not isinstance(order, IntegerOrder):
        raise DomainError("u_int needs an integer order")
    return to_complex(u_mp(n, order, as_arg(z), _coerce_repr(repr, URepresentation)))


def legendre_u(n: int, mu, z, repr=None) -> complex:
    return to_complex(u_mp(n, mu, as_arg(z), _coerce_repr(repr, URepresentation)))


# -- first derivatives ------------------------------------------------------------

def dp_dmu_mp(n: int, order, a: Arg, rep=None):
    n = normalize_degree(n)
    p = p_mp(n, order, a)
    return p * a.L / 2 + u_mp(n, order, a, rep)


def dp_dmu_general(n: int, mu, z, repr=None) -> complex:
    """1/2 P ln((z+1)/(z-1)) + U for non-integer mu."""
    mu = complex(mu.mu if isinstance(mu, GeneralOrder) else mu)
    require_general(mu)
    return to_complex(dp_dmu_mp(n, GeneralOrder(mu), as_arg(z), _coerce_repr(repr, URepresentation)))


def dp_dmu_at_int(n: int, m, z, repr=None) -> complex:
    """[dP_n^mu/dmu] at mu = +m (both m <= n and m > n)."""
    order = as_order(m)
    if not isinstance(order, IntegerOrder) or order.sign < 0:
        raise DomainError("dp_dmu_at_int needs mu = +m; use dp_dmu_at_neg_int for -m")
    return to_complex(dp_dmu_mp(n, order, as_arg(z), _coerce_repr(repr, URepresentation)))


def dp_dmu_at_neg_int(n: int, m: int, z, repr=None) -> complex:
    """[dP_n^mu/dmu] at mu = -m."""
    if isinstance(m, IntegerOrder):
        m = m.m
    if m < 0:
        raise DomainError("pass the magnitude m >= 0 of the order -m")
    return to_complex(dp_dmu_mp(n, IntegerOrder(-1, m), as_arg(z), _coerce_repr(repr, URepresentation)))


def dp_dmu(n: int, mu, z, repr=None) -> complex:
    return to_complex(dp_dmu_mp(n, mu, as_arg(z), _coerce_repr(repr, URepresentation)))


def d2p_dmu2_mp(n: int, m: int, a: Arg, rep=None):
    n = normalize_degree(n)
    if m <= n:
        raise DomainError(f"second order derivative is only available for m > n (got n={n}, m={m})")
    neg = a.negate()
    factor = (-1) ** m * 2 * ctx.mpf(fact(n + m) * fact(m - n - 1))
    bracket = (psi_int(n + m + 1) + psi_int(m - n)) * p_int_mp(n, -1, m, neg) - dp_dmu_mp(
        n, IntegerOrder(-1, m), neg, rep
    )
    return factor * bracket


def d2p_dmu2_at_int(n: int, m: int, z, repr=None) -> complex:
    """[d^2 P_n^mu / dmu^2] at mu = m > n."""
    return to_complex(d2p_dmu2_mp(n, int(m), as_arg(z), _coerce_repr(repr, URepresentation)))


# -- on the cut ----------------------------------------------------------------

def u_on_cut_mp(n: int, order, x: float, side: int = 1, rep=None):
    a = Arg.boundary(x, side)
    mu = order_mp(order)
    return ctx.exp(side * ctx.mpc(0, 1) * ctx.pi * mu / 2) * u_mp(n, order, a, rep)


def dp_dmu_on_cut_mp(n: int, order, x: float, side: int = 1, rep=None):
    p = p_on_cut_mp(n, order, x, side)
    return p * ctx.log((1 + ctx.mpf(x)) / (1 - ctx.mpf(x))) / 2 + u_on_cut_mp(n, order, x, side, rep)


def dp_dmu_on_cut(n: int, mu, x, repr=None, side: int = 1) -> complex:
    x = x.x if isinstance(x, CutPoint) else CutPoint(x).x
    order = as_order(mu)
    if isinstance(order, GeneralOrder):
        require_general(order.mu)
    return to_complex(dp_dmu_on_cut_mp(n, order, x, side, _coerce_repr(repr, URepresentation)))


# -- z-derivatives (for the ODE residuals) -----------------------------------------

def u_z_derivs_mp(n: int, mu, a: Arg):
    """U_n^mu from the default series with its first two z-derivatives, general mu only."""
    return ratio_series_derivs(list(u_upper_coeffs(n, mu)), mu, a)
