"""Associated Legendre functions of the second kind of integer degree.

General order goes through the two defining combinations of P values.  At
integer order the logarithmic part is split off,

    Q_n^{+/-m}(z) = 1/2 P_n^{+/-m}(z) ln((z+1)/(z-1)) - W_{n-1}^{+/-m}(z),

and the generalised Christoffel polynomial W is available in seven forms.
"""
from __future__ import annotations

from enum import Enum

from .errors import DomainError, NonexistentFunction, RepresentationMismatch
from .first_kind import _coerce_repr, normalize_degree, p_general_mp, p_int_mp, p_on_cut_mp
from .numerics import (
    I_PI,
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
    psi_int,
    require_general,
    to_complex,
    to_mp,
)
from .order_derivative import dp_dmu_mp, u_int_mp


class WRepresentation(Enum):
    W2_32 = "W2_32"
    W2_33 = "W2_33"
    W2_34_BROWN = "W2_34_Brown"
    W2_35_SNOW_UPPER = "W2_35_Snow_Upper"
    W2_35_SNOW_LOWER = "W2_35_Snow_Lower"
    W4_8 = "W4_8"
    W4_11_CHRISTOFFEL = "W4_11_Christoffel"


W = WRepresentation
DEFAULT_W = W.W4_11_CHRISTOFFEL
TIE_BREAK_W = W.W2_34_BROWN


def _nonexistent_neg_order(n, m):
    return NonexistentFunction(f"Q_n^{{-m}} with m>n does not exist (n={n}, m={m})")


def _nonexistent_neg_degree(n, mu):
    return NonexistentFunction(
        f"Q_{{-n-1}}^mu does not exist when mu-n is a negative integer or zero (n={n}, mu={mu})"
    )


def _check_neg_degree_exists(n: int, mu) -> None:
    order = as_order(mu)
    if isinstance(order, IntegerOrder) and order.value - n <= 0:
        raise _nonexistent_neg_degree(n, order.value)


def _sin_factor(mu):
    """pi e^{i pi mu} / sin(pi mu)."""
    return ctx.pi * ctx.exp(I_PI * mu) / ctx.sin(ctx.pi * mu)


# -- general order --------------------------------------------------------------

def q_general_mp(n: int, mu, a: Arg, form: str = "order"):
    p = p_general_mp(n, mu, a)
    if form == "order":
        other = mp_gamma(n + mu + 1) * mp_rgamma(n - mu + 1) * p_general_mp(n, -mu, a)
    elif form == "argument":
        other = (-1) ** n * p_general_mp(n, mu, a.negate())
    else:
        raise RepresentationMismatch(f"unknown Q form {form!r}; expected 'order' or 'argument'")
    return _sin_factor(mu) / 2 * (p - other)


def q_neg_degree_general_mp(n: int, mu, a: Arg, form: str = "order"):
    if form == "complement":
        return -q_general_mp(n, mu, a) + _sin_factor(mu) * p_general_mp(n, mu, a)
    p = p_general_mp(n, mu, a)
    if form == "order":
        other = mp_gamma(n + mu + 1) * mp_rgamma(n - mu + 1) * p_general_mp(n, -mu, a)
    elif form == "argument":
        other = (-1) ** n * p_general_mp(n, mu, a.negate())
    else:
        raise RepresentationMismatch(f"unknown Q form {form!r}; expected 'complement', 'order' or 'argument'")
    return _sin_factor(mu) / 2 * (p + other)


def q_general(n: int, mu, z, form: str = "order") -> complex:
    """Q_n^mu(z), n >= 0, non-integer mu."""
    if n < 0:
        return q_neg_degree_general(-n - 1, mu, z)
    mu = complex(mu.mu if isinstance(mu, GeneralOrder) else mu)
    require_general(mu)
    return to_complex(q_general_mp(n, to_mp(mu), as_arg(z), form))


def q_neg_degree_general(n: int, mu, z, form: str = "order") -> complex:
    """Q_{-n-1}^mu(z) for non-integer mu; ``n`` is the non-negative partner degree."""
    mu = mu.mu if isinstance(mu, GeneralOrder) else mu
    _check_neg_degree_exists(n, mu)
    mu = complex(mu)
    require_general(mu)
    return to_complex(q_neg_degree_general_mp(n, to_mp(mu), as_arg(z), form))


# -- W_{n-1}^m -----------------------------------------------------------------

def _w_minus_series(n, m, a):
    w = a.zm / 2
    s1 = ctx.fsum(
        (-1) ** k * ctx.mpf(fact(k + n) * fact(m - k - 1)) / (fact(k) * fact(n - k)) * w**k for k in range(m)
    )
    s2 = ctx.fsum(
        fact(k + n) * psi_int(k + m + 1) / (fact(k) * fact(k + m) * fact(n - k)) * w**k for k in range(n + 1)
    )
    s3 = ctx.fsum(
        fact(k + n + m) * psi_int(k + 1) / (fact(k) * fact(k + m) * fact(n - m - k)) * w**k
        for k in range(n - m + 1)
    )
    mh = ctx.mpf(m) / 2
    return (
        (psi_int(n + m + 1) + psi_int(n - m + 1)) / 2 * p_int_mp(n, 1, m, a)
        - (-1) ** m / ctx.mpf(2) * a.ratio_pow(mh) * s1
        - ctx.mpf(fact(n + m)) / (2 * fact(n - m)) * a.ratio_pow(-mh) * s2
        - a.quarter_sq_pow(m) * s3 / 2
    )


def _w_plus_series(n, m, a):
    w = a.zp / 2
    s1 = ctx.fsum(ctx.mpf(fact(k + n) * fact(m - k - 1)) / (fact(k) * fact(n - k)) * w**k for k in range(m))
    s2 = ctx.fsum(
        (-1) ** k * fact(k + n) * psi_int(k + m + 1) / (fact(k) * fact(k + m) * fact(n - k)) * w**k
        for k in range(n + 1)
    )
    s3 = ctx.fsum(
        (-1) ** k * fact(k + n + m) * psi_int(k + 1) / (fact(k) * fact(k + m) * fact(n - m - k)) * w**k
        for k in range(n - m + 1)
    )
    mh = ctx.mpf(m) / 2
    return (
        -(psi_int(n + m + 1) + psi_int(n - m + 1)) / 2 * p_int_mp(n, 1, m, a)
        + (-1) ** (n + m) / ctx.mpf(2) * a.ratio_pow(-mh) * s1
        + (-1) ** n * ctx.mpf(fact(n + m)) / (2 * fact(n - m)) * a.ratio_pow(mh) * s2
        + (-1) ** (n + m) / ctx.mpf(2) * a.quarter_sq_pow(m) * s3
    )


def _w_brown(n, m, a):
    wm = a.zm / 2
    wp = a.zp / 2
    s1 = ctx.fsum(
        (-1) ** k * ctx.mpf(fact(k + n) * fact(m - k - 1)) / (fact(k) * fact(n - k)) * wm**k for k in range(m)
    )
    s2 = ctx.fsum(ctx.mpf(fact(k + n) * fact(m - k - 1)) / (fact(k) * fact(n - k)) * wp**k for k in range(m))
    s3 = ctx.fsum(
        fact(k + n + m) * psi_int(k + 1) / (fact(k) * fact(k + m) * fact(n - m - k)) * wm**k
        for k in range(n - m + 1)
    )
    s4 = ctx.fsum(
        (-1) ** k * fact(k + n + m) * psi_int(k + 1) / (fact(k) * fact(k + m) * fact(n - m - k)) * wp**k
        for k in range(n - m + 1)
    )
    mh = ctx.mpf(m) / 2
    sq = a.quarter_sq_pow(m)
    half = ctx.mpf(1) / 2
    return (
        -(-1) ** m * half * a.ratio_pow(mh) * s1
        + (-1) ** (n + m) * half * a.ratio_pow(-mh) * s2
        - half * sq * s3
        + (-1) ** (n + m) * half * sq * s4
    )


def _w_snow(n, m, a, upper: bool):
    # upper: (z-+1)/(z+-1) -> (z-1)/(z+1); lower swaps the roles of z-1 and z+1
    sgn = 1 if upper else -1
    zs, zo = (a.zm, a.zp) if upper else (a.zp, a.zm)  # z-+1, z+-1
    q = zs / zo
    mh = ctx.mpf(m) / 2
    # ((z-+1)/(z+-1))**(m/2) in terms of the tracked branch of ((z+1)/(z-1))
    pow_s = a.ratio_pow(-mh if upper else mh)
    pow_o = a.ratio_pow(mh if upper else -mh)
    big = ctx.mpf(fact(n) * fact(n + m))
    s1 = ctx.fsum(
        (psi_int(n - m - k + 1) + psi_int(n - k + 1) - psi_int(k + m + 1) - psi_int(k + 1))
        / (fact(k) * fact(k + m) * fact(n - k) * fact(n - m - k))
        * q**k
        for k in range(n - m + 1)
    )
    s2 = ctx.fsum(
        (-1) ** k * ctx.mpf(fact(k - 1)) / (fact(k + n) * fact(k + n - m) * fact(m - k)) * q**k
        for k in range(1, m + 1)
    )
    s3 = ctx.fsum(
        (-1) ** k * ctx.mpf(fact(m - k - 1)) / (fact(k) * fact(n - k) * fact(n + m - k)) * q**k for k in range(m)
    )
    return sgn * big / 2 * (
        pow_s * (zo / 2) ** n * s1 + pow_o * (zs / 2) ** n * s2 - (-1) ** m * pow_o * (zo / 2) ** n * s3
    )


def _w_psi_pair(n, m, a):
    wm = a.zm / 2
    wp = a.zp / 2
    s1 = ctx.fsum(
        fact(k + n) * psi_int(k + m + 1) / (fact(k) * fact(k + m) * fact(n - k)) * wm**k for k in range(n + 1)
    )
    s2 = ctx.fsum(
        (-1) ** k * fact(k + n) * psi_int(k + m + 1) / (fact(k) * fact(k + m) * fact(n - k)) * wp**k
        for k in range(n + 1)
    )
    ratio = ctx.mpf(fact(n + m)) / (2 * fact(n - m))
    mh = ctx.mpf(m) / 2
    return -ratio * a.ratio_pow(-mh) * s1 + (-1) ** n * ratio * a.ratio_pow(mh) * s2


def _w_christoffel(n, m, a):
    neg = a.negate()
    ratio = ctx.mpf(fact(n + m)) / fact(n - m)
    s1 = ctx.fsum(
        (-1) ** k * ctx.mpf(2 * k + 1) / ((n - k) * (k + n + 1))
        * (p_int_mp(k, -1, m, neg) - (-1) ** n * p_int_mp(k, -1, m, a))
        for k in range(m)
    )
    terms = []
    for k in range((n - m - 1) // 2 + 1 if n - m - 1 >= 0 else 0):
        c = ctx.mpf(2 * n - 4 * k - 1) / ((n - k) * (2 * k + 1))
        c *= 1 + ctx.mpf(fact(n + m) * fact(n - m - 2 * k - 1)) / (fact(n - m) * fact(n + m - 2 * k - 1))
        terms.append(c * p_int_mp(n - 2 * k - 1, 1, m, a))
    return ratio * s1 / 2 + ctx.fsum(terms) / 2


_W_FORMS = {
    W.W2_32: _w_minus_series,
    W.W2_33: _w_plus_series,
    W.W2_34_BROWN: _w_brown,
    W.W2_35_SNOW_UPPER: lambda n, m, a: _w_snow(n, m, a, True),
    W.W2_35_SNOW_LOWER: lambda n, m, a: _w_snow(n, m, a, False),
    W.W4_8: _w_psi_pair,
    W.W4_11_CHRISTOFFEL: _w_christoffel,
}


def w_from_u_mp(n: int, sign: int, m: int, a: Arg, rep=None):
    """W_{n-1}^{+/-m} = 1/2[(-1)^n U(-z) - U(z)] with any U form."""
    return ((-1) ** n * u_int_mp(n, sign, m, a.negate(), rep) - u_int_mp(n, sign, m, a, rep)) / 2


def w_mp(n: int, sign: int, m: int, a: Arg, rep: WRepresentation | None = None):
    if not 0 <= m <= n:
        raise DomainError(f"W_(n-1)^(+/-m) needs 0 <= m <= n (n={n}, m={m})")
    value = _W_FORMS[rep or DEFAULT_W](n, m, a)
    if sign < 0 and m > 0:
        value *= ctx.mpf(fact(n - m)) / fact(n + m)
    return value


def w_poly(n: int, m: int, z, sign: int = 1, repr=None) -> complex:
    """Generalised Christoffel polynomial W_{n-1}^{sign*m}(z)."""
    if n < 0:
        raise DomainError("W_(n-1)^m is defined for n >= 0")
    return to_complex(w_mp(n, sign, m, as_arg(z), _coerce_repr(repr, WRepresentation)))


def christoffel_odd_sum(n: int, z) -> complex:
    """Classic W_{n-1}(z) as 2 * sum over odd k+n of (2k+1)/((n-k)(k+n+1)) P_k(z)."""
    a = as_arg(z)
    terms = [
        2 * ctx.mpf(2 * k + 1) / ((n - k) * (k + n + 1)) * p_int_mp(k, 1, 0, a)
        for k in range(n)
        if (k + n) % 2 == 1
    ]
    return to_complex(ctx.fsum(terms))


def christoffel_descending(n: int, z) -> complex:
    """Classic W_{n-1}(z) as the descending sum over P_{n-1}, P_{n-3}, ..."""
    a = as_arg(z)
    terms = [
        ctx.mpf(2 * n - 4 * k - 1) / ((n - k) * (2 * k + 1)) * p_int_mp(n - 2 * k - 1, 1, 0, a)
        for k in range((n - 1) // 2 + 1 if n >= 1 else 0)
    ]
    return to_complex(ctx.fsum(terms))


# -- integer order ----------------------------------------------------------------

def q_int_mp(n: int, sign: int, m: int, a: Arg, rep=None):
    if sign < 0 and m == 0:
        sign = 1
    if m <= n:
        return p_int_mp(n, sign, m, a) * a.L / 2 - w_mp(n, sign, m, a, rep)
    if sign < 0:
        raise _nonexistent_neg_order(n, m)
    factor = (-1) ** m * ctx.mpf(fact(n + m) * fact(m - n - 1)) / 2
    return factor * (p_int_mp(n, -1, m, a.negate()) - (-1) ** n * p_int_mp(n, -1, m, a))


def q_neg_degree_int_gt_mp(n: int, m: int, a: Arg):
    if m <= n:
        raise _nonexistent_neg_degree(n, m)
    factor = (-1) ** m * ctx.mpf(fact(n + m) * fact(m - n - 1)) / 2
    return factor * (p_int_mp(n, -1, m, a.negate()) + (-1) ** n * p_int_mp(n, -1, m, a))


def q_int(n: int, m: int, z, sign: int = 1, repr=None) -> complex:
    """Q_n^{sign*m}(z).  A negative ``n`` means the degree -|n|, i.e. Q_{-n'-1}."""
    rep = _coerce_repr(repr, WRepresentation)
    if m < 0:
        sign, m = -sign, -m
    a = as_arg(z)
    if n < 0:
        partner = -n - 1
        if sign < 0 and m > 0:
            raise _nonexistent_neg_degree(partner, -m)
        return to_complex(q_neg_degree_int_gt_mp(partner, m, a))
    return to_complex(q_int_mp(n, sign, m, a, rep))


def q_neg_degree_int_gt(n: int, m: int, z) -> complex:
    """Q_{-n-1}^m(z) for m > n."""
    if m <= n:
        raise DomainError(f"q_neg_degree_int_gt needs m > n (n={n}, m={m})")
    return to_complex(q_neg_degree_int_gt_mp(n, m, as_arg(z)))


def legendre_q(n: int, mu, z, repr=None) -> complex:
    """Q_n^mu(z) for any integer degree (negative means -n'-1) and any order."""
    order = as_order(mu)
    if isinstance(order, IntegerOrder):
        return q_int(n, order.m, z, order.sign, repr)
    if n < 0:
        return q_neg_degree_general(-n - 1, order.mu, z)
    return q_general(n, order.mu, z)


# -- on the cut ----------------------------------------------------------------

def w_on_cut_mp(n: int, sign: int, m: int, x: float, rep=None):
    """(-1)^m/2 [e^{-/+ i pi m/2} W(x+i0) + e^{+/- i pi m/2} W(x-i0)]."""
    up = w_mp(n, sign, m, Arg.boundary(x, 1), rep)
    down = w_mp(n, sign, m, Arg.boundary(x, -1), rep)
    ph = ctx.exp(sign * I_PI * m / 2)
    return (-1) ** m / ctx.mpf(2) * (up / ph + down * ph)


def w_on_cut_direct_mp(n: int, m: int, x: float):
    """Direct on-cut form of W_{n-1}^m(x) built from Ferrers-type P values."""
    ratio = ctx.mpf(fact(n + m)) / fact(n - m)
    s1 = ctx.fsum(
        (-1) ** k * ctx.mpf(2 * k + 1) / ((n - k) * (k + n + 1))
        * (p_on_cut_mp(k, -m, -x) - (-1) ** (n + m) * p_on_cut_mp(k, -m, x))
        for k in range(m)
    )
    terms = []
    for k in range((n - m - 1) // 2 + 1 if n - m - 1 >= 0 else 0):
        c = ctx.mpf(2 * n - 4 * k - 1) / ((n - k) * (2 * k + 1))
        c *= 1 + ctx.mpf(fact(n + m) * fact(n - m - 2 * k - 1)) / (fact(n - m) * fact(n + m - 2 * k - 1))
        terms.append(c * p_on_cut_mp(n - 2 * k - 1, m, x))
    return ratio * s1 / 2 + ctx.fsum(terms) / 2


def w_on_cut(n: int, m: int, x, sign: int = 1, repr=None) -> complex:
    x = x.x if isinstance(x, CutPoint) else CutPoint(x).x
    if not 0 <= m <= n:
        raise DomainError(f"W_(n-1)^(+/-m)(x) needs 0 <= m <= n (n={n}, m={m})")
    if repr == "direct":
        value = w_on_cut_direct_mp(n, m, x)
        if sign < 0 and m > 0:
            value *= (-1) ** m * ctx.mpf(fact(n - m)) / fact(n + m)
        return complex(to_complex(value).real, 0.0)
    return complex(to_complex(w_on_cut_mp(n, sign, m, x, _coerce_repr(repr, WRepresentation))).real, 0.0)


def q_general_on_cut_mp(n: int, mu, x: float, neg_degree: bool = False):
    """1/2 e^{-i pi mu}[e^{-i pi mu/2} Q(x+i0) + e^{i pi mu/2} Q(x-i0)]."""
    f = q_neg_degree_general_mp if neg_degree else q_general_mp
    up = f(n, mu, Arg.boundary(x, 1))
    down = f(n, mu, Arg.boundary(x, -1))
    half_phase = ctx.exp(I_PI * mu / 2)
    return ctx.exp(-I_PI * mu) / 2 * (up / half_phase + down * half_phase)


def q_on_cut(n: int, m, x, sign: int = 1, repr=None) -> complex:
    """On-cut Q of integer degree; negative ``n`` selects degree -n'-1.

    ``m`` may also be a non-integer order, evaluated through the
    phase-weighted boundary average.
    """
    x = x.x if isinstance(x, CutPoint) else CutPoint(x).x
    if abs(x) >= 1:
        from .errors import EndpointError

        raise EndpointError(f"x = {x} is an endpoint of the cut")
    order = as_order(m)
    if isinstance(order, GeneralOrder):
        require_general(order.mu)
        if n < 0:
            _check_neg_degree_exists(-n - 1, order.mu)
            return to_complex(q_general_on_cut_mp(-n - 1, to_mp(order.mu), x, True))
        return to_complex(q_general_on_cut_mp(n, to_mp(order.mu), x))
    if order.sign < 0:
        sign = -sign
    m = order.m
    if m == 0:
        sign = 1
    rep = _coerce_repr(repr, WRepresentation)
    xm = ctx.mpf(x)
    if n < 0:
        partner = -n - 1
        if sign < 0 or m <= partner:
            raise _nonexistent_neg_degree(partner, sign * m)
        factor = (-1) ** m * ctx.mpf(fact(partner + m) * fact(m - partner - 1)) / 2
        value = factor * (p_on_cut_mp(partner, -m, -x) + (-1) ** (partner + m) * p_on_cut_mp(partner, -m, x))
    elif m <= n:
        p = p_on_cut_mp(n, sign * m, x)
        value = p * ctx.log((1 + xm) / (1 - xm)) / 2 - w_on_cut_mp(n, sign, m, x, rep)
    else:
        if sign < 0:
            raise _nonexistent_neg_order(n, m)
        factor = (-1) ** m * ctx.mpf(fact(n + m) * fact(m - n - 1)) / 2
        value = factor * (p_on_cut_mp(n, -m, -x) - (-1) ** (n + m) * p_on_cut_mp(n, -m, x))
    return complex(to_complex(value).real, 0.0)


# -- order derivatives of Q ---------------------------------------------------------

def dq_dmu_at_int_mp(n: int, m: int, a: Arg, neg_degree: bool = False):
    if m <= n:
        raise DomainError(f"dQ/dmu at integer order is only available for m > n (n={n}, m={m})")
    q = q_neg_degree_int_gt_mp(n, m, a) if neg_degree else q_int_mp(n, 1, m, a)
    factor = (-1) ** m * ctx.mpf(fact(n + m) * fact(m - n - 1)) / 2
    d_neg = dp_dmu_mp(n, IntegerOrder(-1, m), a.negate())
    d_pos = dp_dmu_mp(n, IntegerOrder(-1, m), a)
    pm = 1 if neg_degree else -1
    return (I_PI + psi_int(n + m + 1) + psi_int(m - n)) * q - factor * (d_neg + pm * (-1) ** n * d_pos)


def dq_dmu_at_int(n: int, m: int, z) -> complex:
    """[dQ/dmu] at mu = m > n; a negative ``n`` selects the degree -n'-1."""
    if n < 0:
        return to_complex(dq_dmu_at_int_mp(-n - 1, m, as_arg(z), neg_degree=True))
    return to_complex(dq_dmu_at_int_mp(n, m, as_arg(z)))


def dq_dmu_at_zero(n: int, z) -> complex:
    """[dQ_n^mu/dmu] at mu = 0, i.e. (i pi + psi(n+1)) Q_n(z)."""
    if n < 0:
        raise DomainError("dq_dmu_at_zero is defined for n >= 0")
    a = as_arg(z)
    return to_complex((I_PI + psi_int(n + 1)) * q_int_mp(n, 1, 0, a))
