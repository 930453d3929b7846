"""Exact symbolic expressions A(z) + B(z) L(z), L = ln((z+1)/(z-1)).

A and B are finite sums of c (z-1)^i (z+1)^j with rational c and integer
(possibly negative) exponents.  The class is closed under d/dz, which is
all the Rodrigues-type formulas need.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .numerics import Arg, as_arg, ctx, fact, mpq, psi_int, to_complex

Terms = dict  # {(i, j): Fraction}


def _clean(terms: Terms) -> Terms:
    return {k: v for k, v in terms.items() if v != 0}


def _add(t1: Terms, t2: Terms, scale=1) -> Terms:
    out = dict(t1)
    for k, v in t2.items():
        out[k] = out.get(k, 0) + scale * v
    return _clean(out)


def _mul(t1: Terms, t2: Terms) -> Terms:
    out: Terms = {}
    for (i1, j1), c1 in t1.items():
        for (i2, j2), c2 in t2.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return _clean(out)


def _diff(terms: Terms) -> Terms:
    out: Terms = {}
    for (i, j), c in terms.items():
        if i:
            out[(i - 1, j)] = out.get((i - 1, j), 0) + i * c
        if j:
            out[(i, j - 1)] = out.get((i, j - 1), 0) + j * c
    return _clean(out)


# d/dz L = 1/(z+1) - 1/(z-1)
_DL = {(0, -1): Fraction(1), (-1, 0): Fraction(-1)}


@dataclass(frozen=True)
class LogPoly:
    a: Terms = field(default_factory=dict)
    b: Terms = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "a", _clean({k: Fraction(v) for k, v in self.a.items()}))
        object.__setattr__(self, "b", _clean({k: Fraction(v) for k, v in self.b.items()}))

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1, log: bool = False) -> "LogPoly":
        """coeff (z-1)^i (z+1)^j, times L when ``log`` is set."""
        t = {(i, j): Fraction(coeff)}
        return cls(b=t) if log else cls(a=t)

    @classmethod
    def log(cls) -> "LogPoly":
        return cls.monomial(0, 0, 1, log=True)

    def __add__(self, other: "LogPoly") -> "LogPoly":
        return LogPoly(_add(self.a, other.a), _add(self.b, other.b))

    def __sub__(self, other: "LogPoly") -> "LogPoly":
        return LogPoly(_add(self.a, other.a, -1), _add(self.b, other.b, -1))

    def __mul__(self, other):
        if isinstance(other, LogPoly):
            if self.b and other.b:
                raise DomainError("L**2 terms are outside the A + B*L class")
            a = _mul(self.a, other.a)
            b = _add(_mul(self.a, other.b), _mul(self.b, other.a))
            return LogPoly(a, b)
        c = Fraction(other)
        return LogPoly({k: c * v for k, v in self.a.items()}, {k: c * v for k, v in self.b.items()})

    __rmul__ = __mul__

    def derivative(self) -> "LogPoly":
        a = _add(_diff(self.a), _mul(self.b, _DL))
        return LogPoly(a, _diff(self.b))

    def evaluate_mp(self, a: Arg):
        zm, zp = a.zm, a.zp

        def val(terms):
            return ctx.fsum(mpq(c) * zm**i * zp**j for (i, j), c in sorted(terms.items()))

        return val(self.a) + val(self.b) * a.L

    def evaluate(self, z) -> complex:
        return to_complex(self.evaluate_mp(as_arg(z)))


def differentiate(p: LogPoly, times: int = 1) -> LogPoly:
    if times < 0:
        raise DomainError("times must be non-negative")
    for _ in range(times):
        p = p.derivative()
    return p


@lru_cache(maxsize=None)
def _rodrigues_core(n: int, i: int, j: int, log: bool) -> LogPoly:
    """d^n/dz^n [(z-1)^i (z+1)^j (L if log)]."""
    return differentiate(LogPoly.monomial(i, j, 1, log), n)


def _check(n: int, m: int) -> None:
    if n < 0 or not 0 <= m <= n:
        raise DomainError(f"Rodrigues forms need 0 <= m <= n (n={n}, m={m})")


def rodrigues_p_mp(n: int, m: int, a: Arg):
    if n < 0 or abs(m) > n:
        raise DomainError(f"Rodrigues form of P needs |m| <= n (n={n}, m={m})")
    core = _rodrigues_core(n, n - m, n + m, False).evaluate_mp(a)
    return a.ratio_pow(-ctx.mpf(m) / 2) * core / (ctx.mpf(2) ** n * fact(n - m))


def rodrigues_p_int(n: int, m: int, z) -> complex:
    """P_n^m(z) for integer |m| <= n from the n-fold derivative of (z-1)^(n-m) (z+1)^(n+m)."""
    if not isinstance(m, int):
        raise DomainError("the Rodrigues form is only implemented for integer order")
    return to_complex(rodrigues_p_mp(n, m, as_arg(z)))


def rodrigues_q_mp(n: int, m: int, sign: int, a: Arg):
    _check(n, m)
    mh = ctx.mpf(m) / 2
    d1 = _rodrigues_core(n, n - m, n + m, True).evaluate_mp(a)
    d2 = _rodrigues_core(n, n + m, n - m, True).evaluate_mp(a)
    pref = ctx.mpf(2) ** (n + 1) * fact(n - sign * m)
    p = rodrigues_p_mp(n, sign * m, a)
    return -p * a.L / 2 + (a.ratio_pow(-mh) * d1 + a.ratio_pow(mh) * d2) / pref


def rodrigues_q_int(n: int, m: int, z, sign: int = 1) -> complex:
    """Q_n^{sign*m}(z), 0 <= m <= n, through exact differentiation of the log products."""
    return to_complex(rodrigues_q_mp(n, m, sign, as_arg(z)))


def rodrigues_u_mp(n: int, m: int, a: Arg):
    _check(n, m)
    p = rodrigues_p_mp(n, m, a)
    d = _rodrigues_core(n, n - m, n + m, True).evaluate_mp(a)
    return (
        -p * a.L
        + psi_int(n - m + 1) * p
        + a.ratio_pow(-ctx.mpf(m) / 2) * d / (ctx.mpf(2) ** n * fact(n - m))
    )


def rodrigues_u_int(n: int, m: int, z) -> complex:
    """U_n^m(z), 0 <= m <= n, from the Rodrigues-type form with a logarithm."""
    return to_complex(rodrigues_u_mp(n, m, as_arg(z)))


def legendre_coefficients(n: int) -> list[Fraction]:
    """Monomial coefficients of P_n(z), lowest power first, derived exactly."""
    p = _rodrigues_core(n, n, n, False)
    # expand (z-1)^i (z+1)^j into powers of z
    coeffs = [Fraction(0)] * (n + 1)
    for (i, j), c in p.a.items():
        poly = [Fraction(1)]
        for root, power in ((-1, i), (1, j)):
            for _ in range(power):
                nxt = [Fraction(0)] * (len(poly) + 1)
                for k, v in enumerate(poly):
                    nxt[k + 1] += v
                    nxt[k] += root * v
                poly = nxt
        for k, v in enumerate(poly):
            coeffs[k] += c * v
    scale = Fraction(1, 2**n * fact(n))
    return [scale * c for c in coeffs]
