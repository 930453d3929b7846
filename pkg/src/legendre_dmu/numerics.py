"""Gamma/digamma, integer-order limit formulas and branch-tracked arguments.

Every closed form in this package is evaluated in a private mpmath context
carrying ``WORKING_DPS`` decimal digits and rounded to binary64 only when a
value leaves the public API.  Several of the finite sums are severely
ill-conditioned close to z = 1 (the alternating ``((z+1)/2)**k`` forms lose
up to ~12 digits at n = m = 8, z = 1.1), so plain doubles cannot make the
representations agree to 1e-10.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from mpmath.ctx_mp import MPContext

from .errors import BranchError, DomainError, NearIntegerOrder, PoleError

WORKING_DPS = 50
NEAR_INTEGER_TOL = 1e-8
N_MAX = 64

# Private context; its precision is fixed at import and never mutated, so
# sharing it between threads is safe.
ctx = MPContext()
ctx.dps = WORKING_DPS

ONE = ctx.mpf(1)
HALF = ctx.mpf(1) / 2
I_PI = ctx.mpc(0, 1) * ctx.pi

Number = Union[int, float, complex]


# -- factorials ---------------------------------------------------------------

_FACT = [1]
for _k in range(1, 2 * N_MAX + 2 * 12 + 2):
    _FACT.append(_FACT[-1] * _k)


def fact(k: int) -> int:
    if k < 0:
        raise PoleError(f"factorial of negative integer {k}")
    if k < len(_FACT):
        return _FACT[k]
    return math.factorial(k)


def mpq(q) -> "ctx.mpf":
    """Exact int/Fraction -> working-precision real."""
    if isinstance(q, Fraction):
        return ctx.mpf(q.numerator) / q.denominator
    return ctx.mpf(q)


def to_mp(value: Number):
    return ctx.mpc(complex(value))


def to_complex(value) -> complex:
    return complex(value)


# -- gamma and digamma ----------------------------------------------------------

def _integer_value(zeta):
    """Return int(zeta) if zeta is an exact integer, else None."""
    zeta = ctx.mpc(zeta)
    if zeta.imag == 0 and zeta.real == ctx.floor(zeta.real):
        return int(zeta.real)
    return None


@lru_cache(maxsize=None)
def _harmonic(k: int):
    return ctx.fsum(ONE / j for j in range(1, k + 1))


@lru_cache(maxsize=4096)
def _gamma_base(base):
    return ctx.gamma(base)


@lru_cache(maxsize=4096)
def _psi_base(base):
    return ctx.digamma(base)


def _split(zeta):
    shift = int(ctx.floor(zeta.real))
    return zeta - shift, shift


def mp_gamma(zeta):
    """Working-precision Gamma; one mpmath call per fractional class."""
    return _mp_gamma(ctx.mpc(zeta))


@lru_cache(maxsize=65536)
def _mp_gamma(zeta):
    k = _integer_value(zeta)
    if k is not None:
        if k <= 0:
            raise PoleError(f"Gamma has a pole at {k}")
        return ctx.mpc(fact(k - 1))
    base, shift = _split(zeta)
    g = _gamma_base(base)
    if shift > 0:
        for j in range(shift):
            g *= base + j
    else:
        for j in range(1, -shift + 1):
            g /= base - j
    return g


def mp_rgamma(zeta):
    """1/Gamma, returning an exact zero at the poles."""
    return _mp_rgamma(ctx.mpc(zeta))


@lru_cache(maxsize=65536)
def _mp_rgamma(zeta):
    k = _integer_value(zeta)
    if k is not None and k <= 0:
        return ctx.mpc(0)
    return 1 / _mp_gamma(zeta)


def mp_digamma(zeta):
    return _mp_digamma(ctx.mpc(zeta))


@lru_cache(maxsize=65536)
def _mp_digamma(zeta):
    k = _integer_value(zeta)
    if k is not None:
        if k <= 0:
            raise PoleError(f"digamma has a pole at {k}")
        return ctx.mpc(_harmonic(k - 1) - ctx.euler)
    base, shift = _split(zeta)
    p = _psi_base(base)
    if shift > 0:
        p += ctx.fsum(1 / (base + j) for j in range(shift))
    else:
        p -= ctx.fsum(1 / (base - j) for j in range(1, -shift + 1))
    return p


def psi_int(k: int):
    """psi(k) for a positive integer k, as a working-precision real."""
    if k <= 0:
        raise PoleError(f"digamma has a pole at {k}")
    return _harmonic(k - 1) - ctx.euler


def _check_pole(zeta: complex, name: str) -> None:
    if zeta.imag == 0 and zeta.real <= 0 and zeta.real == math.floor(zeta.real):
        raise PoleError(f"{name} has a pole at {zeta.real:g}")


def gamma(zeta: Number) -> complex:
    zeta = complex(zeta)
    _check_pole(zeta, "gamma")
    return to_complex(mp_gamma(to_mp(zeta)))


def digamma(zeta: Number) -> complex:
    zeta = complex(zeta)
    _check_pole(zeta, "digamma")
    return to_complex(mp_digamma(to_mp(zeta)))


def gamma_ratio_limit(n: int, n_prime: int, m: int) -> float:
    """Limit of Gamma(n+mu+1)/Gamma(n'+mu+1) as mu -> -m, for m > n, n'."""
    if m <= n or m <= n_prime:
        raise DomainError(f"gamma_ratio_limit needs m > n and m > n'; got n={n}, n'={n_prime}, m={m}")
    sign = -1 if (n + n_prime) % 2 else 1
    return float(sign * Fraction(fact(m - n_prime - 1), fact(m - n - 1)))


def psi_over_gamma_limit(k: int, m: int) -> float:
    """Limit of psi(k-mu+1)/Gamma(k-mu+1) as mu -> m, for m > k."""
    if m <= k:
        raise DomainError(f"psi_over_gamma_limit needs m > k; got k={k}, m={m}")
    sign = -1 if (k + m) % 2 else 1
    return float(sign * fact(m - k - 1))


# -- orders -------------------------------------------------------------------

@dataclass(frozen=True)
class GeneralOrder:
    mu: complex

    def __post_init__(self):
        object.__setattr__(self, "mu", complex(self.mu))


@dataclass(frozen=True)
class IntegerOrder:
    sign: int
    m: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.m < 0:
            raise ValueError("m must be non-negative")
        if self.m == 0 and self.sign == -1:
            object.__setattr__(self, "sign", 1)

    @property
    def value(self) -> int:
        return self.sign * self.m


OrderSpec = Union[GeneralOrder, IntegerOrder]


def as_order(mu) -> OrderSpec:
    """Exact integers become IntegerOrder, anything else GeneralOrder."""
    if isinstance(mu, (GeneralOrder, IntegerOrder)):
        return mu
    if isinstance(mu, int):
        return IntegerOrder(1 if mu >= 0 else -1, abs(mu))
    mu = complex(mu)
    if mu.imag == 0 and mu.real == math.floor(mu.real):
        k = int(mu.real)
        return IntegerOrder(1 if k >= 0 else -1, abs(k))
    return GeneralOrder(mu)


def near_integer(mu: complex, tol: float = NEAR_INTEGER_TOL) -> bool:
    mu = complex(mu)
    return abs(mu - round(mu.real)) < tol


def require_general(mu: complex) -> None:
    if near_integer(mu):
        raise NearIntegerOrder(
            f"order {mu} is within {NEAR_INTEGER_TOL:g} of an integer; use the integer-order path"
        )


# -- arguments ----------------------------------------------------------------

@dataclass(frozen=True)
class Arg:
    """A point together with the branches of Log(z+1) and Log(z-1).

    Off the cut these are principal logarithms.  Boundary points x +/- i0
    carry Log(x-1 +/- i0) = ln(1-x) +/- i*pi, and negated points inherit
    their logarithms from the phase rules -z+1 = e^{-/+ i pi}(z-1),
    -z-1 = e^{-/+ i pi}(z+1) rather than from a fresh principal Log.
    """

    z: object
    log_p: object
    log_m: object
    upper: bool

    @classmethod
    def from_complex(cls, z: complex) -> "Arg":
        zz = to_mp(z)
        return cls(zz, ctx.log(zz + 1), ctx.log(zz - 1), z.imag >= 0)

    @classmethod
    def boundary(cls, x: float, side: int) -> "Arg":
        if abs(x) >= 1:
            from .errors import EndpointError

            raise EndpointError(f"x = {x} is an endpoint of the cut")
        xx = ctx.mpf(x)
        return cls(ctx.mpc(xx), ctx.mpc(ctx.log(1 + xx)), ctx.log(1 - xx) + side * I_PI, side > 0)

    @property
    def zm(self):
        return self.z - 1

    @property
    def zp(self):
        return self.z + 1

    @property
    def L(self):
        """ln((z+1)/(z-1)) on this branch."""
        return self.log_p - self.log_m

    def ratio_pow(self, a):
        """((z+1)/(z-1))**a."""
        return ctx.exp(a * (self.log_p - self.log_m))

    def quarter_sq_pow(self, m: int):
        """((z**2-1)/4)**(m/2)."""
        return ctx.exp(ctx.mpf(m) / 2 * (self.log_p + self.log_m)) / ctx.mpf(2) ** m

    def negate(self) -> "Arg":
        shift = -I_PI if self.upper else I_PI
        return Arg(-self.z, self.log_m + shift, self.log_p + shift, not self.upper)


@dataclass(frozen=True)
class OffCutPoint:
    value: complex

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise BranchError(f"non-finite argument {v}")
        if v.imag == 0 and v.real <= 1:
            raise BranchError(f"z = {v.real:g} lies on the cut (-inf, 1]")
        object.__setattr__(self, "value", v)

    def arg(self) -> Arg:
        return Arg.from_complex(self.value)


@dataclass(frozen=True)
class CutPoint:
    x: float

    def __post_init__(self):
        x = float(self.x)
        if not -1 <= x <= 1:
            raise DomainError(f"x = {x} is outside [-1, 1]")
        object.__setattr__(self, "x", x)


def as_arg(z) -> Arg:
    if isinstance(z, Arg):
        return z
    if isinstance(z, OffCutPoint):
        return z.arg()
    return OffCutPoint(z).arg()


def negate_off_cut(z: OffCutPoint) -> tuple[OffCutPoint, int]:
    """Return (-z, sign) where sign = +1 selects the upper phases e^{-i pi}.

    Real z > 1 has no off-cut image: -z sits on the cut.
    """
    v = z.value
    if v.imag == 0:
        raise BranchError(f"-z = {-v.real:g} lies on the cut; use the on-cut evaluators")
    return OffCutPoint(-v), (1 if v.imag > 0 else -1)


def negation_phase(sign: int) -> complex:
    """The factor e^{-/+ i pi} relating -z+1 to z-1 for the given branch sign."""
    return cmath.exp(-sign * 1j * math.pi)
