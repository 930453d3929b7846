"""Independent checks: finite differences in the order, limits toward the cut,
and residuals of the Legendre differential equation and its relatives.

The finite-difference engine only ever calls the supplied evaluator at
non-integer orders, so it exercises the general-order series and never the
closed forms it is meant to confirm.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError, NonConvergence, StepCollision
from .first_kind import p_general_mp, p_z_derivs_mp
from .numerics import (
    NEAR_INTEGER_TOL,
    GeneralOrder,
    as_order,
    as_arg,
    ctx,
    mp_gamma,
    mp_rgamma,
    near_integer,
    require_general,
    to_mp,
)
from .order_derivative import u_z_derivs_mp


@dataclass(frozen=True)
class DiffScheme:
    h0: float = 1e-3
    levels: int = 3
    order: int = 1

    def __post_init__(self):
        if not 1e-4 <= self.h0 <= 1e-2:
            raise DomainError(f"h0 must lie in [1e-4, 1e-2], got {self.h0}")
        if not 2 <= self.levels <= 4:
            raise DomainError(f"levels must lie in [2, 4], got {self.levels}")
        if self.order not in (1, 2):
            raise DomainError(f"order must be 1 or 2, got {self.order}")


def richardson(values: Sequence[complex], ratio: float = 2.0, power: int = 2) -> tuple[complex, float]:
    """Richardson table for estimates at h, h/ratio, h/ratio**2, ...

    The error is assumed to be a series in h**power, h**(2*power), ...
    Returns the extrapolated value and the change made by the last column,
    a conservative error estimate.
    """
    table = [list(values)]
    for j in range(1, len(values)):
        f = ratio ** (power * j)
        prev = table[-1]
        table.append([(f * prev[i + 1] - prev[i]) / (f - 1) for i in range(len(prev) - 1)])
    best = table[-1][0]
    err = abs(best - table[-2][-1]) if len(table) > 1 else float("inf")
    return best, err


def _sample(f: Callable, mu: complex):
    if near_integer(mu, NEAR_INTEGER_TOL):
        raise StepCollision(f"finite-difference sample point {mu} is within {NEAR_INTEGER_TOL:g} of an integer")
    return complex(f(mu))


def fd_dmu(f: Callable[[complex], complex], mu0: complex, scheme: DiffScheme = DiffScheme()) -> tuple[complex, float]:
    """Richardson-extrapolated central difference of f at mu0.

    order 1 uses (f(mu+h) - f(mu-h)) / 2h; order 2 uses the stencil
    (f(mu+2h) - f(mu+h) - f(mu-h) + f(mu-2h)) / 3h**2, which never samples
    mu0 itself, so integer mu0 is allowed.  Returns (value, error estimate).
    """
    mu0 = complex(mu0)
    estimates = []
    for level in range(scheme.levels):
        h = scheme.h0 / 2**level
        if scheme.order == 1:
            d = (_sample(f, mu0 + h) - _sample(f, mu0 - h)) / (2 * h)
        else:
            d = (
                _sample(f, mu0 + 2 * h) - _sample(f, mu0 + h) - _sample(f, mu0 - h) + _sample(f, mu0 - 2 * h)
            ) / (3 * h * h)
        estimates.append(d)
    return richardson(estimates)


def limit_to_integer(f: Callable[[complex], complex], m: int, h0: float = 1e-4, levels: int = 2) -> tuple[complex, float]:
    """Limit of f(mu) as mu -> m from symmetric offsets m +/- h, extrapolated in h**2."""
    values = []
    for level in range(levels):
        h = h0 / 2**level
        values.append((_sample(f, m + h) + _sample(f, m - h)) / 2)
    return richardson(values)


def cut_limit(
    f: Callable[[complex], complex],
    x: float,
    side: int = 1,
    eps_sequence: Sequence[float] | None = None,
    tol: float = 1e-8,
) -> complex:
    """Limit of f(x + side*i*eps) as eps -> 0, by Neville extrapolation in eps."""
    if abs(x) >= 1:
        raise DomainError(f"cut_limit needs |x| < 1, got {x}")
    if side not in (1, -1):
        raise DomainError("side must be +1 or -1")
    eps = list(eps_sequence) if eps_sequence is not None else [1e-2 / 2**k for k in range(6)]
    ys = [complex(f(complex(x, side * e))) for e in eps]
    # Neville's scheme evaluated at eps = 0, keeping the diagonal
    table = list(ys)
    diagonal = [table[0]]
    for j in range(1, len(eps)):
        for i in range(len(eps) - 1, j - 1, -1):
            table[i] = (eps[i] * table[i - 1] - eps[i - j] * table[i]) / (eps[i] - eps[i - j])
        diagonal.append(table[j])
    value = diagonal[-1]
    if len(diagonal) > 1 and abs(diagonal[-1] - diagonal[-2]) > 10 * tol * max(1.0, abs(value)):
        raise NonConvergence(
            f"boundary extrapolation did not settle: last estimates {diagonal[-2]} and {diagonal[-1]}"
        )
    return value


# -- differential-equation residuals --------------------------------------------------

@dataclass(frozen=True)
class ResidualReport:
    identity: str
    point: tuple
    residual: float
    scale: float
    passed: bool


def _operator_terms(n: int, mu, z, f, df, d2f):
    q = 1 - z**2
    return [q * d2f, -2 * z * df, n * (n + 1) * f, -(mu**2) / q * f]


def _report(identity, point, terms, tol):
    residual = float(abs(ctx.fsum(terms)))
    scale = max([1.0] + [float(abs(t)) for t in terms])
    return ResidualReport(identity, point, residual, scale, residual <= tol * scale)


def _log_derivs(a):
    q = a.z**2 - 1
    return a.L, -2 / q, 4 * a.z / q**2


def ode_residual(kind: str, n: int, mu, z, tol: float = 1e-7) -> ResidualReport:
    """Residual of the Legendre equation for P, of its order derivative for
    dP/dmu, or of the inhomogeneous equation for U, at (n, mu, z).

    dP and U need a non-integer order; the z-derivatives are analytic.
    """
    a = as_arg(z)
    o = as_order(mu)
    mu = o.mu if isinstance(o, GeneralOrder) else complex(o.value)
    mu_mp = to_mp(mu)
    point = (n, mu, complex(z))
    if kind == "P":
        f, df, d2f = p_z_derivs_mp(n, o, a)
        return _report("P-homogeneous", point, _operator_terms(n, mu_mp, a.z, f, df, d2f), tol)
    if kind not in ("dP", "U"):
        raise DomainError(f"unknown residual kind {kind!r}; expected P, dP or U")
    require_general(mu)
    p, dp, d2p = p_z_derivs_mp(n, o, a)
    u, du, d2u = u_z_derivs_mp(n, mu_mp, a)
    rhs = 2 * mu_mp / (1 - a.z**2) * p
    if kind == "U":
        terms = _operator_terms(n, mu_mp, a.z, u, du, d2u) + [2 * dp, -rhs]
        return _report("U-inhomogeneous", point, terms, tol)
    lg, dlg, d2lg = _log_derivs(a)
    f = u + p * lg / 2
    df = du + (dp * lg + p * dlg) / 2
    d2f = d2u + (d2p * lg + 2 * dp * dlg + p * d2lg) / 2
    terms = _operator_terms(n, mu_mp, a.z, f, df, d2f) + [-rhs]
    return _report("dP-inhomogeneous", point, terms, tol)


def _gamma_ratio(a_arg, b_arg):
    return mp_gamma(a_arg) * mp_rgamma(b_arg)


def expansion_residual(identity: str, n: int, mu, z, tol: float = 1e-7) -> ResidualReport:
    """Residual of the finite P-expansions behind the coefficient recursion.

    ``"sum"``:        sum (2k+1) G(k-mu+1)/G(k+mu+1) P_k = G(n-mu+1)/G(n+mu) (P_n - P_{n-1})/(z-1)
    ``"derivative"``: -2 P_n' + 2 mu/(1-z^2) P_n = sum (-1)^(k+n)(2k+1)[1 - (-1)^(k+n) ratio] P_k
    """
    if n < 1:
        raise DomainError("expansion identities need n >= 1")
    mu = complex(mu)
    require_general(mu)
    a = as_arg(z)
    m = to_mp(mu)
    pk = [p_general_mp(k, m, a) for k in range(n + 1)]
    if identity == "sum":
        terms = [(2 * k + 1) * _gamma_ratio(k - m + 1, k + m + 1) * pk[k] for k in range(n)]
        terms.append(-_gamma_ratio(n - m + 1, n + m) * (pk[n] - pk[n - 1]) / a.zm)
        return _report("expansion-sum", (n, mu, complex(z)), terms, tol)
    if identity == "derivative":
        _, dp, _ = p_z_derivs_mp(n, GeneralOrder(mu), a)
        big = _gamma_ratio(n + m + 1, n - m + 1)
        terms = [-2 * dp, 2 * m / (1 - a.z**2) * pk[n]]
        for k in range(n):
            s = (-1) ** (k + n)
            terms.append(-s * (2 * k + 1) * (1 - s * big * _gamma_ratio(k - m + 1, k + m + 1)) * pk[k])
        return _report("expansion-derivative", (n, mu, complex(z)), terms, tol)
    raise DomainError(f"unknown expansion identity {identity!r}; expected 'sum' or 'derivative'")
