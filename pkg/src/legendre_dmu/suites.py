"""Named verification suites run over a standard grid of points.

Each suite returns a CheckReport listing every individual comparison.  The
comparison metric is relative, ``|a - b| / max(|a|, |b|, scale)``, except
when both sides are below ``ZERO_FLOOR``: several U and W values vanish
identically at particular real points (for instance U_1^2(2) = 0), and
there the absolute difference is reported instead.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from . import first_kind as lp
from . import second_kind as lq
from . import logpoly
from . import oracle
from . import order_derivative as od
from .errors import LegendreError, NonexistentFunction
from .numerics import Arg, GeneralOrder, IntegerOrder, as_arg, ctx, fact, mp_gamma, mp_rgamma, to_complex, to_mp

ZERO_FLOOR = 1e-25

STANDARD_Z = (2, 1.5, 1.1, 3 + 0j, 1.2 + 0.7j, 0.5 + 2j, -0.5 + 1.5j, 1.2 - 0.7j, 0.5 - 2j, -0.5 - 1.5j)
STANDARD_X = (0.0, 0.3, -0.3, 0.7, -0.7, 0.95, -0.95)
GENERAL_MU = (0.3, -0.7, 1.5 + 0.5j, 2.25)


@dataclass(frozen=True)
class Grid:
    z: tuple = STANDARD_Z
    x: tuple = STANDARD_X
    n_max: int = 8
    m_max: int = 10
    mu: tuple = GENERAL_MU

    @property
    def degrees(self) -> range:
        return range(self.n_max + 1)

    @property
    def orders(self) -> range:
        return range(self.m_max + 1)


@dataclass(frozen=True)
class Check:
    identity: str
    point: str
    error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.error <= self.tol

    @property
    def severity(self) -> float:
        """error / tol, with exact checks (tol 0) mapped to 0 or inf."""
        if self.tol > 0:
            return self.error / self.tol
        return math.inf if self.error > 0 else 0.0


@dataclass
class CheckReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def n_pass(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def n_fail(self) -> int:
        return len(self.checks) - self.n_pass

    @property
    def ok(self) -> bool:
        return self.n_fail == 0 and bool(self.checks)

    def worst(self) -> dict:
        out: dict = {}
        for c in self.checks:
            if c.identity not in out or c.severity > out[c.identity].severity:
                out[c.identity] = c
        return out

    def identities(self) -> list[str]:
        return sorted({c.identity for c in self.checks})

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def merge(self, other: "CheckReport") -> None:
        self.checks.extend(other.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "pass": self.n_pass,
            "fail": self.n_fail,
            "worst": {
                k: {"point": c.point, "error": c.error, "tol": c.tol, "passed": c.passed}
                for k, c in sorted(self.worst().items())
            },
        }


def rel_err(a, b, scale: float = 0.0) -> float:
    a, b = complex(a), complex(b)
    d = abs(a - b)
    s = max(abs(a), abs(b), scale)
    if s < ZERO_FLOOR:
        return d
    return d / s


class _Collector:
    def __init__(self, name: str, tol_override: float | None):
        self.report = CheckReport(name)
        self.tol_override = tol_override

    def add(self, identity: str, point, error: float, tol: float) -> None:
        tol = self.tol_override if self.tol_override is not None else tol
        if not math.isfinite(error):
            error = math.inf
        self.report.checks.append(Check(identity, str(point), float(error), tol))

    def pairwise(self, identity: str, point, values: Iterable, tol: float) -> None:
        values = list(values)
        err = max((rel_err(values[0], v) for v in values[1:]), default=0.0)
        self.add(identity, point, err, tol)


def _c(v) -> complex:
    return to_complex(v)


# -- representation agreement -----------------------------------------------------

def _p_agreement(col, grid):
    for z, n in product(grid.z, grid.degrees):
        a = as_arg(z)
        for mu in grid.mu:
            vals = [_c(lp.p_general_mp(n, to_mp(mu), a, r)) for r in lp.representations(lp.GENERAL)]
            col.pairwise("P-representations", (n, mu, z), vals, 1e-10)
        for m, sign in product(grid.orders, (1, -1)):
            if m == 0 and sign < 0:
                continue
            regime = lp.int_regime(n, IntegerOrder(sign, m))
            vals = [_c(lp.p_int_mp(n, sign, m, a, r)) for r in lp.representations(regime)]
            col.pairwise("P-representations", (n, sign * m, z), vals, 1e-10)


def _u_agreement(col, grid):
    U = od.URepresentation
    for z, n in product(grid.z, grid.degrees):
        a = as_arg(z)
        for mu in grid.mu:
            vals = [_c(od.u_general_mp(n, to_mp(mu), a, r)) for r in od.u_representations(lp.GENERAL)]
            col.pairwise("U-general", (n, mu, z), vals, 1e-10)
        for m in grid.orders:
            if m <= n:
                vals = [_c(od.u_int_mp(n, 1, m, a, r)) for r in od.u_representations(lp.POS_LE)]
                col.pairwise("U-integer-m<=n", (n, m, z), vals, 1e-10)
                inner = [U.UM3_38, U.UM3_39, U.UM3_40, U.UM3_41, U.UM3_42, U.UM3_43]
                vals = [_c(od.u_int_mp(n, -1, m, a, inner=r)) for r in inner]
                col.pairwise("U-integer--m<=n", (n, -m, z), vals, 1e-10)
            else:
                vals = [_c(od.u_int_mp(n, 1, m, a, r)) for r in od.u_representations(lp.POS_GT)]
                col.pairwise("U-integer-m>n", (n, m, z), vals, 1e-10)
                vals = [_c(od.u_int_mp(n, -1, m, a, r)) for r in od.u_representations(lp.NEG_GT)]
                col.pairwise("U-integer--m>n", (n, -m, z), vals, 1e-10)


def _w_agreement(col, grid):
    for z, n in product(grid.z, grid.degrees):
        a = as_arg(z)
        for m in range(n + 1):
            vals = [_c(lq.w_mp(n, 1, m, a, r)) for r in lq.WRepresentation]
            # W from its definition through U(z) and U(-z)
            vals.append(_c(lq.w_from_u_mp(n, 1, m, a)))
            col.pairwise("W-representations", (n, m, z), vals, 1e-10)
        classic = [lq.christoffel_odd_sum(n, z), lq.christoffel_descending(n, z)]
        w0 = _c(lq.w_mp(n, 1, 0, a))
        col.add("W-christoffel-collapse", (n, z), max(rel_err(w0, c) for c in classic), 1e-12)


def _q_agreement(col, grid):
    for z, n in product(grid.z, grid.degrees):
        a = as_arg(z)
        for mu in grid.mu:
            m = to_mp(mu)
            vals = [_c(lq.q_general_mp(n, m, a, f)) for f in ("order", "argument")]
            col.pairwise("Q-general-definitions", (n, mu, z), vals, 1e-9)
            vals = [_c(lq.q_neg_degree_general_mp(n, m, a, f)) for f in ("complement", "order", "argument")]
            col.pairwise("Q-negative-degree-definitions", (n, mu, z), vals, 1e-9)
        for m in range(n + 1):
            classic = _c(lp.p_int_mp(n, 1, m, a) * a.L / 2 - lq.w_from_u_mp(n, 1, m, a))
            col.add("Q-integer-vs-U-definition", (n, m, z), rel_err(_c(lq.q_int_mp(n, 1, m, a)), classic), 1e-10)


def _regime_enforcement(col, grid):
    cases = []
    for n in grid.degrees:
        for m in range(n + 1, grid.m_max + 1):
            cases.append(("Q_n^-m, m>n", lambda n=n, m=m: lq.q_int(n, m, 2, sign=-1)))
            cases.append(("Q_n^-m on cut, m>n", lambda n=n, m=m: lq.q_on_cut(n, m, 0.3, sign=-1)))
        for m in range(n + 1):
            for s in (1, -1):
                cases.append(("Q_-n-1^m, m<=n", lambda n=n, m=m, s=s: lq.q_int(-n - 1, m, 2, sign=s)))
                cases.append(("Q_-n-1^m on cut, m<=n", lambda n=n, m=m, s=s: lq.q_on_cut(-n - 1, m, 0.3, sign=s)))
        for k in range(-3, n + 1):
            cases.append(("Q_-n-1^mu, mu-n<=0", lambda n=n, k=k: lq.q_neg_degree_general(n, k, 2)))
    for label, fn in cases:
        try:
            fn()
            err = math.inf
        except NonexistentFunction:
            err = 0.0
        col.add("regime-enforcement", label, err, 0.0)


def suite_repr_agreement(grid: Grid = Grid(), tol: float | None = None) -> CheckReport:
    col = _Collector("repr-agreement", tol)
    _p_agreement(col, grid)
    _u_agreement(col, grid)
    _w_agreement(col, grid)
    _q_agreement(col, grid)
    _regime_enforcement(col, grid)
    return col.report


# -- symmetries -------------------------------------------------------------------

def suite_symmetries(grid: Grid = Grid(), tol: float | None = None) -> CheckReport:
    col = _Collector("symmetries", tol)
    for z, n in product(grid.z, grid.degrees):
        a = as_arg(z)
        neg = a.negate()
        for mu in grid.mu:
            m = to_mp(mu)
            p = lp.p_general_mp(n, m, a)
            col.add("P-degree-reflection", (n, mu, z), rel_err(p, lp.p_general_mp(-n - 1, m, a)), 1e-12)
            g = mp_gamma(n + m + 1) * mp_rgamma(n - m + 1)
            rhs = (-1) ** n * g * lp.p_general_mp(n, -m, neg)
            col.add("P-order-reflection", (n, mu, z), rel_err(p, rhs), 1e-9)
            q = lq.q_general_mp(n, m, a)
            q_neg = lq.q_general_mp(n, -m, a)
            rhs = ctx.exp(-2 * ctx.mpc(0, 1) * ctx.pi * m) * mp_gamma(n - m + 1) * mp_rgamma(n + m + 1) * q
            col.add("Q-order-reflection", (n, mu, z), rel_err(q_neg, rhs), 1e-9)
            d = od.dp_dmu_mp(n, GeneralOrder(mu), a)
            col.add("dP-degree-reflection", (n, mu, z), rel_err(d, od.dp_dmu_mp(-n - 1, GeneralOrder(mu), a)), 1e-12)
            lhs = -od.dp_dmu_mp(n, GeneralOrder(-mu), a)  # d/dmu of P_n^{-mu}
            psi_sum = od.mp_digamma(n + m + 1) + od.mp_digamma(n - m + 1)
            rhs = -psi_sum * lp.p_general_mp(n, -m, a) + (-1) ** n * mp_gamma(n - m + 1) * mp_rgamma(
                n + m + 1
            ) * od.dp_dmu_mp(n, GeneralOrder(mu), neg)
            col.add("dP-order-reflection", (n, mu, z), rel_err(lhs, rhs), 1e-9)
        for m in range(n + 1):
            ratio = ctx.mpf(fact(n - m)) / fact(n + m)
            for s in (1, -1):
                col.add(
                    "P-parity", (n, s * m, z),
                    rel_err(lp.p_int_mp(n, s, m, neg), (-1) ** n * lp.p_int_mp(n, s, m, a)), 1e-12,
                )
                col.add(
                    "W-parity", (n, s * m, z),
                    rel_err(lq.w_mp(n, s, m, neg), (-1) ** (n + 1) * lq.w_mp(n, s, m, a)), 1e-10,
                )
            col.add("P-order-scaling", (n, m, z), rel_err(lp.p_int_mp(n, -1, m, a), ratio * lp.p_int_mp(n, 1, m, a)), 1e-12)
            # Q^{-m} and W^{-m} built independently from U_n^{-m}
            w_minus = lq.w_from_u_mp(n, -1, m, a)
            col.add("W-order-scaling", (n, m, z), rel_err(w_minus, ratio * lq.w_mp(n, 1, m, a)), 1e-12)
            q_minus = lp.p_int_mp(n, -1, m, a) * a.L / 2 - w_minus
            col.add("Q-order-scaling", (n, m, z), rel_err(q_minus, ratio * lq.q_int_mp(n, 1, m, a)), 1e-12)
        for m in range(1, grid.m_max + 1):
            # dP at -m against the limit of d/dmu P_n^{-mu} at mu = m
            f = lambda mu, n=n, z=z: -complex(od.dp_dmu_general(n, -mu, z))
            lim, _ = oracle.limit_to_integer(f, m)
            val = _c(od.dp_dmu_mp(n, IntegerOrder(-1, m), a))
            col.add("dP-at-negative-order", (n, -m, z), rel_err(val, -lim), 1e-9)
    for x, n in product(grid.x, grid.degrees):
        for m in range(n + 1):
            w = lq.w_on_cut(n, m, x)
            col.add("W-on-cut-parity", (n, m, x), rel_err(lq.w_on_cut(n, m, -x), (-1) ** (n + m + 1) * w), 1e-10)
            # W^{-m}(x) assembled from boundary values of the U-built W^{-m}
            ph = ctx.exp(-ctx.mpc(0, 1) * ctx.pi * m / 2)
            up = lq.w_from_u_mp(n, -1, m, Arg.boundary(x, 1))
            down = lq.w_from_u_mp(n, -1, m, Arg.boundary(x, -1))
            w_minus = _c((-1) ** m / ctx.mpf(2) * (up / ph + down * ph))
            expect = (-1) ** m * fact(n - m) / fact(n + m) * w
            col.add("W-on-cut-order-scaling", (n, m, x), rel_err(w_minus, expect), 1e-12)
    return col.report


# -- differential equations ----------------------------------------------------------

def suite_ode(grid: Grid = Grid(), tol: float | None = None) -> CheckReport:
    col = _Collector("ode", tol)
    limit = 1e-7
    for z, n in product(grid.z, grid.degrees):
        for mu in grid.mu:
            for kind in ("P", "dP", "U"):
                r = oracle.ode_residual(kind, n, mu, z)
                col.add(r.identity, (n, mu, z), r.residual / r.scale, limit)
            if n >= 1:
                for ident in ("sum", "derivative"):
                    r = oracle.expansion_residual(ident, n, mu, z)
                    col.add(r.identity, (n, mu, z), r.residual / r.scale, limit)
        for m in range(-grid.m_max, grid.m_max + 1):
            r = oracle.ode_residual("P", n, m, z)
            col.add(r.identity, (n, m, z), r.residual / r.scale, limit)
    return col.report


# -- finite-difference and limit oracles -------------------------------------------

class _Recorder:
    """Wraps an evaluator and remembers the largest magnitude it returned."""

    def __init__(self, f):
        self.f = f
        self.peak = 0.0

    def __call__(self, mu):
        v = self.f(mu)
        self.peak = max(self.peak, abs(v))
        return v


def _fd_check(col, identity, point, f, mu0, value, tol, scheme=oracle.DiffScheme()):
    # derivatives of functions that are themselves tiny near mu0 are judged
    # against the size of the sampled function as well
    rec = _Recorder(f)
    est, _ = oracle.fd_dmu(rec, mu0, scheme)
    col.add(identity, point, rel_err(value, est, rec.peak), tol)


def _limit_check(col, identity, point, f, m, value, tol):
    rec = _Recorder(f)
    est, _ = oracle.limit_to_integer(rec, m)
    col.add(identity, point, rel_err(value, est, rec.peak), tol)


def suite_oracle(grid: Grid = Grid(), tol: float | None = None) -> CheckReport:
    col = _Collector("oracle", tol)
    second = oracle.DiffScheme(order=2)
    for z, n in product(grid.z, grid.degrees):
        a = as_arg(z)
        p = lambda mu, n=n, z=z: lp.p_general(n, mu, z)
        u = lambda mu, n=n, z=z: od.u_general(n, mu, z)
        q = lambda mu, n=n, z=z: lq.q_general(n, mu, z)
        qn = lambda mu, n=n, z=z: lq.q_neg_degree_general(n, mu, z)
        for mu in grid.mu:
            _fd_check(col, "dP-general", (n, mu, z), p, mu, od.dp_dmu_general(n, mu, z), 1e-6)
        for m in grid.orders:
            _fd_check(col, "dP-at-positive-integer", (n, m, z), p, m, od.dp_dmu_at_int(n, m, z), 1e-6)
            if m:
                _fd_check(col, "dP-at-negative-integer", (n, -m, z), p, -m, od.dp_dmu_at_neg_int(n, m, z), 1e-6)
            for s in (1, -1) if m else (1,):
                order = IntegerOrder(s, m)
                _limit_check(col, "P-limit", (n, s * m, z), p, s * m, _c(lp.p_int_mp(n, s, m, a)), 1e-5)
                _limit_check(col, "U-limit", (n, s * m, z), u, s * m, _c(od.u_int_mp(n, s, m, a)), 1e-5)
                if m <= n or s > 0:
                    _limit_check(col, "Q-limit", (n, s * m, z), q, s * m, _c(lq.q_int_mp(n, s, m, a)), 1e-5)
            if m > n:
                _fd_check(col, "d2P-at-integer", (n, m, z), p, m, od.d2p_dmu2_at_int(n, m, z), 1e-4, second)
                _fd_check(col, "dQ-at-integer", (n, m, z), q, m, lq.dq_dmu_at_int(n, m, z), 1e-5)
                _fd_check(col, "dQ-at-integer-negative-degree", (-n - 1, m, z), qn, m, lq.dq_dmu_at_int(-n - 1, m, z), 1e-5)
                _limit_check(col, "Q-negative-degree-limit", (-n - 1, m, z), qn, m, lq.q_neg_degree_int_gt(n, m, z), 1e-5)
        _fd_check(col, "dQ-at-zero", (n, 0, z), q, 0, lq.dq_dmu_at_zero(n, z), 1e-5)
    for x, n in product(grid.x, grid.degrees):
        pc = lambda mu, n=n, x=x: lp.p_on_cut(n, mu, x)
        for mu in grid.mu:
            _fd_check(col, "dP-on-cut", (n, mu, x), pc, mu, od.dp_dmu_on_cut(n, mu, x), 1e-6)
        for m in range(-grid.m_max, grid.m_max + 1):
            _fd_check(col, "dP-on-cut", (n, m, x), pc, m, od.dp_dmu_on_cut(n, m, x), 1e-6)
    return col.report


# -- Rodrigues forms -----------------------------------------------------------------

def suite_rodrigues(grid: Grid = Grid(), tol: float | None = None) -> CheckReport:
    col = _Collector("rodrigues", tol)
    for z, n in product(grid.z, grid.degrees):
        a = as_arg(z)
        for m in range(-n, n + 1):
            col.add("rodrigues-P", (n, m, z), rel_err(logpoly.rodrigues_p_mp(n, m, a), lp.p_int_mp(n, 1 if m >= 0 else -1, abs(m), a)), 1e-10)
        for m in range(n + 1):
            for s in (1, -1):
                col.add("rodrigues-Q", (n, s * m, z), rel_err(logpoly.rodrigues_q_mp(n, m, s, a), lq.q_int_mp(n, s, m, a)), 1e-10)
            col.add("rodrigues-U", (n, m, z), rel_err(logpoly.rodrigues_u_mp(n, m, a), od.u_int_mp(n, 1, m, a)), 1e-10)
    return col.report


# -- values on the cut -------------------------------------------------------------

def suite_oncut(grid: Grid = Grid(), tol: float | None = None) -> CheckReport:
    col = _Collector("oncut", tol)
    eps = 1e-6
    ipi = 1j * math.pi
    for x, n in product(grid.x, grid.degrees):
        for mu in grid.mu + tuple(range(-3, 4)):
            val = lp.p_on_cut(n, mu, x)
            for side in (1, -1):
                rec = _Recorder(lambda z, n=n, mu=mu: lp.legendre_p(n, mu, z))
                lim = oracle.cut_limit(rec, x, side, tol=1e-6)
                err = rel_err(val, cmath.exp(side * ipi * mu / 2) * lim, rec.peak)
                col.add("P-on-cut-boundary", (n, mu, x, side), err, 1e-4)
        for m in range(n + 1):
            col.add("W-on-cut-direct", (n, m, x), rel_err(lq.w_on_cut(n, m, x), lq.w_on_cut(n, m, x, repr="direct")), 1e-10)
        for m, s in product(grid.orders, (1, -1)):
            if s < 0 and (m > n or m == 0):
                continue
            mu = s * m
            degrees = (n, -n - 1) if s > 0 and m > n else (n,)
            for deg in degrees:
                up, down = lq.q_int(deg, m, complex(x, eps), s), lq.q_int(deg, m, complex(x, -eps), s)
                approx = 0.5 * cmath.exp(-ipi * mu) * (cmath.exp(-ipi * mu / 2) * up + cmath.exp(ipi * mu / 2) * down)
                err = rel_err(lq.q_on_cut(deg, m, x, s), approx, max(abs(up), abs(down)))
                col.add("Q-on-cut-boundary", (deg, mu, x), err, 1e-4)
    return col.report


SUITES: dict[str, Callable[..., CheckReport]] = {
    "repr-agreement": suite_repr_agreement,
    "symmetries": suite_symmetries,
    "ode": suite_ode,
    "oracle": suite_oracle,
    "rodrigues": suite_rodrigues,
    "oncut": suite_oncut,
}


def run_suite(name: str, grid: Grid = Grid(), tol: float | None = None) -> CheckReport:
    if name == "all":
        report = CheckReport("all")
        for key in SUITES:
            report.merge(SUITES[key](grid, tol))
        return report
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](grid, tol)
