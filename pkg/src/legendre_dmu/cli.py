"""Command-line front end: ``eval``, ``table`` and ``check``.

Exit status: 0 on success, 1 for domain errors or failed checks, 2 for
usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import first_kind as lp
from . import second_kind as lq
from . import order_derivative as od
from . import suites
from .errors import DomainError, LegendreError
from .numerics import N_MAX, GeneralOrder, IntegerOrder, as_order

KINDS = ("P", "Q", "dP", "d2P", "dQ", "U", "W")
REPR_FAMILY = {
    "P": lp.PRepresentation,
    "U": od.URepresentation,
    "dP": od.URepresentation,
    "d2P": od.URepresentation,
    "Q": lq.WRepresentation,
    "W": lq.WRepresentation,
    "dQ": None,
}


class UsageError(Exception):
    pass


# -- formatting ---------------------------------------------------------------------

def fmt_real(v: float) -> str:
    v = float(v)
    if v == 0:
        v = 0.0  # drop the sign of zero so output is stable
    return format(v, ".15g")


def fmt_complex(v: complex) -> str:
    v = complex(v)
    im = 0.0 if v.imag == 0 else v.imag
    sign = "-" if im < 0 else "+"
    return f"{fmt_real(v.real)}{sign}{fmt_real(abs(im))}i"


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi``, ``a-bi``, ``bi`` (exponents allowed)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise UsageError("empty complex number")
    if s.endswith(("i", "j")):
        body = s[:-1]
        if body == "" or body[-1] in "+-":
            body += "1"
        s = body + "j"
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def parse_range(text: str) -> list[int]:
    """``3``, ``0:4`` (inclusive) or ``1,2,5``."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse integer range {text!r}") from None


# -- requests ------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalRequest:
    kind: str
    n: int
    order: object
    z: complex | None = None
    x: float | None = None
    repr: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if (self.z is None) == (self.x is None):
            raise UsageError("give exactly one of --z (off the cut) or --x (on the cut)")
        if abs(self.n) > N_MAX + 1:
            raise UsageError(f"degree must satisfy |n| <= {N_MAX}")
        if self.repr is not None:
            family = REPR_FAMILY[self.kind]
            if family is None:
                raise UsageError(f"kind {self.kind} takes no representation tag")
            try:
                family(self.repr)
            except ValueError:
                tags = ", ".join(r.value for r in family)
                raise UsageError(f"tag {self.repr!r} does not belong to kind {self.kind}; expected one of {tags}") from None

    @property
    def point(self):
        return self.z if self.z is not None else self.x


def _order_label(order) -> str:
    if isinstance(order, IntegerOrder):
        return str(order.value)
    return fmt_complex(order.mu)


def _used_repr(req: EvalRequest) -> str:
    if req.repr:
        return req.repr
    order = req.order
    if req.kind in ("Q", "W"):
        if isinstance(order, IntegerOrder) and 0 <= req.n and order.m <= req.n:
            return lq.DEFAULT_W.value
        return "-"
    if req.kind == "dQ":
        return "-"
    if isinstance(order, GeneralOrder):
        regime = lp.GENERAL
    else:
        regime = lp.int_regime(lp.normalize_degree(req.n), order)
    if req.kind == "P":
        return lp.DEFAULT_P[regime].value
    if req.kind == "d2P":
        return od.DEFAULT_U[lp.NEG_GT].value
    return od.DEFAULT_U[regime].value


def evaluate(req: EvalRequest) -> complex:
    """Dispatch one request to the evaluators; raises LegendreError on domain problems."""
    n, order, k = req.n, req.order, req.kind
    integer = isinstance(order, IntegerOrder)
    if req.x is not None:
        x = req.x
        if k == "P":
            return lp.p_on_cut(n, order, x, req.repr)
        if k == "dP":
            return od.dp_dmu_on_cut(n, order, x, req.repr)
        if k == "Q":
            if integer:
                return lq.q_on_cut(n, order.m, x, order.sign, req.repr)
            return lq.q_on_cut(n, order.mu, x)
        if k == "W":
            if not integer:
                raise DomainError("W is defined for integer order only")
            return lq.w_on_cut(n, order.m, x, order.sign, req.repr)
        raise DomainError(f"kind {k} has no on-cut evaluator")
    z = req.z
    if k == "P":
        return lp.legendre_p(n, order, z, req.repr)
    if k == "U":
        return od.legendre_u(n, order, z, req.repr)
    if k == "dP":
        return od.dp_dmu(n, order, z, req.repr)
    if k == "d2P":
        if not integer or order.sign < 0:
            raise DomainError("the second order derivative is available at mu = m > n only")
        return od.d2p_dmu2_at_int(n, order.m, z, req.repr)
    if k == "Q":
        return lq.legendre_q(n, order, z, req.repr)
    if k == "W":
        if not integer:
            raise DomainError("W is defined for integer order only")
        return lq.w_poly(n, order.m, z, order.sign, req.repr)
    # dQ
    if integer and order.m == 0:
        return lq.dq_dmu_at_zero(n, z)
    if integer and order.sign > 0:
        return lq.dq_dmu_at_int(n, order.m, z)
    raise DomainError("dQ/dmu is available at mu = 0 and at mu = m > n only")


# -- output ---------------------------------------------------------------------------

ROW_FIELDS = ["kind", "n", "order", "point", "repr", "re", "im", "error"]


def _row(req: EvalRequest) -> dict:
    row = {
        "kind": req.kind,
        "n": req.n,
        "order": _order_label(req.order),
        "point": fmt_complex(req.z) if req.z is not None else fmt_real(req.x),
        "repr": "",
        "re": "",
        "im": "",
        "error": "",
    }
    try:
        value = evaluate(req)
        row["repr"] = _used_repr(req)
        row["re"], row["im"] = fmt_real(value.real), fmt_real(value.imag)
    except LegendreError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        out = []
        for r in rows:
            item = {k: r[k] for k in ("kind", "n", "order", "point", "repr")}
            if r["error"]:
                item["error"] = r["error"]
            else:
                item["value"] = {"re": float(r["re"]), "im": float(r["im"])}
                item["text"] = fmt_complex(complex(float(r["re"]), float(r["im"])))
            out.append(item)
        return json.dumps(out, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=ROW_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------------------

def _order_from_args(m, mu):
    if (m is None) == (mu is None):
        raise UsageError("give exactly one of --m (integer order) or --mu (general order)")
    if m is not None:
        return as_order(int(m))
    return as_order(parse_complex(mu))


def cmd_eval(args) -> int:
    req = EvalRequest(
        kind=args.kind,
        n=args.n,
        order=_order_from_args(args.m, args.mu),
        z=parse_complex(args.z) if args.z is not None else None,
        x=float(args.x) if args.x is not None else None,
        repr=args.repr,
    )
    row = _row(req)
    if row["error"]:
        sys.stderr.write(row["error"] + "\n")
        return 1
    _emit(render([row], args.format), args.out)
    return 0


def read_grid(path: str) -> list[tuple[str, object]]:
    """Grid file: one point per line, ``z <complex>``, ``x <real>`` or a bare complex."""
    points = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) == 2 and parts[0] in ("z", "x"):
                tag, value = parts
            elif len(parts) == 1:
                tag, value = "z", parts[0]
            else:
                raise UsageError(f"cannot parse grid line {line!r}")
            if tag == "x":
                try:
                    points.append(("x", float(value)))
                except ValueError:
                    raise UsageError(f"cannot parse real point {value!r}") from None
            else:
                points.append(("z", parse_complex(value)))
    return points


def cmd_table(args) -> int:
    kinds = [k.strip() for k in args.kind.split(",") if k.strip()]
    for k in kinds:
        if k not in KINDS:
            raise UsageError(f"unknown kind {k!r}")
    degrees = parse_range(args.n)
    if any(abs(n) > N_MAX for n in degrees):
        raise UsageError(f"degrees must satisfy |n| <= {N_MAX}")
    if args.mu is not None:
        orders = [as_order(parse_complex(t)) for t in args.mu.split(";") if t.strip()]
    else:
        orders = [as_order(m) for m in parse_range(args.m)]
    points: list[tuple[str, object]] = []
    if args.grid:
        try:
            points.extend(read_grid(args.grid))
        except OSError as exc:
            sys.stderr.write(f"cannot read grid file: {exc}\n")
            return 1
    points.extend(("z", parse_complex(t)) for t in (args.z or []))
    points.extend(("x", float(t)) for t in (args.x or []))
    rows = []
    for kind in kinds:
        for n in degrees:
            for order in orders:
                for tag, value in points:
                    req = EvalRequest(kind, n, order, value if tag == "z" else None, value if tag == "x" else None)
                    rows.append(_row(req))
    try:
        _emit(render(rows, args.format), args.out)
    except OSError as exc:
        sys.stderr.write(f"cannot write output: {exc}\n")
        return 1
    return 0


def render_report(report: suites.CheckReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["identity", "pass", "fail", "worst_error", "tol", "worst_point"])
    worst = report.worst()
    for ident in report.identities():
        checks = [c for c in report.checks if c.identity == ident]
        fails = sum(not c.passed for c in checks)
        w = worst[ident]
        writer.writerow([ident, len(checks) - fails, fails, format(w.error, ".3e"), format(w.tol, ".1e"), w.point])
    writer.writerow(["TOTAL", report.n_pass, report.n_fail, "", "", "PASS" if report.ok else "FAIL"])
    return buf.getvalue()


def cmd_check(args) -> int:
    names = ["all", *suites.SUITES]
    if args.suite not in names:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(names)}")
    report = suites.run_suite(args.suite, tol=args.tol)
    _emit(render_report(report, args.format), args.out)
    if not report.ok:
        for c in report.failures()[:20]:
            sys.stderr.write(f"FAIL {c.identity} at {c.point}: error {c.error:.3e} > tol {c.tol:.1e}\n")
        return 1
    return 0


# -- entry point ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="legendre-dmu", description="Associated Legendre functions and their order derivatives.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one value")
    ev.add_argument("--kind", required=True, choices=KINDS)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--m", type=int)
    ev.add_argument("--mu")
    ev.add_argument("--z")
    ev.add_argument("--x")
    ev.add_argument("--repr")
    ev.add_argument("--format", choices=("csv", "json"), default="csv")
    ev.add_argument("--out")

    tb = sub.add_parser("table", help="tabulate over ranges and grids")
    tb.add_argument("--kind", required=True, help="comma-separated kinds")
    tb.add_argument("--n", required=True, help="degree range, e.g. 0:8")
    tb.add_argument("--m", default="0", help="integer order range, e.g. -2:4")
    tb.add_argument("--mu", help="semicolon-separated general orders (overrides --m)")
    tb.add_argument("--z", action="append", help="off-cut point; repeatable")
    tb.add_argument("--x", action="append", help="on-cut point; repeatable")
    tb.add_argument("--grid", help="file with one point per line")
    tb.add_argument("--format", choices=("csv", "json"), default="csv")
    tb.add_argument("--out")

    ck = sub.add_parser("check", help="run a verification suite")
    ck.add_argument("--suite", default="all")
    ck.add_argument("--tol", type=float, help="override every tolerance in the suite")
    ck.add_argument("--format", choices=("csv", "json"), default="csv")
    ck.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("choose a command: eval, table or check")
        handler = {"eval": cmd_eval, "table": cmd_table, "check": cmd_check}[args.command]
        return handler(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except LegendreError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
