"""Acceptance checks, one per criterion, over the standard grid.

Each suite runs once per session; every test then filters the identities it
owns, confirms that each individual comparison was made at a tolerance no
looser than the criterion's, and that all of them passed.
"""
import math

import pytest

from legendre_dmu import (
    DiffScheme,
    NonexistentFunction,
    dp_dmu_at_int,
    fd_dmu,
    legendre_p,
    p_general,
    q_int,
    q_neg_degree_general,
    q_on_cut,
)
from legendre_dmu.suites import run_suite

EULER_GAMMA = 0.57721566490153286061

_cache: dict = {}


def suite(name):
    if name not in _cache:
        _cache[name] = run_suite(name)
    return _cache[name]


def _verdict(label, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    return ok


def _assert_identities(label, name, limits):
    """``limits`` maps identity name to the loosest tolerance allowed for it."""
    report = suite(name)
    checks = [c for c in report.checks if c.identity in limits]
    seen = {c.identity for c in checks}
    missing = sorted(set(limits) - seen)
    loose = [c for c in checks if c.tol > limits[c.identity]]
    failed = [c for c in checks if not c.passed]
    worst = max(checks, key=lambda c: c.severity, default=None)
    detail = f"{len(checks)} checks, {len(failed)} failed"
    if worst is not None:
        detail += f", worst {worst.identity} err={worst.error:.2e} tol={worst.tol:.0e}"
    ok = not missing and not loose and not failed and bool(checks)
    _verdict(label, ok, detail)
    assert not missing, f"identities never checked: {missing}"
    assert not loose, f"checks run looser than the criterion: {loose[:3]}"
    assert not failed, f"failures: {failed[:5]}"


def test_p_representations_agree():
    _assert_identities("P representation agreement", "repr-agreement", {"P-representations": 1e-10})


def test_u_representations_agree():
    _assert_identities(
        "U representation agreement",
        "repr-agreement",
        {
            "U-general": 1e-10,
            "U-integer-m<=n": 1e-10,
            "U-integer--m<=n": 1e-10,
            "U-integer-m>n": 1e-10,
            "U-integer--m>n": 1e-10,
        },
    )


def test_w_and_q_representations_agree():
    _assert_identities(
        "W/Q representation agreement",
        "repr-agreement",
        {"W-representations": 1e-10, "W-christoffel-collapse": 1e-12},
    )


def test_symmetries_hold():
    _assert_identities(
        "symmetry suite",
        "symmetries",
        {
            "P-parity": 1e-12,
            "P-degree-reflection": 1e-12,
            "P-order-reflection": 1e-9,
            "P-order-scaling": 1e-12,
            "Q-order-reflection": 1e-9,
            "Q-order-scaling": 1e-12,
            "W-parity": 1e-9,
            "W-order-scaling": 1e-12,
            "W-on-cut-parity": 1e-9,
            "W-on-cut-order-scaling": 1e-12,
            "dP-degree-reflection": 1e-12,
            "dP-order-reflection": 1e-9,
            "dP-at-negative-order": 1e-9,
        },
    )


def test_order_derivatives_match_finite_differences():
    _assert_identities(
        "derivative oracle",
        "oracle",
        {
            "dP-general": 1e-6,
            "dP-at-positive-integer": 1e-6,
            "dP-at-negative-integer": 1e-6,
            "dP-on-cut": 1e-6,
            "d2P-at-integer": 1e-4,
            "dQ-at-integer": 1e-5,
            "dQ-at-integer-negative-degree": 1e-5,
            "dQ-at-zero": 1e-5,
        },
    )


def test_general_order_limits_match_integer_forms():
    _assert_identities(
        "limit consistency",
        "oracle",
        {"P-limit": 1e-5, "U-limit": 1e-5, "Q-limit": 1e-5, "Q-negative-degree-limit": 1e-5},
    )


def test_ode_residuals_small():
    _assert_identities(
        "ODE residual suite",
        "ode",
        {
            "P-homogeneous": 1e-7,
            "dP-inhomogeneous": 1e-7,
            "U-inhomogeneous": 1e-7,
            "expansion-sum": 1e-7,
            "expansion-derivative": 1e-7,
        },
    )


def test_rodrigues_forms_match_series():
    _assert_identities(
        "Rodrigues suite",
        "rodrigues",
        {"rodrigues-P": 1e-10, "rodrigues-Q": 1e-10, "rodrigues-U": 1e-10},
    )


def test_nonexistent_functions_rejected():
    # direct probes in addition to the grid sweep, so the error type is pinned here
    probes = [
        lambda: q_int(1, 2, 2.0, sign=-1),
        lambda: q_on_cut(2, 5, 0.3, sign=-1),
        lambda: q_int(-3, 1, 2.0, sign=1),
        lambda: q_int(-3, 2, 2.0, sign=-1),
        lambda: q_neg_degree_general(2, 1, 2.0),
        lambda: q_neg_degree_general(2, -3, 2.0),
    ]
    rejected = 0
    for probe in probes:
        with pytest.raises(NonexistentFunction):
            probe()
        rejected += 1
    report = suite("repr-agreement")
    checks = [c for c in report.checks if c.identity == "regime-enforcement"]
    ok = rejected == len(probes) and bool(checks) and all(c.passed for c in checks)
    _verdict("regime enforcement", ok, f"{rejected} probes and {len(checks)} grid cases rejected")
    assert ok


def test_spot_values():
    half_ln3 = 0.5 * math.log(3)
    q0 = q_int(0, 0, 2)
    q1 = q_int(1, 0, 2)
    dp = dp_dmu_at_int(0, 0, 2)
    expected_dp = -EULER_GAMMA + half_ln3
    # the oracle only samples the general-order series at mu = +/-h
    fd, _ = fd_dmu(lambda mu: p_general(0, mu, 2), 0.0, DiffScheme())
    errors = {
        "Q_0(2)": abs(q0 - half_ln3) / half_ln3,
        "Q_1(2)": abs(q1 - (math.log(3) - 1)) / (math.log(3) - 1),
        "dP_0/dmu(2)": abs(dp - expected_dp) / abs(expected_dp),
        "dP_0/dmu(2) by FD": abs(fd - expected_dp) / abs(expected_dp),
    }
    limits = {"Q_0(2)": 1e-12, "Q_1(2)": 1e-12, "dP_0/dmu(2)": 1e-9, "dP_0/dmu(2) by FD": 1e-6}
    ok = all(errors[k] <= limits[k] for k in errors) and legendre_p(0, 0, 2) == 1
    detail = ", ".join(f"{k} err={v:.1e}" for k, v in errors.items())
    _verdict("spot values", ok, detail)
    assert ok
