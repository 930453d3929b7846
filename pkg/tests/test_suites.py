import math

from legendre_dmu.suites import SUITES, Check, CheckReport, Grid, rel_err, run_suite

SMALL = Grid(z=(2, 1.2 + 0.7j), x=(0.0, 0.6), n_max=2, m_max=3, mu=(0.3, 1.5 + 0.5j))


def test_rel_err_handles_exact_zeros():
    assert rel_err(0, 0) == 0
    assert rel_err(1e-30, 0) == 1e-30
    assert rel_err(2, 1) == 0.5
    assert rel_err(1e-3, 0, scale=10) == 1e-4


def test_check_severity():
    assert Check("x", "p", 0.0, 0.0).severity == 0
    assert Check("x", "p", 1e-3, 0.0).severity == math.inf
    assert Check("x", "p", 1e-8, 1e-6).passed


def test_every_suite_passes_on_small_grid():
    for name in SUITES:
        report = run_suite(name, SMALL)
        assert report.ok, (name, report.failures()[:3])


def test_all_merges_suites():
    report = run_suite("all", SMALL)
    total = sum(len(run_suite(name, SMALL).checks) for name in SUITES)
    assert len(report.checks) == total
    summary = report.as_dict()
    assert summary["fail"] == 0 and set(summary["worst"]) == set(report.identities())


def test_tolerance_override_makes_checks_fail():
    report = run_suite("oracle", SMALL, tol=1e-300)
    assert not report.ok
    assert report.failures()


def test_empty_report_is_not_ok():
    assert not CheckReport("none").ok
