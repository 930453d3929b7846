"""Run the verification suites and write a per-identity summary.

Usage: python scripts/agreement_report.py [--suite all] [--n-max 8] [--out report.json]
"""
import argparse
import json
import time

from legendre_dmu.suites import SUITES, Grid, run_suite


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", default="all", choices=("all",) + tuple(SUITES))
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--m-max", type=int, default=10)
    parser.add_argument("--out")
    args = parser.parse_args()
    grid = Grid(n_max=args.n_max, m_max=args.m_max)
    names = tuple(SUITES) if args.suite == "all" else (args.suite,)
    summary = {}
    for name in names:
        start = time.perf_counter()
        report = run_suite(name, grid)
        elapsed = time.perf_counter() - start
        summary[name] = dict(report.as_dict(), seconds=round(elapsed, 2))
        print(f"{name:<16}{report.n_pass:>7} pass {report.n_fail:>4} fail {elapsed:>7.1f}s")
        for identity, check in sorted(report.worst().items()):
            flag = "ok " if check.passed else "BAD"
            print(f"  {flag} {identity:<32} worst {check.error:.2e} (tol {check.tol:.0e}) at {check.point}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2)


if __name__ == "__main__":
    main()
