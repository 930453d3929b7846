"""Show how much accuracy the integer-order forms lose at double precision.

Every representation is evaluated twice: at 15 significant digits (what
binary64 offers) and at the package's working precision.  The table lists
the worst relative disagreement per representation over a few points near
z = 1, where cancellation is worst.
"""
import argparse

from legendre_dmu import first_kind as lp
from legendre_dmu import order_derivative as od
from legendre_dmu import second_kind as lq
from legendre_dmu.numerics import WORKING_DPS, _mp_digamma, _mp_gamma, _mp_rgamma, as_arg, ctx, to_complex
from legendre_dmu.suites import rel_err


def _clear_caches():
    for f in (_mp_gamma, _mp_rgamma, _mp_digamma, lp.p_int_mp, lp.upper_coeffs, od.u_upper_coeffs):
        f.cache_clear()


def evaluate_all(points, n_max):
    out = {}
    for z in points:
        a = as_arg(z)
        for n in range(n_max + 1):
            for m in range(n + 1):
                for rep in lq.WRepresentation:
                    out[(rep.value, n, m, z)] = to_complex(lq.w_mp(n, 1, m, a, rep))
                for rep in od.u_representations(lp.POS_LE):
                    out[(rep.value, n, m, z)] = to_complex(od.u_int_mp(n, 1, m, a, rep))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--low-dps", type=int, default=15)
    args = parser.parse_args()
    points = (1.1, 1.01, 1.05 + 0.02j)
    reference = evaluate_all(points, args.n_max)
    ctx.dps = args.low_dps
    _clear_caches()
    try:
        low = evaluate_all(points, args.n_max)
    finally:
        ctx.dps = WORKING_DPS
        _clear_caches()
    worst = {}
    for key, value in reference.items():
        err = rel_err(low[key], value)
        rep = key[0]
        if rep not in worst or err > worst[rep][0]:
            worst[rep] = (err, key[1:])
    print(f"{'representation':<22}{'worst rel err':>16}  at (n, m, z)")
    for rep, (err, where) in sorted(worst.items(), key=lambda kv: -kv[1][0]):
        print(f"{rep:<22}{err:>16.2e}  {where}")


if __name__ == "__main__":
    main()
