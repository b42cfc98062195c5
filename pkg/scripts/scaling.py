"""Wall-clock comparison of the three component algorithms as n grows.

Brute force is skipped above --brute-max since it enumerates 2^(n+1) subsets.

    python scripts/scaling.py --max-n 14 --repeats 5
"""
from __future__ import annotations

import argparse
import time

from qpoints import Pool, brute_force_components, components, random_matrix, recursive_components


def timed(fn, Q) -> tuple[float, object]:
    t0 = time.perf_counter()
    out = fn(Q)
    return time.perf_counter() - t0, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--brute-max", type=int, default=11)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--max-denominator", type=int, default=2)
    ap.add_argument("--symbols", type=int, default=1)
    args = ap.parse_args()

    pool = Pool(max_denominator=args.max_denominator, symbols=args.symbols)
    print(f"{'n':>3}{'#comp':>8}{'cliques ms':>12}{'recursive ms':>14}{'brute ms':>11}")
    for n in range(1, args.max_n + 1):
        t_c = t_r = t_b = 0.0
        count = 0
        for seed in range(args.repeats):
            Q = random_matrix(n, seed, pool)
            dt, v = timed(components, Q)
            t_c += dt
            count += len(v.components)
            dt, w = timed(recursive_components, Q)
            t_r += dt
            assert w == v, f"recursion disagrees at n={n}, seed={seed}"
            if n <= args.brute_max:
                dt, w = timed(brute_force_components, Q)
                t_b += dt
                assert w == v, f"brute force disagrees at n={n}, seed={seed}"
        k = args.repeats
        brute = f"{1000 * t_b / k:>11.1f}" if n <= args.brute_max else f"{'-':>11}"
        print(f"{n:>3}{count / k:>8.1f}{1000 * t_c / k:>12.1f}{1000 * t_r / k:>14.1f}{brute}")


if __name__ == "__main__":
    main()
