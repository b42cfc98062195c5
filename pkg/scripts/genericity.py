"""How often is the point variety just the union of coordinate lines?

Samples random parameter matrices for a range of sizes and pools and reports
the fraction whose components are exactly the pairs {i, j}, plus the mean
number of components and the largest dimension seen.

    python scripts/genericity.py --trials 200 --max-n 8
"""
from __future__ import annotations

import argparse
import statistics

from qpoints import Pool, components, random_matrix
from qpoints.components import all_pairs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    pools = {
        "fresh": Pool(fresh=True),
        "d<=6, 4 sym": Pool(max_denominator=6, symbols=4),
        "d<=2, 1 sym": Pool(max_denominator=2, symbols=1),
        "signs only": Pool(max_denominator=2, symbols=0),
    }
    print(f"{'pool':<14}{'n':>3}{'only lines':>12}{'mean #comp':>12}{'max dim':>9}")
    for name, pool in pools.items():
        for n in range(args.min_n, args.max_n + 1):
            sizes, dims, lines = [], [], 0
            for t in range(args.trials):
                v = components(random_matrix(n, args.seed + t, pool))
                lines += v.components == all_pairs(n)
                sizes.append(len(v.components))
                dims.append(v.dimension)
            print(f"{name:<14}{n:>3}{lines / args.trials:>12.3f}{statistics.mean(sizes):>12.2f}{max(dims):>9}")


if __name__ == "__main__":
    main()
