#!/usr/bin/env python3
"""Exploratory comparison of the candidate type B diagonal inversion count
against the area of the zeta image.

No identity is asserted; the script prints the joint distribution of
(candidate, area of image) and the distribution of their difference for
small ranks, for inspection.
"""

import argparse
from collections import Counter

from zetakit.paths import enumerate_paths, lattice, render_path
from zetakit.stats import area, dinv_b_experimental
from zetakit.zeta import zeta_path


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--verbose", action="store_true", help="print one row per path")
    args = parser.parse_args()

    for n in range(2, args.n_max + 1):
        diffs = Counter()
        for p in enumerate_paths(lattice(n, n)):
            cand = dinv_b_experimental(p)
            target = area(zeta_path(p, "B"), "B")
            diffs[cand - target] += 1
            if args.verbose:
                print("%s  candidate=%d  area=%d" % (render_path(p), cand, target))
        total = sum(diffs.values())
        agree = diffs.get(0, 0)
        print(
            "n=%d: %d paths, candidate == area for %d, difference distribution %s"
            % (n, total, agree, dict(sorted(diffs.items())))
        )


if __name__ == "__main__":
    main()
