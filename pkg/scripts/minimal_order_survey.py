#!/usr/bin/env python3
"""Survey savings from the minimal-order representation: for all
partitions of a given size, compare the plain Wronskian order (length)
with the minimal pseudo-Wronskian order.

Usage: python scripts/minimal_order_survey.py [size]
"""

import sys

from hermitepw.maya import MayaDiagram, partitions_of
from hermitepw.minorder import durfee_symbol, minimal_girth


def main():
    size = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    rows = []
    for lam in partitions_of(size):
        rep = minimal_girth(lam)
        k = rep.origins[-1]
        small = MayaDiagram.from_partition(lam).shift(-k)
        rows.append((lam, lam.length, rep.r, k, durfee_symbol(small)))
    rows.sort(key=lambda r: (r[1] - r[2], r[1]), reverse=True)
    print(f"partitions of {size}: plain order vs minimal order")
    for lam, ell, r, k, d in rows:
        print(f"{str(lam):22s} order {ell} -> {r}  (origin {k:3d}, {d})")
    best = max(rows, key=lambda r: r[1] - r[2])
    print(f"\nbiggest saving: {best[0]} drops {best[1] - best[2]} orders")


if __name__ == "__main__":
    main()
