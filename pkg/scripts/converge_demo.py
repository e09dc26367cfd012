#!/usr/bin/env python3
"""Staircase paths approaching the geodesic: certified length and distance
intervals for a doubling sequence of lattice pitches, printed as a table."""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from orthoconvex.core import Pt2, rat
from orthoconvex.limits import path_convergence_report
from orthoconvex.regions import GridRegion

REGIONS = {
    "channel": GridRegion(frozenset({(0, 0), (1, 0), (2, 0), (3, 0)})),
    "ell": GridRegion(frozenset({(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)})),
    "block": GridRegion(frozenset((i, j) for i in range(4) for j in range(3))),
}

ENDPOINTS = {
    "channel": ((0, 0), (4, 0)),
    "ell": ((0, 0), (3, 3)),
    "block": ((0, 0), (4, 3)),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--region", choices=sorted(REGIONS), default="channel")
    ap.add_argument("--max-n", type=int, default=256)
    ap.add_argument("--refine-factor", default="1/4")
    args = ap.parse_args()

    region = REGIONS[args.region]
    (ax, ay), (bx, by) = ENDPOINTS[args.region]
    a, b = Pt2(rat(ax), rat(ay)), Pt2(rat(bx), rat(by))
    ns = []
    n = 1
    while n <= args.max_n:
        ns.append(n)
        n *= 2

    rep = path_convergence_report(region, a, b, ns, rat(args.refine_factor))
    lo, hi = rep["limit_length"]
    print(f"region={args.region}  endpoints={ENDPOINTS[args.region]}")
    print(f"geodesic length in [{lo}, {hi}]")
    print(f"{'n':>5} {'length interval':>28} {'len env':>10} "
          f"{'hausdorff hi':>14} {'hd env':>10}")
    for row in rep["rows"]:
        llo, lhi = (Fraction(s) for s in row["length"])
        print(
            f"{row['n']:>5} "
            f"[{float(llo):.8f}, {float(lhi):.8f}]".rjust(34),
            f"{float(Fraction(row['length_envelope'])):>10.6f}",
            f"{float(Fraction(row['hausdorff'][1])):>14.8f}",
            f"{float(Fraction(row['hausdorff_envelope'])):>10.6f}",
        )
        if not (row["length_within_envelope"] and row["hausdorff_within_envelope"]):
            print(f"  !! n={row['n']} escaped its envelope", file=sys.stderr)
            sys.exit(1)


if __name__ == "__main__":
    main()
