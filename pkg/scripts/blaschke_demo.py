#!/usr/bin/env python3
"""Select a signature-stable subsequence from the built-in template sequence
and report what survived each tolerance level."""

import argparse
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from orthoconvex.core import rat, rat_str
from orthoconvex.harness import template_sequence
from orthoconvex.limits import blaschke_select, hausdorff
from orthoconvex.regions import is_ortho_convex_region


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument("--counts", default="80,70,50",
                    help="comma separated class sizes")
    ap.add_argument("--schedule", default="1,1/2,1/4,1/8",
                    help="comma separated shrinking tolerances")
    ap.add_argument("--check-pairs", type=int, default=5,
                    help="certify this many successive selected pairs")
    args = ap.parse_args()

    counts = tuple(int(c) for c in args.counts.split(","))
    schedule = [rat(t) for t in args.schedule.split(",")]
    items, labels = template_sequence(seed=args.seed, counts=counts)
    print(f"{len(items)} regions in {len(set(labels))} template classes")

    res = blaschke_select(items, schedule)
    for level in res.history:
        print(
            f"  tol={level['tol']:>5}  buckets={level['bucket_sizes']}  "
            f"kept={level['kept']}"
        )
    kept_labels = Counter(labels[i] for i in res.indices)
    print(f"selected {len(res.indices)} indices, classes={dict(kept_labels)}")
    print(f"pairwise signature distance bound: {rat_str(res.pairwise_bound)}")

    rep = items[res.indices[0]]
    print(f"representative is ortho-convex: {is_ortho_convex_region(rep)}")

    fine = res.tol_final / 4
    for i, j in list(zip(res.indices, res.indices[1:]))[: args.check_pairs]:
        hd = hausdorff(items[i], items[j], fine)
        ok = hd.hi <= 2 * res.tol_final
        print(
            f"  d_H(item{i}, item{j}) in [{rat_str(hd.lo)}, {rat_str(hd.hi)}]"
            f"  <= 2*tol: {ok}"
        )
        if not ok:
            sys.exit(1)


if __name__ == "__main__":
    main()
