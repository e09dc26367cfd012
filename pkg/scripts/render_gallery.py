#!/usr/bin/env python3
"""Write a small gallery of SVG figures: a region with its hull, a separated
pair with the certificate staircase, and a four-chain decomposition."""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from orthoconvex.harness import random_disjoint_pair, random_ortho_region
from orthoconvex.hull import ortho_hull
from orthoconvex.regions import GridRegion
from orthoconvex.representation import four_chain_decomposition
from orthoconvex.separation import separate_sets, verify_certificate
from orthoconvex.svg import render_svg


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures")
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    seed_cells = frozenset(
        (rng.randrange(8), rng.randrange(8)) for _ in range(7)
    )
    seed = GridRegion(seed_cells)
    hull = ortho_hull(seed).region
    (out / "hull.svg").write_text(
        render_svg([("hull", hull), ("seed", seed)])
    )

    a, b = random_disjoint_pair(rng, (20, 20))
    cert = separate_sets(a, b)
    if not verify_certificate(cert, a, b)["valid"]:
        print("certificate failed verification", file=sys.stderr)
        sys.exit(1)
    (out / "separation.svg").write_text(
        render_svg([("A", a), ("B", b), ("cert", cert.line)])
    )

    region = random_ortho_region(rng, (12, 12))
    fam = four_chain_decomposition(region)
    named = [("region", region)] + [
        (f"chain{k}", h.line) for k, h in enumerate(fam.halfplanes)
    ]
    (out / "four_chain.svg").write_text(render_svg(named))

    for name in ("hull.svg", "separation.svg", "four_chain.svg"):
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
