#!/usr/bin/env python3
"""Mean-square growth of the lattice discrepancy, with and without flat-point terms.

    python3 scripts/run_meansquare.py --family superball --T 32 64 128 256 --workers 4
"""
import argparse
import time

from rotlattice import FlatPole, Sphere, Spheroid, Superball
from rotlattice.exact_count import count_many
from rotlattice.experiments import mean_square_report, midpoint_grid
from rotlattice.main_term import build_model

BODIES = {
    "sphere": lambda: Sphere(1),
    "spheroid": lambda: Spheroid(2, 1),
    "superball": lambda: Superball(4, 1),
    "superball6": lambda: Superball(6, 1),
    "flatpole": lambda: FlatPole(4),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--family", choices=sorted(BODIES), default="superball")
    ap.add_argument("--T", type=int, nargs="+", default=[32, 64, 128, 256])
    ap.add_argument("--density", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    body = BODIES[args.family]()
    start = time.perf_counter()
    counts = count_many(body, midpoint_grid(max(args.T), args.density), workers=args.workers)
    model = build_model(body)
    print(f"{body}: {len(counts)} exact counts in {time.perf_counter() - start:.1f}s")
    for label, m in (("full model", model), ("volume only", model.without_oscillation())):
        rep = mean_square_report(body, m, args.T, args.density, counts=counts)
        print(f"\n{label}: fitted exponent {rep.fitted_exponent:.4f}")
        for T, I, slope in rep.rows():
            print(f"  T={T:5d}  I={I:.6e}  slope so far={slope:.4f}")


if __name__ == "__main__":
    main()
