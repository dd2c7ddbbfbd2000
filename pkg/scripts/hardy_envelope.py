#!/usr/bin/env python3
"""Error of the truncated Hardy series for the circle problem against the exact remainder."""
import argparse
import random

import numpy as np

from rotlattice.lattice_arith import P_of, hardy_truncated, sieve_r


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--Y", type=int, nargs="+", default=[100, 1000, 10_000])
    ap.add_argument("--xmin", type=float, default=1e3)
    ap.add_argument("--xmax", type=float, default=1e5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    Xs = [rng.uniform(args.xmin, args.xmax) for _ in range(args.samples)]
    sieve = sieve_r(max(args.Y))
    print(f"{'Y':>7} {'median err':>11} {'max err':>9} {'C fit':>7}")
    for Y in args.Y:
        errs = np.array([abs(P_of(X) - hardy_truncated(X, Y, sieve)) for X in Xs])
        env = np.array([X**0.55 * Y**-0.5 + Y**0.05 for X in Xs])
        print(f"{Y:7d} {np.median(errs):11.4f} {errs.max():9.4f} {np.max(errs / env):7.3f}")


if __name__ == "__main__":
    main()
