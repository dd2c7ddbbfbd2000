#!/usr/bin/env python3
"""Lattice count N(X) for the polar body against the quadrature constant C."""
import argparse

from rotlattice import FlatPole, Sphere, Spheroid, Superball
from rotlattice.polar_geometry import count_N, polar_constant


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--X", type=float, nargs="+", default=[50, 100, 200, 300, 400])
    args = ap.parse_args()

    for body in (Sphere(1), Spheroid(2, 1), Superball(4, 1), FlatPole(4)):
        C = polar_constant(body)
        print(f"{body}  C = {C:.6f}")
        for X in args.X:
            N = count_N(body, X)
            r = N / X**3
            print(f"  X={X:6g}  N={N:10d}  N/X^3={r:.6f}  (N/X^3 - C) * X={(r - C) * X:+.3f}")


if __name__ == "__main__":
    main()
