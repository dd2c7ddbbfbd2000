#!/usr/bin/env python3
"""Largest |Delta(t)| / t^1.6 on a half-odd grid, per body."""
import argparse

from rotlattice import FlatPole, Sphere, Spheroid, Superball
from rotlattice.experiments import midpoint_grid, samples
from rotlattice.main_term import build_model


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tmax", type=int, default=300)
    ap.add_argument("--tmin", type=float, default=1.0)
    ap.add_argument("--density", type=int, default=8)
    ap.add_argument("--exponent", type=float, default=1.6)
    args = ap.parse_args()

    grid = [t for t in midpoint_grid(args.tmax, args.density) if t >= args.tmin]
    for body in (Sphere(1), Spheroid(2, 1), Superball(4, 1), FlatPole(4)):
        rows = samples(body, build_model(body), grid)
        worst = max(rows, key=lambda s: abs(s.delta) / float(s.t) ** args.exponent)
        ratio = abs(worst.delta) / float(worst.t) ** args.exponent
        print(f"{str(body):20s} max ratio {ratio:.3f} at t={worst.t} (delta={worst.delta:+.2f})")


if __name__ == "__main__":
    main()
