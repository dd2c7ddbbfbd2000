"""Exact lattice-point counts A_R(t) for rational t.

`count_exact` sums circle counts over the slices x = m,
A(t) = sum_{a1 t <= m <= a2 t} #{(y, z): y^2 + z^2 <= floor(t^2 f(m/t)^2)},
and `count_bruteforce_3d` tests every point of the bounding box.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from rotlattice.lattice_arith import CircleTable
from rotlattice.rotation_body import RotationBody, SliceThreshold, as_fraction

ORACLE_BOUND = 50

_TABLE = CircleTable()


@dataclass(frozen=True)
class CountResult:
    t: Fraction
    A: int
    slice_count: int
    method: str  # "slice" or "bruteforce"


def count_exact(body: RotationBody, t, table: CircleTable | None = None) -> CountResult:
    t = as_fraction(t)
    th = SliceThreshold(body, t)
    table = table or _TABLE
    # max slice capacity sits at m = 0 (f is maximal at the centre)
    table.reserve(th.capacity(0))
    total = 0
    for m in range(th.m_lo, th.m_hi + 1):
        total += table(th.capacity(m))
    return CountResult(t, total, th.m_hi - th.m_lo + 1, "slice")


class OracleBoundError(ValueError):
    pass


def count_bruteforce_3d(body: RotationBody, t, bound=ORACLE_BOUND) -> CountResult:
    t = as_fraction(t)
    if t > bound:
        raise OracleBoundError(f"t={t} exceeds oracle bound {bound}")
    th = SliceThreshold(body, t)
    reach = math.floor(t * body.B)
    total = 0
    for m in range(th.m_lo, th.m_hi + 1):
        for y in range(-reach, reach + 1):
            for z in range(-reach, reach + 1):
                if th.contains(m, y * y + z * z):
                    total += 1
    return CountResult(t, total, th.m_hi - th.m_lo + 1, "bruteforce")


def _count_task(args):
    body, t = args
    return count_exact(body, t).A


def count_many(body: RotationBody, ts, workers: int = 1, chunksize: int = 16) -> list[int]:
    """A(t) for each t, in input order regardless of worker count."""
    ts = [as_fraction(t) for t in ts]
    if workers <= 1 or len(ts) < 2 * chunksize:
        return [count_exact(body, t).A for t in ts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_count_task, [(body, t) for t in ts], chunksize=chunksize))
