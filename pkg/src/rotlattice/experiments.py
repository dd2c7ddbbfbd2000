"""Discrepancy samples, mean-square integrals and growth-exponent fits."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from rotlattice.exact_count import count_exact, count_many
from rotlattice.main_term import MainTermModel, main_term_eval
from rotlattice.rotation_body import RotationBody, as_fraction

DEFAULT_T_GRID = (32, 64, 128, 256)


@dataclass(frozen=True)
class DiscrepancySample:
    t: Fraction
    A: int
    M: float
    delta: float


def delta_at(body: RotationBody, model: MainTermModel, t) -> DiscrepancySample:
    t = as_fraction(t)
    A = count_exact(body, t).A
    M = main_term_eval(model, float(t))
    return DiscrepancySample(t, A, M, A - M)


def midpoint_grid(T, density: int) -> list[Fraction]:
    """t_k = (2k+1) / (2 density) for k = 0 .. T*density - 1."""
    if density < 4:
        raise ValueError("density must be at least 4 samples per unit t")
    n = round(Fraction(T) * density)
    if n != Fraction(T) * density:
        raise ValueError(f"T={T} is not a multiple of 1/density")
    return [Fraction(2 * k + 1, 2 * density) for k in range(n)]


def samples(body: RotationBody, model: MainTermModel, ts, workers: int = 1, counts=None) -> list[DiscrepancySample]:
    ts = [as_fraction(t) for t in ts]
    if counts is None:
        counts = count_many(body, ts, workers=workers)
    out = []
    for t, A in zip(ts, counts):
        M = main_term_eval(model, float(t))
        out.append(DiscrepancySample(t, A, M, A - M))
    return out


def mean_square(body: RotationBody, model: MainTermModel, T, density: int = 8, workers: int = 1) -> float:
    """Midpoint-rule estimate of int_0^T Delta(t)^2 dt."""
    grid = midpoint_grid(T, density)
    deltas = np.array([s.delta for s in samples(body, model, grid, workers)])
    return float(np.sum(deltas**2) / density)


@dataclass
class MeanSquareReport:
    T_grid: list
    integrals: list
    fitted_exponent: float
    sample_density: int
    with_flat_terms: bool
    excluded: list = field(default_factory=list)

    def rows(self):
        """(T, integral, slope fitted over T_grid[:i+1]) for each T."""
        out = []
        for i, (T, I) in enumerate(zip(self.T_grid, self.integrals)):
            slope = _slope(self.T_grid[: i + 1], self.integrals[: i + 1]) if i >= 1 else float("nan")
            out.append((T, I, slope))
        return out


def _slope(Ts, Is) -> float:
    pts = [(T, I) for T, I in zip(Ts, Is) if I > 0]
    if len(pts) < 2:
        return float("nan")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


def exponent_fit(report: MeanSquareReport) -> float:
    """Least-squares slope of log I(T) against log T; points with I = 0 are dropped."""
    if len(report.T_grid) < 4:
        raise ValueError("need at least 4 T values")
    report.excluded = [T for T, I in zip(report.T_grid, report.integrals) if I <= 0]
    return _slope(report.T_grid, report.integrals)


def integrals_from_deltas(deltas, density: int, T_grid) -> list[float]:
    """Nested-grid integrals: prefix sums of delta^2 / density at each T."""
    sq = np.cumsum(np.asarray(deltas, dtype=np.float64) ** 2) / density
    return [float(sq[round(T * density) - 1]) for T in T_grid]


def mean_square_report(body: RotationBody, model: MainTermModel, T_grid=DEFAULT_T_GRID,
                       density: int = 8, workers: int = 1, counts=None) -> MeanSquareReport:
    T_grid = sorted(T_grid)
    grid = midpoint_grid(T_grid[-1], density)
    rows = samples(body, model, grid, workers, counts=counts)
    integrals = integrals_from_deltas([s.delta for s in rows], density, T_grid)
    report = MeanSquareReport(list(T_grid), integrals, float("nan"), density, bool(model.terms))
    report.fitted_exponent = exponent_fit(report) if len(T_grid) >= 4 else _slope(T_grid, integrals)
    return report


def pointwise_check(rows, exponent: float = 1.6) -> float:
    """max |Delta(t)| / t^exponent over the samples."""
    if not rows:
        raise ValueError("no samples")
    return max(abs(s.delta) / float(s.t) ** exponent for s in rows)
