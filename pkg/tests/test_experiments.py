import math
from fractions import Fraction

import numpy as np
import pytest

from rotlattice import FlatPole, Sphere, Superball
from rotlattice.experiments import (
    DiscrepancySample,
    MeanSquareReport,
    delta_at,
    exponent_fit,
    integrals_from_deltas,
    mean_square,
    mean_square_report,
    midpoint_grid,
    pointwise_check,
    samples,
)
from rotlattice.main_term import build_model


def test_delta_examples():
    model = build_model(Sphere(1))
    s = delta_at(Sphere(1), model, 2)
    assert s.A == 33 and s.delta == pytest.approx(33 - 32 * math.pi / 3) and s.delta == pytest.approx(-0.510, abs=1e-3)
    s = delta_at(Sphere(1), model, Fraction(1, 2))
    assert s.A == 1 and s.delta == pytest.approx(0.476, abs=1e-3)


def test_midpoint_grid():
    g = midpoint_grid(2, 4)
    assert g[0] == Fraction(1, 8) and g[-1] == Fraction(15, 8) and len(g) == 8
    with pytest.raises(ValueError):
        midpoint_grid(2, 3)
    with pytest.raises(ValueError):
        midpoint_grid(Fraction(1, 3), 4)


@pytest.mark.parametrize("power", [3.0, 4.0])
def test_exponent_fit_synthetic(power):
    Ts = [32, 64, 128, 256]
    rep = MeanSquareReport(Ts, [7.5 * T**power for T in Ts], float("nan"), 8, True)
    assert exponent_fit(rep) == pytest.approx(power, abs=1e-12)


def test_exponent_fit_drops_zero_integrals():
    Ts = [1, 32, 64, 128, 256]
    rep = MeanSquareReport(Ts, [0.0] + [T**3 for T in Ts[1:]], float("nan"), 8, True)
    assert exponent_fit(rep) == pytest.approx(3.0)
    assert rep.excluded == [1]
    with pytest.raises(ValueError):
        exponent_fit(MeanSquareReport([1, 2, 3], [1, 2, 3], 0.0, 8, True))


def test_integrals_from_synthetic_deltas():
    # Delta(t) = t gives int_0^T t^2 dt = T^3/3; the midpoint rule is off by T/(12 d^2)
    density = 8
    ts = np.array([float(t) for t in midpoint_grid(64, density)])
    Is = integrals_from_deltas(ts, density, [16, 32, 64])
    for T, I in zip([16, 32, 64], Is):
        assert I == pytest.approx(T**3 / 3 - T / (12 * density**2), rel=1e-12)


def test_pointwise_check_synthetic():
    rows = [DiscrepancySample(Fraction(t), 0, 0.0, 2.0 * t**1.6) for t in (1, 10, 100)]
    assert pointwise_check(rows) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        pointwise_check([])


def test_mean_square_stable_under_density_doubling():
    model = build_model(Sphere(1))
    a = mean_square(Sphere(1), model, 50, density=8)
    b = mean_square(Sphere(1), model, 50, density=16)
    assert abs(a - b) / b < 0.10


def test_report_monotone_and_deterministic():
    body = Superball(4, 1)
    model = build_model(body)
    r1 = mean_square_report(body, model, [8, 16, 32, 64], density=4)
    r2 = mean_square_report(body, model, [8, 16, 32, 64], density=4)
    assert r1 == r2
    assert all(x < y for x, y in zip(r1.integrals, r1.integrals[1:]))
    assert r1.with_flat_terms and len(r1.rows()) == 4 and math.isnan(r1.rows()[0][2])


def test_empty_model_is_plain_volume():
    body = Superball(4, 1)
    bare = build_model(body).without_oscillation()
    ts = [Fraction(k, 3) for k in range(1, 40)]
    for s in samples(body, bare, ts):
        assert s.M == bare.volume * float(s.t) ** 3


def test_flat_terms_shrink_the_discrepancy():
    # the flat-point terms carry the t^(3/2) growth; removing them inflates the integral
    for body in (Superball(4, 1), FlatPole(4)):
        model = build_model(body)
        full = mean_square(body, model, 64, density=4)
        bare = mean_square(body, model.without_oscillation(), 64, density=4)
        assert full < bare / 2
