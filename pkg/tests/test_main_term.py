import math
import random

import numpy as np
import pytest
from scipy.special import beta
from hypothesis import given
from hypothesis import strategies as st

from rotlattice import FlatPole, Sphere, Spheroid, Superball
from rotlattice.main_term import (
    F_eval,
    bernoulli2_closed_form,
    build_model,
    main_term_eval,
    oscillating_part,
    volume,
)


@given(st.integers(-(2**20), 2**20), st.sampled_from([0.25, 0.5, 0.75, 1.0]))
def test_F_periodic(num, eta):
    xi = num / 1024  # dyadic, so xi + 1 is exact
    assert F_eval(xi + 1, eta, 2000) == F_eval(xi, eta, 2000)


def test_F_closed_form_quarter():
    assert bernoulli2_closed_form(0.25) == pytest.approx(math.pi**3 / 24)
    assert math.pi**3 / 24 == pytest.approx(1.2919, abs=1e-4)
    for K in (10, 1000, 100_000):
        value, tail = F_eval(0.25, 1.0, K)
        assert abs(value - math.pi**3 / 24) <= tail


def test_F_at_zero():
    value, tail = F_eval(0.0, 1.0, 100_000)
    assert abs(value + math.pi**3 / 3) <= tail


def test_F_rejects_bad_args():
    with pytest.raises(ValueError):
        F_eval(0.1, 0.0)
    with pytest.raises(ValueError):
        F_eval(0.1, 0.5, 0)


def test_tail_bound_sound():
    rng = random.Random(5)
    for _ in range(1000):
        xi, eta = rng.uniform(-50, 50), rng.uniform(0.05, 1.0)
        a, tail = F_eval(xi, eta, 500)
        b, _ = F_eval(xi, eta, 1000)
        assert abs(b - a) <= tail


def test_volume_closed_forms():
    assert volume(Sphere(1)) == pytest.approx(4 * math.pi / 3, rel=1e-12)
    assert volume(Sphere(3)) == pytest.approx(36 * math.pi, rel=1e-12)
    assert volume(Spheroid(2, 1)) == pytest.approx(8 * math.pi / 3, rel=1e-12)
    assert volume(Spheroid("3/2", "1/2")) == pytest.approx(4 * math.pi / 3 * 1.5 * 0.25, rel=1e-12)
    # 2 int_0^1 (1 - x^4)^(1/2) dx = B(1/4, 3/2) / 2
    assert volume(Superball(4, 1)) == pytest.approx(math.pi / 2 * beta(0.25, 1.5), rel=1e-10)
    assert volume(Superball(4, 1)) == pytest.approx(5.4916, abs=1e-4)
    assert volume(FlatPole(4)) == pytest.approx(math.pi**2 / 2, rel=1e-12)


def test_build_model_term_counts():
    assert build_model(Sphere(1)).terms == ()
    assert build_model(Spheroid(2, 1)).terms == ()
    sb = build_model(Superball(4, 1))
    pairs = sorted({(t.eta, t.t_exponent) for t in sb.terms})
    assert pairs == [(0.5, 1.5), (0.75, 1.25)]
    assert sum(t.side == 1 for t in sb.terms) == 2 == sum(t.side == 2 for t in sb.terms)
    # j runs 2..N+1 = 2..5 for p = 6
    six = build_model(Superball(6, 1))
    assert sorted(t.eta for t in six.terms if t.side == 2) == pytest.approx([2 / 6, 3 / 6, 4 / 6, 5 / 6])


@pytest.mark.parametrize("body", [Superball(4, 1), Superball(6, 1), FlatPole(4), FlatPole(6, 2, "3/2")], ids=str)
def test_model_invariants(body):
    model = build_model(body)
    for term in model.terms:
        assert 0 < term.eta < 1
        assert 1 < term.t_exponent < 2
        assert term.sign == (1 if term.side == 1 else -1)


def test_sphere_main_term_is_volume_only():
    model = build_model(Sphere(1))
    for t in (0.5, 2.0, 17.25, 300.0):
        assert main_term_eval(model, t) == model.volume * t**3


def _euler_maclaurin_reference(body, t):
    """pi t^2 sum_m f(m/t)^2 - vol t^3, summed directly."""
    M = math.floor(t * body.a2)
    m = np.arange(-M, M + 1)
    f2 = np.array([body.f(x) ** 2 for x in m / t])
    return math.pi * t * t * math.fsum(f2) - volume(body) * t**3


@pytest.mark.parametrize("t", [10.0, 50.3, 100.7])
def test_oscillating_part_matches_euler_maclaurin(t):
    body = Superball(4, 1)
    ref = _euler_maclaurin_reference(body, t)
    osc = oscillating_part(build_model(body), t)
    assert osc == pytest.approx(ref, rel=1e-2)


def test_displayed_prefactor_does_not_match():
    # the (2 pi)^(+eta) prefactor overshoots the direct sum by ~2 pi at eta = 1/2
    body = Superball(4, 1)
    model = build_model(body, normalization="displayed")
    for t in (50.3, 100.7):
        ratio = oscillating_part(model, t) / _euler_maclaurin_reference(body, t)
        assert ratio == pytest.approx(2 * math.pi, rel=0.02)


def test_flatpole_oscillating_part():
    body = FlatPole(4)
    for t in (40.3, 120.45):
        assert oscillating_part(build_model(body), t) == pytest.approx(_euler_maclaurin_reference(body, t), rel=2e-2)


def test_leading_order():
    model = build_model(Superball(4, 1))
    ratios = [main_term_eval(model, 2.0**k) / 2.0 ** (3 * k) for k in range(3, 13)]
    errs = [abs(r - model.volume) for r in ratios]
    assert errs[-1] < 1e-4 * model.volume
    assert errs[-1] < errs[0]


def test_j2_term_envelope():
    model = build_model(Superball(4, 1))
    term = next(t for t in model.terms if t.side == 2 and t.j == 2)
    starts = np.geomspace(10, 1000, 12)
    peaks = []
    for T in starts:
        ts = T + np.linspace(0, 1, 101)
        peaks.append(max(abs(term.coefficient * F_eval(term.xi_factor * t, term.eta, 20_000, "derived")[0]) * t ** term.t_exponent for t in ts))
    slope = np.polyfit(np.log(starts), np.log(peaks), 1)[0]
    assert abs(slope - term.t_exponent) <= 0.05
