"""Main-term model: volume plus the oscillating flat-pole contributions.

    M(t) = vol * t^3
           + sum_{j=2}^{N1+1} d*_{1,j} G(-a1 t, j/(N1+2)) t^(2 - j/(N1+2))
           - sum_{j=2}^{N2+1} d*_{2,j} G( a2 t, j/(N2+2)) t^(2 - j/(N2+2))

where G(xi, eta) = c(eta) * sum_k k^(-1-eta) sin(2 pi k xi - pi eta / 2).

Two prefactors are supported.  `F_eval` uses c(eta) = (2 pi)^eta Gamma(eta).
Carrying out the Euler-Maclaurin integral against psi(tx) |x - a_i|^(eta-1)
term by term gives c(eta) = (2 pi)^(-eta) Gamma(eta) instead, and only that
choice matches pi t^2 sum_m f(m/t)^2 - vol t^3 numerically (see
tests/test_main_term.py).  The model therefore defaults to
normalization="derived"; normalization="displayed" keeps the other one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from rotlattice.flat_expansion import LEFT, RIGHT, flat_point_expansion
from rotlattice.rotation_body import RotationBody

DEFAULT_K = 100_000
NORMALIZATIONS = ("derived", "displayed")


_BLOCK = 512


@lru_cache(maxsize=16)
def _weight_matrix(K: int, eta: float) -> np.ndarray:
    """k^(-1-eta) laid out as W[q, r] for k = q*_BLOCK + r, zero outside 1..K."""
    rows = K // _BLOCK + 1
    k = np.arange(rows * _BLOCK, dtype=np.float64)
    w = np.zeros_like(k)
    w[1 : K + 1] = k[1 : K + 1] ** (-1.0 - eta)
    return w.reshape(rows, _BLOCK)


def _sine_sum(xi: float, eta: float, K: int) -> float:
    """sum_{k=1}^K k^(-1-eta) sin(2 pi k xi - pi eta/2).

    e(k xi) is factored as e(q B xi) e(r xi) with every phase reduced mod 1
    before exponentiation, so large xi costs no accuracy.
    """
    W = _weight_matrix(K, eta)
    frac = xi - math.floor(xi)
    r = np.arange(_BLOCK, dtype=np.float64)
    q = np.arange(W.shape[0], dtype=np.float64)
    lo = np.exp(2j * math.pi * ((r * frac) % 1.0))
    step = (_BLOCK * frac) % 1.0
    hi = np.exp(2j * math.pi * ((q * step) % 1.0))
    z_sum = hi @ (W @ lo)
    return float((z_sum * complex(math.cos(0.5 * math.pi * eta), -math.sin(0.5 * math.pi * eta))).imag)


def _prefactor(eta: float, normalization: str) -> float:
    if normalization == "displayed":
        return (2.0 * math.pi) ** eta * math.gamma(eta)
    if normalization == "derived":
        return (2.0 * math.pi) ** (-eta) * math.gamma(eta)
    raise ValueError(f"normalization must be one of {NORMALIZATIONS}")


def F_eval(xi: float, eta: float, K: int = DEFAULT_K, normalization: str = "displayed"):
    """Partial sum of F(xi, eta) through k = K, and a bound on the dropped tail.

    The tail bound is c(eta) / (eta K^eta) from sum_{k>K} k^(-1-eta) <= K^(-eta)/eta.
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    if K < 1:
        raise ValueError("K must be >= 1")
    c = _prefactor(eta, normalization)
    return c * _sine_sum(xi, eta, K), c / (eta * K**eta)


def bernoulli2_closed_form(xi: float) -> float:
    """F(xi, 1) with the (2 pi)^eta prefactor: -2 pi^3 B_2({xi})."""
    x = xi - math.floor(xi)
    return -2.0 * math.pi**3 * (x * x - x + 1.0 / 6.0)


@lru_cache(maxsize=32)
def volume(body: RotationBody) -> float:
    """pi * int_{a1}^{a2} f(x)^2 dx.

    Tanh-sinh quadrature on each half copes with the |x - a_i|^(2 alpha)
    endpoint behaviour.
    """
    A, B, q, p = (mpmath.mpf(body.A.numerator) / body.A.denominator,
                  mpmath.mpf(body.B.numerator) / body.B.denominator, body.q, body.p)
    with mpmath.workdps(30):
        half = mpmath.quad(lambda x: B**2 * (1 - (x / A) ** q) ** (mpmath.mpf(2) / p), [0, A / 2, A])
        return float(mpmath.pi * 2 * half)


@dataclass(frozen=True)
class OscillatingTerm:
    sign: int  # +1 for the left pole, -1 for the right pole
    coefficient: float  # d*_{i,j}
    xi_factor: float  # -a1 or a2
    eta: float
    t_exponent: float
    j: int
    side: int


@dataclass(frozen=True)
class MainTermModel:
    volume: float
    terms: tuple
    K: int = DEFAULT_K
    normalization: str = "derived"

    def without_oscillation(self) -> "MainTermModel":
        return MainTermModel(self.volume, (), self.K, self.normalization)


def build_model(body: RotationBody, expansions=None, K: int = DEFAULT_K,
                normalization: str = "derived") -> MainTermModel:
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
    if expansions is None:
        expansions = (flat_point_expansion(body, LEFT), flat_point_expansion(body, RIGHT))
    terms = []
    for exp in expansions:
        if exp.J + 1 < exp.N + 1:
            raise ValueError(f"expansion J={exp.J} too short for N={exp.N}")
        sign, xi = (1, -body.a1) if exp.side == LEFT else (-1, body.a2)
        for j in range(2, exp.N + 2):
            eta = float(exp.alpha * j)
            terms.append(OscillatingTerm(sign, exp.dstar(j), xi, eta, 2.0 - eta, j, exp.side))
    return MainTermModel(volume(body), tuple(terms), K, normalization)


def oscillating_part(model: MainTermModel, t: float) -> float:
    total = 0.0
    for term in model.terms:
        if term.coefficient == 0.0:
            continue
        value, _ = F_eval(term.xi_factor * t, term.eta, model.K, model.normalization)
        total += term.sign * term.coefficient * value * t**term.t_exponent
    return total


def main_term_eval(model: MainTermModel, t: float) -> float:
    if t <= 0:
        raise ValueError("t must be positive")
    t = float(t)
    base = model.volume * t**3
    if not model.terms:
        return base
    return base + oscillating_part(model, t)
