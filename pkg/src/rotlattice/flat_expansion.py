"""Boundary series at the two flat poles.

Near a pole a_i the meridian curve reads

    x - a_i = c * y**(N+2) + sum_m c_m * y**(N+2+m),

and inverting it gives the profile as a series in w = |x - a_i|**alpha,
alpha = 1/(N+2):

    f(x) = sum_j d_j * w**j,
    d/dx f(x)**2 = sum_{j>=2} d*_j * |x - a_i|**(alpha*j - 1).

For the built-in families all c, c_m are rational.  The reversion is done on
the rescaled variable v = w / |c|**alpha, whose coefficients stay rational,
and the irrational factors |c|**(-alpha*j) are applied at 200-bit precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from rotlattice import powerseries as ps
from rotlattice.rotation_body import RotationBody

LEFT, RIGHT = 1, 2

_PREC_BITS = 200


def _side_index(side) -> int:
    if side in (LEFT, "left", "Left"):
        return LEFT
    if side in (RIGHT, "right", "Right"):
        return RIGHT
    raise ValueError(f"side must be 1/left or 2/right, got {side!r}")


def _binom(e: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= (e - k) / (k + 1)
    return out


def expand_boundary(body: RotationBody, side, M: int):
    """Coefficients (c, [c_1..c_M]) of x - a_i as a series in y.

    Uses x = +-A * (1 - (y/B)**p)**(1/q) expanded binomially; only powers
    y**(p*n) occur.
    """
    i = _side_index(side)
    if M < 0:
        raise ValueError("M must be >= 0")
    p, q = body.p, body.q
    mirror = 1 if i == RIGHT else -1
    top = p + M
    coeffs = {}
    n = 1
    while p * n <= top:
        coeffs[p * n] = mirror * body.A * _binom(Fraction(1, q), n) * (-1) ** n / body.B ** (p * n)
        n += 1
    c = coeffs[p]
    c_m = [coeffs.get(p + m, Fraction(0)) for m in range(1, M + 1)]
    return c, c_m


def _reduced_reversion(c, c_m, N: int, J: int):
    """Coefficients g_1..g_J of y as a series in v = w / |c|**alpha."""
    if c == 0:
        raise ValueError("leading coefficient c must be nonzero")
    alpha = Fraction(1, N + 2)
    # |x - a| = |c| y^(N+2) (1 + u(y));  v = y (1 + u)^alpha
    one_plus_u = [Fraction(1)] + [cm / c for cm in c_m[: J - 1]]
    one_plus_u += [Fraction(0)] * (J - len(one_plus_u))
    v_over_y = ps.power(one_plus_u, alpha, J)
    v_series = [0] + v_over_y  # v as a series in y, orders 0..J
    g = ps.revert(v_series, J + 1)
    return g[1:]


def _scale(c, alpha: Fraction, j: int):
    with mpmath.workprec(_PREC_BITS):
        base = mpmath.mpf(abs(c).numerator) / abs(c).denominator
        return base ** (-mpmath.mpf(alpha.numerator) * j / alpha.denominator)


def revert_series(c, c_m, N: int, J: int) -> list[float]:
    """d_1..d_J of f = sum_j d_j |x - a_i|**(j/(N+2)).

    `c_m` must reach order J - 1; missing entries are read as zero.
    """
    if J < 1:
        raise ValueError("J must be >= 1")
    c = Fraction(c)
    c_m = [Fraction(x) for x in c_m]
    alpha = Fraction(1, N + 2)
    g = _reduced_reversion(c, c_m, N, J)
    with mpmath.workprec(_PREC_BITS):
        return [float(g_j * _scale(c, alpha, j)) for j, g_j in enumerate(g, start=1)]


def dstar_series(d, alpha, side) -> list[float]:
    """d*_2..d*_{J+1} from d_1..d_J: square, then differentiate in x."""
    i = _side_index(side)
    J = len(d)
    series = [0.0] + [float(x) for x in d]
    sq = ps.mul(series, series, J + 2)
    sign = 1 if i == LEFT else -1
    a = float(alpha)
    return [sign * a * j * sq[j] for j in range(2, J + 2)]


@dataclass(frozen=True)
class FlatPointExpansion:
    side: int
    N: int
    alpha: Fraction
    c: Fraction
    c_m: tuple
    d: tuple
    d_star: tuple  # d_star[0] is d*_2
    J: int

    def dstar(self, j: int) -> float:
        if not 2 <= j <= self.J + 1:
            raise IndexError(f"d*_{j} not computed (J={self.J})")
        return self.d_star[j - 2]


def flat_point_expansion(body: RotationBody, side, J: int | None = None) -> FlatPointExpansion:
    i = _side_index(side)
    N = body.N1 if i == LEFT else body.N2
    if J is None:
        J = N + 3
    alpha = Fraction(1, N + 2)
    c, c_m = expand_boundary(body, i, J)
    g = _reduced_reversion(c, c_m, N, J)
    # f^2 in v is exact; rescale each order at high precision
    g0 = [Fraction(0)] + g
    sq = ps.mul(g0, g0, J + 2)
    sign = 1 if i == LEFT else -1
    with mpmath.workprec(_PREC_BITS):
        d = tuple(float(g_j * _scale(c, alpha, j)) for j, g_j in enumerate(g, start=1))
        d_star = tuple(
            float(sign * alpha * j * sq[j] * _scale(c, alpha, j)) for j in range(2, J + 2)
        )
    return FlatPointExpansion(i, N, alpha, c, tuple(c_m), d, d_star, J)
