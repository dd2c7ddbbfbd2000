"""Support (tac-)function, polar profile and the polar lattice count N(X).

The polar body R* = {H <= 1} is again a body of rotation; its meridian
v = h(u), 1/a1 <= u <= 1/a2, is reached parametrically from the primal
profile: the point (u, h) polar-reciprocal to (x, f(x)) solves

    u x + h f(x) = 1,    u + h f'(x) = 0,

so u = f'/(x f' - f) and h = 1/(f - x f').
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from rotlattice.rotation_body import DomainError, RotationBody

COUNT_BOUND = 500
# relative slack for H <= X, so exact ties (e.g. the sphere) are counted
TIE_RTOL = 1e-11


def _argmax_x(body: RotationBody, u: float, s: float) -> float:
    """Root of u + s f'(x) = 0 on (a1, a2) by bisection."""
    lo, hi = body.a1, body.a2
    # u + s f' decreases from +inf to -inf
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if u + s * body.df(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * (body.a2 - body.a1):
            break
    return 0.5 * (lo + hi)


def tac_H(body: RotationBody, u: float, v: float, w: float) -> float:
    s = math.hypot(v, w)
    if s == 0.0:
        return max(u * body.a1, u * body.a2)
    x = _argmax_x(body, u, s)
    return u * x + s * body.f(x)


@dataclass(frozen=True)
class PolarCurvePoint:
    x: float
    u: float
    h: float


def polar_profile(body: RotationBody, x: float) -> PolarCurvePoint:
    if not body.a1 < x < body.a2:
        raise DomainError(f"x={x} must lie strictly inside ({body.a1}, {body.a2})")
    f, df = body.f(x), body.df(x)
    denom = f - x * df
    return PolarCurvePoint(x, -df / denom, 1.0 / denom)


def hh_prime_sup(body: RotationBody, n: int = 2000, edge: float = 1e-6) -> float:
    """max |h(u) h'(u)| over a grid refined toward both poles.

    h' is a finite-difference quotient of consecutive parametric points.
    """
    half = np.geomspace(edge, 1.0, n // 2)
    width = body.a2 - body.a1
    xs = np.unique(np.concatenate([body.a1 + width * 0.5 * half, body.a2 - width * 0.5 * half[::-1]]))
    pts = [polar_profile(body, float(x)) for x in xs if body.a1 < x < body.a2]
    u = np.array([p.u for p in pts])
    h = np.array([p.h for p in pts])
    du = np.diff(u)
    ok = du != 0
    slope = np.diff(h)[ok] / du[ok]
    h_mid = 0.5 * (h[1:] + h[:-1])[ok]
    return float(np.max(np.abs(h_mid * slope)))


def polar_constant(body: RotationBody) -> float:
    """C = int_{1/a1}^{1/a2} h(u)^2 du, integrated in the primal parameter x.

    du/dx = -f f'' / (x f' - f)^2, so C = int_{a1}^{a2} -f f'' / (f - x f')^4 dx.
    """
    def integrand(x):
        x = float(x)
        f, df, d2f = body.f(x), body.df(x), body.d2f(x)
        if f == 0.0 or not math.isfinite(df):
            # integrand ~ |x - a_i|^(2 - 2 alpha) -> 0 at the poles
            return 0.0
        return -f * d2f / (f - x * df) ** 4

    with mpmath.workdps(20):
        return float(mpmath.quad(integrand, [body.a1, body.a1 / 2, 0, body.a2 / 2, body.a2]))


def count_N(body: RotationBody, X: float, bound: float = COUNT_BOUND) -> int:
    """#{(m, n) in Z x Z>=0 : H(m, sqrt(n), 0) <= X}."""
    if X > bound:
        raise ValueError(f"X={X} exceeds count bound {bound}")
    if X < 0:
        return 0
    limit = X * (1.0 + TIE_RTOL)
    m_lo = math.ceil(X / body.a1 * (1.0 + 1e-9)) - 1
    m_hi = math.floor(X / body.a2 * (1.0 + 1e-9)) + 1
    # H(m, s) >= s f(0), so s <= X / f(0)
    n_cap = math.floor((limit / body.f(0.0)) ** 2) + 1
    total = 0
    for m in range(m_lo, m_hi + 1):
        if tac_H(body, m, 0.0, 0.0) > limit:
            continue
        lo, hi = 0, n_cap  # invariant: H(m, sqrt(lo)) <= X < H(m, sqrt(hi))
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if tac_H(body, m, math.sqrt(mid), 0.0) <= limit:
                lo = mid
            else:
                hi = mid
        total += lo + 1
    return total
