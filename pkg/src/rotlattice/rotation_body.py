"""Bodies of rotation about the x-axis and their exact slice thresholds.

Every supported body has a profile of the form

    f(x) = B * (1 - |x/A|**q) ** (1/p),        -A <= x <= A,

i.e. the solid |x/A|**q + (rho/B)**p <= 1 with rho = sqrt(y**2 + z**2).
The exponents q, p are even integers and A, B are positive rationals, so
membership of a lattice point in the dilate t*R (t rational) reduces to an
inequality between arbitrary-precision integers.

Near the poles x = +-A the boundary behaves like |x -+ A| ~ y**p, giving the
flatness order N = p - 2 at both ends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

FAMILIES = ("sphere", "spheroid", "superball", "flatpole")
_DISPLAY = {"sphere": "Sphere", "spheroid": "Spheroid", "superball": "Superball", "flatpole": "FlatPole"}


class DomainError(ValueError):
    """Argument outside the domain of a profile or slice operation."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(f"exact paths need a rational, got float {value!r}")
    raise TypeError(f"cannot interpret {value!r} as a rational")


def iroot(n: int, e: int) -> int:
    """Largest integer k >= 0 with k**e <= n."""
    if n < 0:
        raise DomainError("iroot of a negative integer")
    if e == 1 or n < 2:
        return n
    if e == 2:
        return math.isqrt(n)
    # Newton from above; the power of two is >= the true root
    k = 1 << -(-n.bit_length() // e)
    while True:
        k_next = ((e - 1) * k + n // k ** (e - 1)) // e
        if k_next >= k:
            break
        k = k_next
    while k**e > n:
        k -= 1
    while (k + 1) ** e <= n:
        k += 1
    return k


@dataclass(frozen=True)
class RotationBody:
    """Immutable body |x/A|^q + (rho/B)^p <= 1 rotated about the x-axis.

    Use the constructors `Sphere`, `Spheroid`, `Superball` and `FlatPole`
    rather than building one directly.
    """

    family: str
    A: Fraction
    B: Fraction
    q: int
    p: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unsupported family {self.family!r}")
        if self.A <= 0 or self.B <= 0:
            raise ValueError("semi-axes must be positive")
        for name, e in (("q", self.q), ("p", self.p)):
            if e < 2 or e % 2:
                raise ValueError(f"exponent {name}={e} must be an even integer >= 2")

    # geometry ---------------------------------------------------------
    @property
    def a1(self) -> float:
        return -float(self.A)

    @property
    def a2(self) -> float:
        return float(self.A)

    @property
    def N1(self) -> int:
        return self.p - 2

    @property
    def N2(self) -> int:
        return self.p - 2

    def alpha(self, side: int) -> Fraction:
        N = self.N1 if side == 1 else self.N2
        return Fraction(1, N + 2)

    @property
    def params(self) -> dict:
        if self.family == "sphere":
            return {"radius": self.A}
        if self.family == "spheroid":
            return {"a": self.A, "b": self.B}
        if self.family == "superball":
            return {"p": self.p, "radius": self.A}
        return {"p": self.p, "a": self.A, "b": self.B}

    def __str__(self):
        args = ", ".join(str(v) for v in self.params.values())
        return f"{_DISPLAY[self.family]}({args})"

    # profile ----------------------------------------------------------
    def f(self, x: float) -> float:
        g = abs(x / float(self.A)) ** self.q
        if g >= 1.0:
            return 0.0
        return float(self.B) * (1.0 - g) ** (1.0 / self.p)

    def df(self, x: float) -> float:
        A, B, q, p = float(self.A), float(self.B), self.q, self.p
        G = 1.0 - abs(x / A) ** q
        if G <= 0.0:
            return -math.copysign(math.inf, x)
        dG = -q * x ** (q - 1) / A**q
        return B / p * G ** (1.0 / p - 1.0) * dG

    def d2f(self, x: float) -> float:
        A, B, q, p = float(self.A), float(self.B), self.q, self.p
        G = 1.0 - abs(x / A) ** q
        if G <= 0.0:
            return -math.inf
        dG = -q * x ** (q - 1) / A**q
        d2G = -q * (q - 1) * x ** (q - 2) / A**q
        return B / p * ((1.0 / p - 1.0) * G ** (1.0 / p - 2.0) * dG * dG + G ** (1.0 / p - 1.0) * d2G)


def Sphere(radius=1) -> RotationBody:
    r = as_fraction(radius)
    return RotationBody("sphere", r, r, 2, 2)


def Spheroid(a, b) -> RotationBody:
    """Semi-axis `a` along the rotation axis, `b` transverse."""
    return RotationBody("spheroid", as_fraction(a), as_fraction(b), 2, 2)


def Superball(p: int = 4, radius=1) -> RotationBody:
    """|x|^p + rho^p <= radius^p.

    For p >= 4 the profile also has f''(0) = 0, so the Gaussian curvature
    vanishes on the equator circle x = 0 in addition to the poles.
    """
    r = as_fraction(radius)
    return RotationBody("superball", r, r, p, p)


def FlatPole(p: int = 4, a=1, b=1) -> RotationBody:
    """(x/a)^2 + (rho/b)^p <= 1: flat poles of order p - 2, curved elsewhere."""
    return RotationBody("flatpole", as_fraction(a), as_fraction(b), 2, p)


def eval_f(body: RotationBody, x: float) -> float:
    if x < body.a1 or x > body.a2:
        raise DomainError(f"x={x} outside [{body.a1}, {body.a2}]")
    return body.f(x)


class SliceThreshold:
    """Exact integer form of k^(p/2) <= (tB)^p (1 - |m/(tA)|^q) for fixed t.

    With t = a/b the right-hand side is num(m) / den where
    num(m) = (a*Bn)^p * ((a*An)^q - (m*b*Ad)^q) and den = (b*Bd)^p * (a*An)^q.
    """

    __slots__ = ("body", "t", "m_lo", "m_hi", "_P", "_U", "_den", "_mscale", "_e")

    def __init__(self, body: RotationBody, t):
        t = as_fraction(t)
        if t <= 0:
            raise DomainError("t must be positive")
        a, b = t.numerator, t.denominator
        An, Ad = body.A.numerator, body.A.denominator
        Bn, Bd = body.B.numerator, body.B.denominator
        self.body = body
        self.t = t
        self._P = (a * Bn) ** body.p
        self._U = (a * An) ** body.q
        self._den = (b * Bd) ** body.p * self._U
        self._mscale = b * Ad
        self._e = body.p // 2
        reach = (a * An) // (b * Ad)  # floor(t*A)
        self.m_lo, self.m_hi = -reach, reach

    def _numerator(self, m: int) -> int:
        V = (m * self._mscale) ** self.body.q
        if V > self._U:
            raise DomainError(f"m={m} outside [{self.m_lo}, {self.m_hi}] for t={self.t}")
        return self._P * (self._U - V)

    def capacity(self, m: int) -> int:
        return iroot(self._numerator(m) // self._den, self._e)

    def contains(self, m: int, k: int) -> bool:
        """Is a point (m, y, z) with y^2 + z^2 = k inside t*R?"""
        V = (m * self._mscale) ** self.body.q
        if V > self._U:
            return False
        return k**self._e * self._den <= self._P * (self._U - V)


def slice_capacity(body: RotationBody, t, m: int) -> int:
    """floor(t^2 f(m/t)^2), decided exactly."""
    return SliceThreshold(body, t).capacity(m)
