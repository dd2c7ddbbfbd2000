"""Truncated power series as plain coefficient lists.

Coefficients may be Fractions, floats or mpmath numbers; every routine only
uses field operations so exact input stays exact.  A series `a` stands for
sum(a[n] * z**n for n < len(a)).
"""

from __future__ import annotations

from fractions import Fraction


def mul(a, b, order: int):
    out = [0] * order
    for i, ai in enumerate(a[:order]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order - i]):
            out[i + j] += ai * bj
    return out


def power(a, exponent, order: int):
    """a**exponent for a series with a[0] == 1 (any rational/real exponent).

    J.C.P. Miller recurrence: n*c_n = sum_{k=1..n} ((e+1)k - n) a_k c_{n-k}.
    """
    if a[0] != 1:
        raise ValueError("power() needs a unit constant term")
    a = list(a) + [0] * max(0, order - len(a))
    c = [0] * order
    c[0] = a[0]
    for n in range(1, order):
        s = 0
        for k in range(1, n + 1):
            if a[k] != 0:
                s += ((exponent + 1) * k - n) * a[k] * c[n - k]
        c[n] = s / n if not isinstance(s, int) else Fraction(s, n)
    return c


def compose(a, b, order: int):
    """a(b(z)) with b[0] == 0, by Horner's scheme."""
    if b and b[0] != 0:
        raise ValueError("inner series must vanish at 0")
    out = [0] * order
    for coeff in reversed(a[:order]):
        out = mul(out, b, order)
        out[0] += coeff
    return out


def revert(a, order: int):
    """Compositional inverse of z*(1 + a[2] z + ...), a[0] == 0, a[1] == 1.

    Lagrange inversion: [w^j] z(w) = (1/j) [z^(j-1)] (a(z)/z)^(-j).
    """
    if a[0] != 0 or a[1] != 1:
        raise ValueError("revert() expects a[0] == 0 and a[1] == 1")
    shifted = list(a[1:order + 1])
    out = [0] * order
    for j in range(1, order):
        inv = power(shifted, -j, j)
        out[j] = Fraction(inv[j - 1], j) if isinstance(inv[j - 1], int) else inv[j - 1] / j
    return out


def evaluate(a, z):
    acc = 0
    for coeff in reversed(a):
        acc = acc * z + coeff
    return acc
