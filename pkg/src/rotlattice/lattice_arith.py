"""Two-squares arithmetic: r(n), its sieve, exact circle counts and P(X).

`hardy_truncated` is the finite cosine expansion of the circle-problem
remainder,

    P(X) ~ X**(1/4) / pi * sum_{n <= Y} r(n) n**(-3/4) cos(2 pi sqrt(nX) - 3pi/4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# 2**28 entries of int64 is 2 GiB; stay well below
MAX_SIEVE = 200_000_000


class CapacityError(MemoryError):
    pass


def r_single(n: int) -> int:
    """Number of (m1, m2) in Z^2 with m1^2 + m2^2 = n, via the factorization of n."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    while n % 2 == 0:
        n //= 2
    out = 4
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if p % 4 == 3:
                if e % 2:
                    return 0
            else:
                out *= e + 1
        p += 2
    if n > 1:
        if n % 4 == 3:
            return 0
        out *= 2
    return out


@dataclass(frozen=True)
class RSieve:
    limit: int
    values: np.ndarray = field(repr=False)
    cumulative: np.ndarray = field(repr=False)

    def r(self, n: int) -> int:
        return int(self.values[n])

    def count(self, K: int) -> int:
        """sum_{k <= K} r(k), i.e. lattice points in the disk of radius sqrt(K)."""
        return int(self.cumulative[K])


def sieve_r(N: int, max_size: int = MAX_SIEVE) -> RSieve:
    """r(0..N) by accumulating lattice points shell by shell."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if N + 1 > max_size:
        raise CapacityError(f"sieve of size {N + 1} exceeds bound {max_size}")
    values = np.zeros(N + 1, dtype=np.int64)
    R = math.isqrt(N)
    z = np.arange(0, R + 1, dtype=np.int64)
    z2 = z * z
    for y in range(0, R + 1):
        k = y * y + z2
        k = k[k <= N]
        # weight: points (+-y, +-z) with multiplicity of sign choices
        w = np.where(k == y * y, 1, 2) * (1 if y == 0 else 2)
        np.add.at(values, k, w)
    values.setflags(write=False)
    cumulative = np.cumsum(values)
    cumulative.setflags(write=False)
    return RSieve(N, values, cumulative)


def circle_count_exact(K: int) -> int:
    """#{(y, z) in Z^2 : y^2 + z^2 <= K} with exact integer square roots."""
    if K < 0:
        return 0
    R = math.isqrt(K)
    total = 2 * R + 1  # y = 0
    for y in range(1, R + 1):
        total += 2 * (2 * math.isqrt(K - y * y) + 1)
    return total


def isqrt_array(x: np.ndarray) -> np.ndarray:
    """Exact floor(sqrt(x)) for nonnegative int64 arrays below 2**52."""
    x = np.asarray(x, dtype=np.int64)
    s = np.floor(np.sqrt(x.astype(np.float64))).astype(np.int64)
    s -= (s * s > x).astype(np.int64)
    s += ((s + 1) * (s + 1) <= x).astype(np.int64)
    return s


def circle_counts(Ks: np.ndarray) -> np.ndarray:
    """Vectorised circle_count_exact for many K at once."""
    Ks = np.asarray(Ks, dtype=np.int64)
    out = np.zeros_like(Ks)
    R = int(isqrt_array(Ks.max(initial=0)))
    for y in range(-R, R + 1):
        rest = Ks - y * y
        ok = rest >= 0
        out[ok] += 2 * isqrt_array(rest[ok]) + 1
    return out


class CircleTable:
    """Grow-on-demand cache of circle counts for repeated lookups.

    Falls back to `circle_count_exact` above `max_size`.
    """

    def __init__(self, max_size: int = 20_000_000):
        self.max_size = max_size
        self._sieve = sieve_r(0)

    def reserve(self, K: int) -> None:
        if K > self._sieve.limit and K < self.max_size:
            self._sieve = sieve_r(min(max(K, 2 * self._sieve.limit), self.max_size - 1))

    def __call__(self, K: int) -> int:
        if K <= self._sieve.limit:
            return int(self._sieve.cumulative[K])
        if K < self.max_size:
            self.reserve(K)
            return int(self._sieve.cumulative[K])
        return circle_count_exact(K)


def P_of(X: float) -> float:
    if X < 0:
        raise ValueError("X must be >= 0")
    return circle_count_exact(math.floor(X)) - math.pi * X


def hardy_truncated(X: float, Y: float, sieve: RSieve) -> float:
    n_max = math.floor(Y)
    if n_max < 1:
        return 0.0
    if sieve.limit < n_max:
        raise CapacityError(f"sieve limit {sieve.limit} below Y={Y}")
    n = np.arange(1, n_max + 1, dtype=np.float64)
    r = sieve.values[1 : n_max + 1]
    nz = r != 0
    n, r = n[nz], r[nz]
    terms = r * n**-0.75 * np.cos(2.0 * math.pi * np.sqrt(n * X) - 0.75 * math.pi)
    return float(X**0.25 / math.pi * math.fsum(terms))
