"""Instanton numbers from the Lambert expansion ``c0 + sum k^3 N_k q^k / (1 - q^k)``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import PowerSeries

__all__ = ["InstantonTable", "lambert_extract", "lambert_synthesize", "detect_period", "divisors"]


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class InstantonTable:
    """Instanton numbers N_1..N_K (``N[k-1]`` is N_k) and the constant term."""

    c0: Fraction
    N: tuple
    integral_flags: tuple
    detected_period: int | None = None

    @property
    def verified_to(self) -> int:
        return len(self.N)

    def __getitem__(self, k: int) -> Fraction:
        if k < 1:
            raise IndexError("instanton numbers are indexed from 1")
        return self.N[k - 1]

    @property
    def all_integral(self) -> bool:
        return all(self.integral_flags)

    def with_period(self) -> "InstantonTable":
        return InstantonTable(self.c0, self.N, self.integral_flags, detect_period(self))


def lambert_extract(y: PowerSeries) -> InstantonTable:
    """Invert coefficient(q^n) = sum_{d | n} d^3 N_d one n at a time."""
    N: list[Fraction] = []
    for n in range(1, y.order + 1):
        s = y[n]
        for d in divisors(n)[:-1]:
            s -= d ** 3 * N[d - 1]
        N.append(s / n ** 3)
    flags = tuple(x.denominator == 1 for x in N)
    return InstantonTable(y[0], tuple(N), flags)


def lambert_synthesize(t: InstantonTable, order: int) -> PowerSeries:
    if order > len(t.N):
        raise ValueError(f"table only has {len(t.N)} entries, cannot synthesize to order {order}")
    cs = [Fraction(0)] * (order + 1)
    cs[0] = Fraction(t.c0)
    for k in range(1, order + 1):
        w = k ** 3 * t.N[k - 1]
        if w:
            for m in range(k, order + 1, k):
                cs[m] += w
    return PowerSeries(cs, order, "q")


def detect_period(t: InstantonTable, min_repeats: int = 3) -> int | None:
    """Smallest p with N_(k+p) = N_k for every available k.

    Only periods that fit ``min_repeats`` times into the table are tried, so a
    short table gives None (undetermined) rather than a guess.
    """
    N = t.N
    for p in range(1, len(N) // min_repeats + 1):
        if all(N[k + p] == N[k] for k in range(len(N) - p)):
            return p
    return None
