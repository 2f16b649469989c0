"""Apery's sequences A_n, B_n, the lcm denominator bound and the zeta(3) convergents."""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from math import comb, lcm

from .frobenius import apery_recursion, run_recursion

__all__ = [
    "AperyPair",
    "apery_sequences",
    "lcm_to",
    "zeta3_enclosure",
    "zeta3_enclosure_fast",
    "zeta3_convergent",
    "pi0_series",
]


@dataclass(frozen=True)
class AperyPair:
    A: tuple
    B: tuple
    n_max: int

    def convergent(self, n: int) -> Fraction:
        return self.B[n] / self.A[n]


def apery_sequences(n_max: int) -> AperyPair:
    """A_0..A_n_max and B_0..B_n_max from the common three-term recursion.

    Raises ArithmeticError if either of the two arithmetic properties fails.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    A = run_recursion(apery_recursion((1, 5)), n_max + 1)
    B = run_recursion(apery_recursion((0, 6)), n_max + 1)
    d = 1
    for n in range(n_max + 1):
        if A[n].denominator != 1:
            raise ArithmeticError(f"A_{n} = {A[n]} is not an integer")
        if n:
            d = lcm(d, n)
        if (B[n] * d ** 3).denominator != 1:
            raise ArithmeticError(f"d_{n}^3 B_{n} is not an integer")
    return AperyPair(tuple(int(a) for a in A), tuple(B), n_max)


def lcm_to(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return lcm(*range(1, n + 1))


def pi0_series(order: int):
    """sum B_n phi^(n+1), known through phi^order."""
    from .series import PowerSeries

    B = apery_sequences(max(order, 1)).B
    return PowerSeries([0] + list(B[:order]), order, "phi")


def zeta3_enclosure(terms: int = 100_000, scale_digits: int = 40) -> tuple[Fraction, Fraction]:
    """Rational interval containing zeta(3), from sum_{k<=K} 1/k^3.

    The partial sum is bracketed by floor/ceil at 10^-scale_digits per term and
    the tail by the integral bounds 1/(2(K+1)^2) < tail < 1/(2K^2).
    """
    scale = 10 ** scale_digits
    lo = hi = 0
    for k in range(1, terms + 1):
        q, r = divmod(scale, k * k * k)
        lo += q
        hi += q + (1 if r else 0)
    K = terms
    return (Fraction(lo, scale) + Fraction(1, 2 * (K + 1) ** 2),
            Fraction(hi, scale) + Fraction(1, 2 * K * K))


def zeta3_enclosure_fast(terms: int = 300) -> tuple[Fraction, Fraction]:
    """Enclosure from zeta(3) = 5/2 sum (-1)^(k-1) / (k^3 C(2k, k)).

    Alternating with decreasing terms, so consecutive partial sums bracket the
    limit. Width is about 4^-terms, enough to separate convergents B_n/A_n for
    n up to ~ 0.47 * terms.
    """
    s = Fraction(0)
    prev = None
    for k in range(1, terms + 2):
        prev = s
        s += Fraction((-1) ** (k - 1), k ** 3 * comb(2 * k, k))
    a, b = Fraction(5, 2) * prev, Fraction(5, 2) * s
    return (a, b) if a <= b else (b, a)


def zeta3_convergent(n: int, terms: int | None = None) -> tuple[Fraction, Decimal]:
    """(B_n/A_n, rigorous upper bound on |B_n/A_n - zeta(3)|).

    The bound is measured against the alternating-series enclosure; its width
    (about 4^-terms) is kept far below the convergent's own error (about 34^-n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    pair = apery_sequences(n)
    ratio = pair.convergent(n)
    lo, hi = zeta3_enclosure_fast(terms if terms is not None else 3 * n + 40)
    err = max(abs(ratio - lo), abs(ratio - hi))
    with localcontext() as ctx:
        ctx.prec = 20
        ctx.rounding = ROUND_CEILING
        bound = Decimal(err.numerator) / Decimal(err.denominator)
    return ratio, bound
