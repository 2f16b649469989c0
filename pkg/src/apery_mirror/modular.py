"""q-expansions of the modular forms attached to Apery's numbers.

Eta quotients are expanded through the logarithm of the product,
``log prod (1 - q^(dn))^e = -e sum_k sigma(k/d) / (k/d) q^k``, followed by a
single series exponential. The hexagonal theta series is produced twice, from
the A2 lattice directly and from the product of Jacobi theta constants.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .series import PowerSeries

__all__ = [
    "EtaQuotientSpec",
    "T_SPEC",
    "F_SPEC",
    "eta_quotient",
    "eta_quotient_naive",
    "T_series",
    "F_series",
    "hexagonal_theta",
    "hexagonal_theta_product",
    "h_series",
]


@dataclass(frozen=True)
class EtaQuotientSpec:
    """``q^q_power * prod_d prod_n (1 - q^(d n))^e_d``."""

    factors: tuple
    q_power: int = 0


T_SPEC = EtaQuotientSpec(((1, 12), (6, 12), (2, -12), (3, -12)), q_power=1)
F_SPEC = EtaQuotientSpec(((2, 7), (3, 7), (1, -5), (6, -5)), q_power=0)


def _sigma(n: int) -> int:
    s = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            s += d
            if d * d != n:
                s += n // d
        d += 1
    return s


def eta_quotient(spec: EtaQuotientSpec, order: int) -> PowerSeries:
    if order < 1:
        raise ValueError("order must be at least 1")
    if spec.q_power < 0:
        raise ValueError("negative leading q-powers are not supported")
    n = order - spec.q_power
    if n < 0:
        return PowerSeries([0], order, "q")
    logc = [Fraction(0)] * (n + 1)
    for d, e in spec.factors:
        if not e:
            continue
        for k in range(d, n + 1, d):
            t = k // d
            logc[k] -= Fraction(e * _sigma(t), t)
    body = PowerSeries(logc, n, "q").exp()
    return body.shift(spec.q_power)


def eta_quotient_naive(spec: EtaQuotientSpec, order: int) -> PowerSeries:
    """Same expansion by multiplying out binomial series factor by factor."""
    n = order - spec.q_power
    acc = [Fraction(0)] * (n + 1)
    acc[0] = Fraction(1)
    for d, e in spec.factors:
        for m in range(d, n + 1, d):
            # (1 - q^m)^e, e possibly negative
            binom = [Fraction(0)] * (n + 1)
            c = Fraction(1)
            j = 0
            while j * m <= n:
                binom[j * m] = c * (-1) ** j
                c = c * (e - j) / (j + 1)
                j += 1
            acc = _naive_mul(acc, binom, n)
    return PowerSeries(acc, n, "q").shift(spec.q_power)


def _naive_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def T_series(order: int) -> PowerSeries:
    return eta_quotient(T_SPEC, order)


def F_series(order: int) -> PowerSeries:
    return eta_quotient(F_SPEC, order)


def hexagonal_theta(order: int) -> PowerSeries:
    """sum over (m, n) in Z^2 of q^(m^2 + mn + n^2), enumerated directly."""
    if order < 1:
        raise ValueError("order must be at least 1")
    # m^2 + mn + n^2 >= 3 max(|m|,|n|)^2 / 4
    bound = isqrt(4 * order // 3) + 1
    cs = [0] * (order + 1)
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            norm = m * m + m * n + n * n
            if norm <= order:
                cs[norm] += 1
    return PowerSeries(cs, order, "q")


def hexagonal_theta_product(order: int) -> PowerSeries:
    """theta3(q) theta3(q^3) + theta2(q) theta2(q^3).

    Nome convention: theta3(x) = sum x^(n^2), theta2(x) = sum x^((n+1/2)^2); the
    quarter powers of the two theta2 factors combine into a single q^1.
    """
    def theta3(step):
        cs = [0] * (order + 1)
        n = 0
        while step * n * n <= order:
            cs[step * n * n] += 1 if n == 0 else 2
            n += 1
        return PowerSeries(cs, order, "q")

    def theta2_reduced(step):
        # sum_{n in Z} x^(n^2 + n) at x = q^step; n and -1-n pair up
        cs = [0] * (order + 1)
        n = 0
        while step * (n * n + n) <= order:
            cs[step * (n * n + n)] += 2
            n += 1
        return PowerSeries(cs, order, "q")

    first = theta3(1) * theta3(3)
    second = (theta2_reduced(1) * theta2_reduced(3)).shift(1).truncate(order)
    return first + second


def h_series(order: int) -> PowerSeries:
    """2 Theta_hex(q^2)^2 - Theta_hex(q)^2."""
    theta = hexagonal_theta(order)
    sq = theta * theta
    sq2 = sq.substitute_power(2).truncate(order)
    return 2 * sq2 - sq
