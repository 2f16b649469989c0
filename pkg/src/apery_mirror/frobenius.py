"""Canonical solutions at a maximally unipotent point.

Two independent routes produce the same power series ``h_1, h_2, h_3``:

* :func:`run_recursion` on the explicit three-term recursions for the
  coefficients (Apery's recursion and the inhomogeneous ones for the log
  partners), and
* :func:`frobenius_basis`, which solves ``O(phi^eps sum a_k(eps) phi^k) = 0``
  in the ring ``Q[eps]/(eps^r)`` and reads off ``h_j = j! [eps^j] a(eps)``.

All solutions are stored in hatted form, i.e. multiplied by ``(2 pi i)^j`` so
that every coefficient is rational.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from . import _poly
from .operators import LogSeries, ThetaOperator
from .series import PowerSeries

__all__ = [
    "HolonomicRecursion",
    "CanonicalBasis",
    "NotMaximallyUnipotent",
    "run_recursion",
    "frobenius_basis",
    "basis_from_series",
    "monodromy_shift",
    "apery_recursion",
    "c1_recursion",
    "c2_recursion",
    "c3_recursion",
    "recursion_basis",
]


class NotMaximallyUnipotent(ValueError):
    """The indicial polynomial at phi = 0 is not a pure power of the exponent."""


@dataclass(frozen=True)
class HolonomicRecursion:
    """``sum_i P_i(n) x_(n+1-i) + forcing(n) = 0``.

    ``coeffs[i]`` is the polynomial (low degree first) multiplying ``x_(n+1-i)``;
    ``initial`` holds ``x_start, x_start+1, ...`` and indices below ``start`` are
    zero.
    """

    coeffs: tuple
    initial: tuple
    start: int = 0
    forcing: Callable[[int], Fraction] | None = None
    name: str = ""

    @property
    def band(self) -> int:
        return len(self.coeffs)


def run_recursion(rec: HolonomicRecursion, count: int) -> list[Fraction]:
    """Values ``x_start .. x_(start+count-1)``, exact; integrality is not assumed."""
    m = len(rec.initial)
    if count < m:
        raise ValueError(f"count {count} is smaller than the {m} initial values")
    xs = [Fraction(v) for v in rec.initial]
    polys = [_poly.poly(c) for c in rec.coeffs]

    def x(i):
        j = i - rec.start
        return xs[j] if j >= 0 else 0

    while len(xs) < count:
        n = rec.start + len(xs) - 1
        lead = _poly.evaluate(polys[0], n)
        if lead == 0:
            raise ZeroDivisionError(f"leading coefficient of {rec.name or 'recursion'} vanishes at n={n}")
        acc = rec.forcing(n) if rec.forcing else Fraction(0)
        for i in range(1, len(polys)):
            if polys[i]:
                acc += _poly.evaluate(polys[i], n) * x(n + 1 - i)
        xs.append(-acc / lead)
    return xs


# -- the recursions written out for Apery's operators ------------------------

_APERY_MID = (5, 27, 51, 34)


def apery_recursion(initial=(1, 5)) -> HolonomicRecursion:
    """(n+1)^3 x_(n+1) - (34n^3+51n^2+27n+5) x_n + n^3 x_(n-1) = 0."""
    return HolonomicRecursion(
        coeffs=((1, 3, 3, 1), tuple(-c for c in _APERY_MID), (0, 0, 0, 1)),
        initial=tuple(initial), start=0, name="apery")


def _get(seq, i):
    return seq[i] if 0 <= i < len(seq) else 0


def c1_recursion(A: Sequence, initial=(12, 210)) -> HolonomicRecursion:
    def forcing(n):
        return (3 * (n + 1) ** 2 * _get(A, n + 1) - 3 * (34 * n * n + 34 * n + 9) * _get(A, n)
                + 3 * n * n * _get(A, n - 1))
    rec = apery_recursion()
    return HolonomicRecursion(rec.coeffs, tuple(initial), 1, forcing, "c1")


def c2_recursion(A: Sequence, c1: Sequence, initial=(0, 144)) -> HolonomicRecursion:
    """``c1`` is indexed from 0 (with c1[0] = 0)."""
    def forcing(n):
        return (6 * (n + 1) ** 2 * _get(c1, n + 1) - 6 * (34 * n * n + 34 * n + 9) * _get(c1, n)
                + 6 * n * n * _get(c1, n - 1)
                + 6 * (n + 1) * _get(A, n + 1) - 102 * (2 * n + 1) * _get(A, n)
                + 6 * n * _get(A, n - 1))
    rec = apery_recursion()
    return HolonomicRecursion(rec.coeffs, tuple(initial), 1, forcing, "c2")


def c3_recursion(A: Sequence, c1: Sequence, c2: Sequence,
                 initial=(-42, Fraction(-3033, 4))) -> HolonomicRecursion:
    """Coefficients of h_3 for the fourth-order operator; c1, c2 indexed from 0."""
    def forcing(n):
        return (12 * (n + 1) ** 3 * _get(c2, n + 1)
                - 3 * (136 * n ** 3 + 255 * n * n + 156 * n + 32) * _get(c2, n)
                + 3 * n * n * (4 * n + 3) * _get(c2, n - 1)
                + 36 * (n + 1) ** 2 * _get(c1, n + 1)
                - 18 * (68 * n * n + 85 * n + 26) * _get(c1, n)
                + 18 * n * (2 * n + 1) * _get(c1, n - 1)
                + 24 * (n + 1) * _get(A, n + 1) - 102 * (8 * n + 5) * _get(A, n)
                + 6 * (4 * n + 1) * _get(A, n - 1))
    return HolonomicRecursion(
        coeffs=((1, 4, 6, 4, 1), (-5, -32, -78, -85, -34), (0, 0, 0, 1, 1)),
        initial=tuple(initial), start=1, forcing=forcing, name="c3")


# -- canonical bases -----------------------------------------------------------

@dataclass(frozen=True)
class CanonicalBasis:
    """Hatted canonical solutions ``(2 pi i)^j varpi_j`` and their power-series parts.

    ``series[0]`` is the holomorphic solution, ``series[j]`` (j >= 1) is h_j, so
    that ``solutions[j] = sum_i C(j, i) series[j - i] L^i``.
    """

    series: tuple
    family: str = "custom"
    solutions: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "solutions", tuple(
            _assemble(self.series, j) for j in range(len(self.series))))

    @property
    def rank(self) -> int:
        return len(self.series)

    @property
    def order(self) -> int:
        return min(s.order for s in self.series)

    @property
    def w0(self) -> PowerSeries:
        return self.series[0]

    def h(self, j: int) -> PowerSeries:
        return self.series[j]

    def truncate(self, order: int) -> "CanonicalBasis":
        return CanonicalBasis(tuple(s.truncate(order) for s in self.series), self.family)


def _assemble(series: Sequence[PowerSeries], j: int) -> LogSeries:
    return LogSeries([series[j - i] * comb(j, i) for i in range(j + 1)])


def basis_from_series(series: Sequence[PowerSeries], family: str = "custom") -> CanonicalBasis:
    s = tuple(series)
    if s[0][0] != 1:
        raise ValueError("holomorphic solution must start with 1")
    for j, h in enumerate(s[1:], 1):
        if h[0] != 0:
            raise ValueError(f"h_{j} must vanish at phi = 0")
    return CanonicalBasis(s, family)


def _trunc_mul(a, b, r):
    out = [Fraction(0)] * r
    for i, x in enumerate(a):
        if x:
            for j in range(r - i):
                out[i + j] += x * b[j]
    return out


def _trunc_inv(a, r):
    out = [Fraction(0)] * r
    out[0] = 1 / a[0]
    for k in range(1, r):
        s = sum(a[i] * out[k - i] for i in range(1, k + 1) if i < len(a))
        out[k] = -s / a[0]
    return out


def _taylor(p, s, r):
    shifted = _poly.shift(p, s)
    return [shifted[i] if i < len(shifted) else Fraction(0) for i in range(r)]


def _check_mum(op: ThetaOperator, rank: int) -> None:
    ind = op.indicial()
    pure = len(ind) == rank + 1 and all(c == 0 for c in ind[:rank])
    if not pure:
        if not ind:
            raise NotMaximallyUnipotent("indicial polynomial vanishes identically")
        roots = _poly.rational_roots(ind)
        mult0 = _poly.valuation(ind) or 0
        raise NotMaximallyUnipotent(
            f"indicial polynomial {_poly.to_str(ind, 'eps')} is not eps^{rank}; "
            f"rational roots {[str(x) for x in roots]}, multiplicity of 0 is {mult0}")


def frobenius_basis(op: ThetaOperator, rank: int, order: int,
                    family: str = "custom", var: str = "phi") -> CanonicalBasis:
    """Frobenius solutions at phi = 0 in the truncated eps-ring, to ``order``."""
    _check_mum(op, rank)
    rows = op.theta_polys
    r = rank
    a = [[Fraction(1)] + [Fraction(0)] * (r - 1)]
    for k in range(1, order + 1):
        acc = [Fraction(0)] * r
        for j in range(1, min(k, len(rows) - 1) + 1):
            if rows[j]:
                t = _trunc_mul(_taylor(rows[j], k - j, r), a[k - j], r)
                acc = [x + y for x, y in zip(acc, t)]
        inv = _trunc_inv(_taylor(rows[0], k, r), r)
        a.append([-x for x in _trunc_mul(inv, acc, r)])
    series = tuple(
        PowerSeries([factorial(j) * a[k][j] for k in range(order + 1)], order, var)
        for j in range(r))
    return CanonicalBasis(series, family)


def recursion_basis(order: int) -> CanonicalBasis:
    """The rank-4 Apery basis from the explicit coefficient recursions."""
    A = run_recursion(apery_recursion(), order + 2)
    c1 = [Fraction(0)] + run_recursion(c1_recursion(A), order + 1)
    c2 = [Fraction(0)] + run_recursion(c2_recursion(A, c1), order + 1)
    c3 = [Fraction(0)] + run_recursion(c3_recursion(A, c1, c2), order)
    series = tuple(PowerSeries(s[: order + 1], order, "phi") for s in (A, c1, c2, c3))
    return CanonicalBasis(series, "beukers")


def monodromy_shift(s: LogSeries) -> LogSeries:
    """Continue once around phi = 0: L -> L + 1 in hatted units."""
    return s.shift_log(1)
