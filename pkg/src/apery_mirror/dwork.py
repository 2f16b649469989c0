"""The Dwork (mirror quartic) family of K3 surfaces.

``W0`` and ``h1`` have closed forms, ``(4n)!/(n!)^4`` and
``4 (4n)!/(n!)^4 (H_4n - H_n)``; the digamma difference of the classical
formula reduces to harmonic numbers because the Euler constants cancel.
``h2`` and ``h3`` only come from the Frobenius engine.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .frobenius import CanonicalBasis, frobenius_basis
from .instanton import InstantonTable, detect_period, lambert_extract
from .mirror import DWORK, build_mirror, yukawa_D
from .operators import LogSeries
from .series import PowerSeries

__all__ = ["DworkBasis", "dwork_basis", "dwork_mirror_yukawa", "w0_closed_form", "h1_closed_form"]


class RouteMismatch(AssertionError):
    """Closed-form and Frobenius series disagree."""


def w0_closed_form(order: int) -> PowerSeries:
    return PowerSeries([factorial(4 * n) // factorial(n) ** 4 for n in range(order + 1)],
                       order, "phi")


def h1_closed_form(order: int) -> PowerSeries:
    cs = [Fraction(0)] * (order + 1)
    harmonic = [Fraction(0)]
    for m in range(1, 4 * order + 1):
        harmonic.append(harmonic[-1] + Fraction(1, m))
    for n in range(1, order + 1):
        cs[n] = 4 * (factorial(4 * n) // factorial(n) ** 4) * (harmonic[4 * n] - harmonic[n])
    return PowerSeries(cs, order, "phi")


@dataclass(frozen=True)
class DworkBasis:
    W0: PowerSeries
    h1_dw: PowerSeries
    h2_dw: PowerSeries
    h3_dw: PowerSeries
    canonical: CanonicalBasis

    @property
    def solutions(self) -> tuple[LogSeries, ...]:
        return self.canonical.solutions


def dwork_basis(order: int) -> DworkBasis:
    if order < 1:
        raise ValueError("order must be at least 1")
    frob = frobenius_basis(DWORK.D, 4, order, family="dwork")
    w0, h1 = w0_closed_form(order), h1_closed_form(order)
    if frob.series[0] != w0:
        raise RouteMismatch("W0 from the Frobenius engine disagrees with (4n)!/(n!)^4")
    if frob.series[1] != h1:
        raise RouteMismatch("h1 from the Frobenius engine disagrees with the harmonic-number form")
    return DworkBasis(w0, h1, frob.series[2], frob.series[3], frob)


def dwork_mirror_yukawa(order: int) -> tuple[PowerSeries, InstantonTable, PowerSeries]:
    """(Yukawa q-series, instanton table with detected period, phi(q))."""
    if order < 2:
        raise ValueError("order must be at least 2")
    b = dwork_basis(order)
    m = build_mirror(b.canonical)
    y = yukawa_D(m)
    table = lambert_extract(y)
    return y, InstantonTable(table.c0, table.N, table.integral_flags, detect_period(table)), m.phi_of_q
