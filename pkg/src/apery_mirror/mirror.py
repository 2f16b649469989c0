"""Mirror map, prepotential correction and the Yukawa couplings.

Everything is in hatted units: with ``tau_hat = 2 pi i tau = L + h1/w0`` the
coordinate ``q = exp(tau_hat) = phi exp(h1/w0)``, ``d/dtau_hat = q d/dq`` and
the prepotential is ``tau_hat^3 + rho/w0``. The cubic contributes the constant
6 to the third derivative; no factor of pi survives.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .frobenius import CanonicalBasis, frobenius_basis
from .operators import ThetaOperator, apery_D, apery_D_tilde, apery_L, dwork_D, dwork_L
from .series import PowerSeries

__all__ = [
    "Family",
    "BEUKERS",
    "DWORK",
    "family",
    "MirrorData",
    "build_mirror",
    "rho_series",
    "yukawa_from_rho",
    "yukawa_D",
    "yukawa_variant",
    "yukawa_bp_normalized",
    "prepotential_correction",
    "beukers_tilde_h3",
]


@dataclass(frozen=True)
class Family:
    """A one-parameter family: its third-order operator, the fourth-order
    extension used for the prepotential, and the discriminant polynomial
    (the leading theta^3 coefficient of the third-order operator)."""

    name: str
    L: ThetaOperator
    D: ThetaOperator
    discriminant: tuple = field(default=())

    def __post_init__(self):
        if not self.discriminant:
            object.__setattr__(self, "discriminant", self.L.leading())

    def basis(self, order: int) -> CanonicalBasis:
        return frobenius_basis(self.D, 4, order, family=self.name)


BEUKERS = Family("beukers", apery_L(), apery_D())
DWORK = Family("dwork", dwork_L(), dwork_D())


def family(name: str) -> Family:
    try:
        return {"beukers": BEUKERS, "dwork": DWORK}[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class MirrorData:
    basis: CanonicalBasis
    q_of_phi: PowerSeries
    phi_of_q: PowerSeries
    rho: PowerSeries | None

    @property
    def order(self) -> int:
        return self.phi_of_q.order


def rho_series(basis: CanonicalBasis, h3: PowerSeries | None = None) -> PowerSeries:
    """h3 - h1^3 / w0^2; h3 defaults to the basis's own fourth solution."""
    w0, h1 = basis.series[0], basis.series[1]
    if h3 is None:
        h3 = basis.series[3]
    return h3 - h1 * h1 * h1 / (w0 * w0)


def build_mirror(basis: CanonicalBasis, order: int | None = None) -> MirrorData:
    if order is None:
        order = basis.order
    b = basis.truncate(order)
    w0, h1 = b.series[0], b.series[1]
    q_of_phi = (h1 / w0).exp().shift(1).truncate(order)
    phi_of_q = q_of_phi.revert().with_var("q")
    rho = rho_series(b) if b.rank >= 4 else None
    return MirrorData(b, q_of_phi, phi_of_q, rho)


def prepotential_correction(m: MirrorData, rho: PowerSeries | None = None) -> PowerSeries:
    """The non-cubic part rho/w0 of the hatted prepotential, as a q-series."""
    rho = m.rho if rho is None else rho
    g = rho / m.basis.series[0]
    return g.compose(m.phi_of_q)


def yukawa_from_rho(m: MirrorData, rho: PowerSeries) -> PowerSeries:
    g = prepotential_correction(m, rho)
    return 6 + g.theta().theta().theta()


def yukawa_D(m: MirrorData) -> PowerSeries:
    if m.rho is None:
        raise ValueError("the Yukawa coupling needs a rank-4 basis")
    return yukawa_from_rho(m, m.rho)


def yukawa_variant(m: MirrorData, h3_alt: PowerSeries) -> PowerSeries:
    if h3_alt[0] != 0:
        raise ValueError("replacement h3 must vanish at phi = 0")
    return yukawa_from_rho(m, rho_series(m.basis, h3_alt.truncate(min(h3_alt.order, m.basis.order))))


def yukawa_bp_normalized(m: MirrorData, discriminant=None) -> PowerSeries:
    """(q dphi/dq)^2 / (w0(phi)^2 phi^2 disc(phi)) with phi = phi(q).

    Known to one order less than the mirror data (the phi^2 division costs one).
    """
    if discriminant is None:
        discriminant = family(m.basis.family).discriminant
    phi = m.phi_of_q
    n = phi.order
    ratio = phi.theta() / phi
    w0q = m.basis.series[0].compose(phi)
    disc = PowerSeries(discriminant, max(len(discriminant) - 1, 0) + n, "phi").compose(phi)
    return ratio * ratio / (w0q * w0q * disc)


def beukers_tilde_h3(order: int) -> PowerSeries:
    return frobenius_basis(apery_D_tilde(), 4, order, family="beukers").series[3]
