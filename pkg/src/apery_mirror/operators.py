"""Differential operators in theta = phi d/dphi and the log-series they act on.

An operator is stored two ways at once: as the polynomial coefficients
``p_k(phi)`` of ``theta^k`` (coefficients on the left), and as the
theta-polynomials ``P_j(theta)`` multiplying ``phi^j``. The second form makes
composition a one-liner, since ``theta . phi^j = phi^j (theta + j)``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from . import _poly
from .series import PowerSeries, SeriesError

__all__ = [
    "LogSeries",
    "ThetaOperator",
    "MAX_LOG_DEGREE",
    "op_apply",
    "op_mul",
    "op_pullback_inversion",
    "op_sym_square",
    "THETA",
    "PHI",
    "apery_L",
    "apery_D_phi",
    "apery_D",
    "apery_D_tilde",
    "apery_root",
    "dwork_L",
    "dwork_D",
]

MAX_LOG_DEGREE = 3


class LogSeries:
    """``f_0 + f_1 L + f_2 L^2 + f_3 L^3`` with L standing for log(phi).

    All parts are cut to a common order, the order of the whole expression.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[PowerSeries]):
        parts = list(parts)
        if not parts:
            raise SeriesError("a log-series needs at least one part")
        n = min(p.order for p in parts)
        parts = [p if p.order == n else p.truncate(n) for p in parts]
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        if len(parts) - 1 > MAX_LOG_DEGREE:
            raise SeriesError(
                f"log-degree {len(parts) - 1} exceeds the supported maximum {MAX_LOG_DEGREE}")
        self.parts = tuple(parts)

    @classmethod
    def of(cls, f: PowerSeries) -> "LogSeries":
        return cls([f])

    @classmethod
    def log(cls, order: int, var: str = "phi") -> "LogSeries":
        """The bare symbol L."""
        return cls([PowerSeries([0], order, var), PowerSeries([1], order, var)])

    @property
    def order(self) -> int:
        return min(p.order for p in self.parts)

    @property
    def degree(self) -> int:
        return len(self.parts) - 1

    def part(self, j: int) -> PowerSeries:
        if j < len(self.parts):
            return self.parts[j]
        return PowerSeries([0], self.order, self.parts[0].var)

    def truncate(self, order: int) -> "LogSeries":
        return LogSeries([p.truncate(order) for p in self.parts])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        n = max(len(self.parts), len(other.parts))
        return all(self.part(j) == other.part(j) for j in range(n))

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "LogSeries(" + ", ".join(repr(p) for p in self.parts) + ")"

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            other = LogSeries.of(other)
        if not isinstance(other, LogSeries):
            return NotImplemented
        n = max(len(self.parts), len(other.parts))
        return LogSeries([self.part(j) + other.part(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return LogSeries([-p for p in self.parts])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PowerSeries)):
            return LogSeries([p * other for p in self.parts])
        if not isinstance(other, LogSeries):
            return NotImplemented
        deg = self.degree + other.degree
        if deg > MAX_LOG_DEGREE:
            raise SeriesError(f"product has log-degree {deg} > {MAX_LOG_DEGREE}")
        out = [None] * (deg + 1)
        for i, a in enumerate(self.parts):
            for j, b in enumerate(other.parts):
                t = a * b
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return LogSeries(out)

    __rmul__ = __mul__

    def theta(self) -> "LogSeries":
        """theta(f L^j) = (theta f) L^j + j f L^(j-1)."""
        out = []
        for j, f in enumerate(self.parts):
            term = f.theta()
            if j + 1 < len(self.parts):
                term = term + (j + 1) * self.parts[j + 1]
            out.append(term)
        return LogSeries(out)

    def shift_log(self, c=1) -> "LogSeries":
        """Substitute L -> L + c (analytic continuation around phi = 0, hatted units)."""
        n = len(self.parts)
        out = []
        for i in range(n):
            acc = self.parts[i]
            for j in range(i + 1, n):
                acc = acc + self.parts[j] * (comb(j, i) * Fraction(c) ** (j - i))
            out.append(acc)
        return LogSeries(out)


def _theta_polys_from_coeffs(coeffs: Sequence[Sequence]) -> list[tuple]:
    height = max((len(p) for p in coeffs), default=0)
    return [_poly.poly(p[j] if j < len(p) else 0 for p in coeffs) for j in range(height)]


class ThetaOperator:
    """``sum_k p_k(phi) theta^k`` with rational polynomial coefficients."""

    __slots__ = ("_rows",)

    def __init__(self, coeffs: Iterable[Sequence] = ()):
        polys = [_poly.poly(p) for p in coeffs]
        self._rows = _trim_rows(_theta_polys_from_coeffs(polys))

    @classmethod
    def from_theta_polys(cls, rows: Sequence[Sequence]) -> "ThetaOperator":
        """Build ``sum_j phi^j P_j(theta)`` from the list of P_j."""
        op = cls.__new__(cls)
        op._rows = _trim_rows([_poly.poly(r) for r in rows])
        return op

    # -- views ------------------------------------------------------------------
    @property
    def theta_polys(self) -> tuple:
        return self._rows

    @property
    def rank(self) -> int:
        return max((len(r) for r in self._rows), default=0) - 1

    @property
    def coeffs(self) -> tuple:
        """Polynomials p_0(phi) .. p_rank(phi)."""
        r = self.rank
        return tuple(
            _poly.poly(row[k] if k < len(row) else 0 for row in self._rows) for k in range(r + 1))

    def leading(self) -> tuple:
        return self.coeffs[-1]

    def indicial(self) -> tuple:
        """Indicial polynomial at phi = 0, in the exponent variable."""
        return self._rows[0] if self._rows else ()

    def phi_degree(self) -> int:
        return len(self._rows) - 1

    # -- algebra ------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ThetaOperator):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __add__(self, other):
        if not isinstance(other, ThetaOperator):
            return NotImplemented
        n = max(len(self._rows), len(other._rows))
        get = lambda rows, j: rows[j] if j < len(rows) else ()
        return ThetaOperator.from_theta_polys(
            [_poly.add(get(self._rows, j), get(other._rows, j)) for j in range(n)])

    def __neg__(self):
        return ThetaOperator.from_theta_polys([_poly.scale(r, -1) for r in self._rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ThetaOperator):
            return op_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return ThetaOperator.from_theta_polys([_poly.scale(r, other) for r in self._rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __call__(self, s):
        return op_apply(self, s)

    def strip_phi_power(self) -> tuple["ThetaOperator", int]:
        """Remove the largest common factor phi^m on the left; return (op, m)."""
        m = 0
        while m < len(self._rows) and not self._rows[m]:
            m += 1
        return ThetaOperator.from_theta_polys(self._rows[m:]), m

    def monic_normal_form(self) -> "ThetaOperator":
        """Strip a common phi-power and scale so the indicial leading coefficient is 1."""
        op, _ = self.strip_phi_power()
        if not op._rows:
            return op
        lead = op._rows[0][-1]
        return op * (1 / lead)

    def __repr__(self):
        parts = []
        for k, p in enumerate(self.coeffs):
            if p:
                parts.append(f"({_poly.to_str(p, 'phi')})*theta^{k}")
        return "ThetaOperator(" + " + ".join(parts) + ")"


def _trim_rows(rows: list) -> tuple:
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def op_apply(op: ThetaOperator, s) -> LogSeries:
    """Apply an operator to a power series or log-series.

    Each ``phi^j`` factor raises the known order by j, so the result is known to
    the input order (the lowest-order constraint comes from j = 0).
    """
    if isinstance(s, PowerSeries):
        s = LogSeries.of(s)
    coeffs = op.coeffs
    var = s.parts[0].var
    total = None
    cur = s
    for k, p in enumerate(coeffs):
        if k:
            cur = cur.theta()
        if not p:
            continue
        pser = PowerSeries(p, max(len(p) - 1, 0) + s.order, var)
        term = cur * pser
        total = term if total is None else total + term
    if total is None:
        return LogSeries([PowerSeries([0], s.order, var)])
    return total.truncate(min(total.order, s.order))


def op_mul(a: ThetaOperator, b: ThetaOperator) -> ThetaOperator:
    """Composition a . b, using theta^k phi^j = phi^j (theta + j)^k."""
    rows: dict[int, tuple] = {}
    for i, pa in enumerate(a.theta_polys):
        if not pa:
            continue
        for j, pb in enumerate(b.theta_polys):
            if not pb:
                continue
            term = _poly.mul(_poly.shift(pa, j), pb)
            rows[i + j] = _poly.add(rows.get(i + j, ()), term)
    n = max(rows, default=-1) + 1
    return ThetaOperator.from_theta_polys([rows.get(j, ()) for j in range(n)])


def op_pullback_inversion(op: ThetaOperator) -> tuple[ThetaOperator, int]:
    """Rewrite op in the coordinate psi = 1/phi.

    theta_phi = -theta_psi and phi^j = psi^(-j); the result is left-multiplied
    by psi^m with m the smallest exponent that clears every negative power.
    Returns (operator in psi, m).
    """
    rows = op.theta_polys
    m = len(rows) - 1
    new = [()] * (m + 1)
    for j, pj in enumerate(rows):
        new[m - j] = _poly.negate_variable(pj)
    return ThetaOperator.from_theta_polys(new), m


def op_sym_square(op: ThetaOperator) -> ThetaOperator:
    """Third-order operator killing every product of two solutions of ``op``.

    Writes ``u = y^2`` and its theta-derivatives in the basis
    ``y^2, y y', y'^2`` (the ``N_k`` below carry a denominator ``a^k``, with
    ``a`` the leading coefficient), then reads off the linear relation from the
    signed 3x3 minors.
    """
    if op.rank != 2:
        raise ValueError(f"symmetric square needs a rank-2 operator, got rank {op.rank}")
    c, b, a = op.coeffs
    da = _poly.theta(a)
    M = _poly.mul
    A = _poly.add
    S = _poly.scale
    vecs = [((Fraction(1),), (), ())]
    for k in range(3):
        al, be, ga = vecs[-1]
        vecs.append((
            _poly.sub(_poly.sub(M(a, _poly.theta(al)), M(c, be)), S(M(da, al), k)),
            _poly.sub(
                A(A(S(M(a, al), 2), M(a, _poly.theta(be))), S(A(M(b, be), S(M(c, ga), 2)), -1)),
                S(M(da, be), k)),
            _poly.sub(_poly.sub(A(M(a, be), M(a, _poly.theta(ga))), S(M(b, ga), 2)),
                      S(M(da, ga), k)),
        ))
    cols = []
    for k, v in enumerate(vecs):
        apow = (Fraction(1),)
        for _ in range(3 - k):
            apow = M(apow, a)
        cols.append(tuple(M(apow, comp) for comp in v))
    coeffs = []
    for k in range(4):
        keep = [cols[i] for i in range(4) if i != k]
        det = _det3([[keep[c_][r] for c_ in range(3)] for r in range(3)])
        coeffs.append(_poly.scale(det, -1 if k % 2 else 1))
    g = ()
    for p in coeffs:
        g = _poly.gcd(g, p) if g else _poly.gcd(p, p)
    coeffs = [_poly.divmod_poly(p, g)[0] for p in coeffs]
    content = _poly.integer_content(coeffs)
    coeffs = [_poly.scale(p, 1 / content) for p in coeffs]
    if coeffs[-1] and coeffs[-1][0] < 0:
        coeffs = [_poly.scale(p, -1) for p in coeffs]
    return ThetaOperator(coeffs)


def _det3(m) -> tuple:
    M = _poly.mul
    terms = [
        M(m[0][0], _poly.sub(M(m[1][1], m[2][2]), M(m[1][2], m[2][1]))),
        _poly.scale(M(m[0][1], _poly.sub(M(m[1][0], m[2][2]), M(m[1][2], m[2][0]))), -1),
        M(m[0][2], _poly.sub(M(m[1][0], m[2][1]), M(m[1][1], m[2][0]))),
    ]
    out = ()
    for t in terms:
        out = _poly.add(out, t)
    return out


# ---------------------------------------------------------------------------
# the operators of the two K3 families
# ---------------------------------------------------------------------------

THETA = ThetaOperator([[0], [1]])
PHI = ThetaOperator([[0, 1]])


def apery_L() -> ThetaOperator:
    """theta^3 - phi(34 theta^3 + 51 theta^2 + 27 theta + 5) + phi^2 (theta + 1)^3."""
    return ThetaOperator.from_theta_polys([
        (0, 0, 0, 1),
        (-5, -27, -51, -34),
        (1, 3, 3, 1),
    ])


def apery_D_phi() -> ThetaOperator:
    """The fourth-order operator killing sum B_n phi^(n+1), in the inverted coordinate."""
    return ThetaOperator([
        [2, -5],
        [-7, 32],
        [9, -78],
        [-5, 85],
        [1, -34, 1],
    ])


def apery_D() -> ThetaOperator:
    """apery_D_phi pulled back to the maximally unipotent point (equals theta . L)."""
    return op_pullback_inversion(apery_D_phi())[0]


def apery_D_tilde() -> ThetaOperator:
    """The rival fourth-order operator D + phi L."""
    return apery_D() + op_mul(PHI, apery_L())


def apery_root() -> ThetaOperator:
    """(1 - 34 phi + phi^2) theta^2 - phi(17 - phi) theta - phi(10 - phi)/4."""
    return ThetaOperator([
        [0, Fraction(-10, 4), Fraction(1, 4)],
        [0, -17, 1],
        [1, -34, 1],
    ])


def dwork_L() -> ThetaOperator:
    """theta^3 - 4 phi (4 theta + 1)(4 theta + 2)(4 theta + 3)."""
    cubic = _poly.mul(_poly.mul((1, 4), (2, 4)), (3, 4))
    return ThetaOperator.from_theta_polys([(0, 0, 0, 1), _poly.scale(cubic, -4)])


def dwork_D() -> ThetaOperator:
    return op_mul(THETA, dwork_L())
