"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` carries the coefficients of ``x^0 .. x^order``; everything
from ``x^(order+1)`` on is unknown. Every operation works out the largest order
its result is still exact to and never hands back more coefficients than that.

Products go through a common-denominator integer convolution, packed into a
single big-integer multiplication (Kronecker substitution) once the series are
long enough, so the cost is dominated by CPython's bigint multiply rather than
by per-coefficient ``Fraction`` normalisation.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "PowerSeries",
    "SeriesError",
    "ps_arith",
    "ps_compose",
    "ps_revert",
    "revert_lagrange",
    "ps_exp",
    "ps_log",
    "theta_derive",
]

_KRONECKER_MIN = 12
_INT_HORNER_MAX_DEN_BITS = 64


class SeriesError(ArithmeticError):
    """Raised when a series operation's preconditions are violated."""


# ---------------------------------------------------------------------------
# list-level kernels (lists of Fractions, fixed length)
# ---------------------------------------------------------------------------

def _to_ints(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in cs)) if cs else 1
    return [c.numerator * (den // c.denominator) for c in cs], den


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def _int_mul(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First n+1 coefficients of the product of two integer polynomials."""
    a = a[: n + 1]
    b = b[: n + 1]
    if not a or not b:
        return [0] * (n + 1)
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return _schoolbook(a, b, n)
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if not ma or not mb:
        return [0] * (n + 1)
    bits = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 1
    nbytes = bits // 8 + 1
    k = 8 * nbytes
    half = 1 << (k - 1)

    def pack(xs):
        raw = b"".join((x + half).to_bytes(nbytes, "little") for x in xs)
        return int.from_bytes(raw, "little") - _offset(len(xs), k, half)

    prod = pack(a) * pack(b)
    m = len(a) + len(b) - 1
    raw = (prod + _offset(m, k, half)).to_bytes(m * nbytes, "little")
    out = [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(min(m, n + 1))
    ]
    out.extend([0] * (n + 1 - len(out)))
    return out


def _offset(m: int, k: int, half: int) -> int:
    # half * (1 + 2^k + ... + 2^(k(m-1)))
    return half * (((1 << (k * m)) - 1) // ((1 << k) - 1))


def _mul(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    ia, da = _to_ints(a[: n + 1])
    ib, db = _to_ints(b[: n + 1])
    d = da * db
    return [Fraction(x, d) for x in _int_mul(ia, ib, n)]


def _inv(b: Sequence[Fraction], n: int) -> list[Fraction]:
    """Multiplicative inverse mod x^(n+1); b[0] must be nonzero."""
    g = [1 / Fraction(b[0])]
    m = 1
    while m < n + 1:
        m = min(2 * m, n + 1)
        e = _mul(b, g, m - 1)
        e = [-x for x in e]
        e[0] += 1
        corr = _mul(g, e, m - 1)
        g = [(g[i] if i < len(g) else 0) + corr[i] for i in range(m)]
    return g[: n + 1]


def _derivative(a: Sequence[Fraction]) -> list[Fraction]:
    return [k * a[k] for k in range(1, len(a))]


def _integral(a: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(0)] + [a[k] / (k + 1) for k in range(len(a))]


def _log(f: Sequence[Fraction], n: int) -> list[Fraction]:
    if n == 0:
        return [Fraction(0)]
    q = _mul(_derivative(f[: n + 1]), _inv(f, n - 1), n - 1)
    return _integral(q)[: n + 1]


def _exp(f: Sequence[Fraction], n: int) -> list[Fraction]:
    g = [Fraction(1)]
    m = 1
    while m < n + 1:
        m = min(2 * m, n + 1)
        lg = _log(g + [Fraction(0)] * (m - len(g)), m - 1)
        e = [(f[i] if i < len(f) else 0) - lg[i] for i in range(m)]
        e[0] += 1
        g = _mul(g, e, m - 1)
    return g[: n + 1]


def _compose(f: Sequence[Fraction], g: Sequence[Fraction], n: int) -> list[Fraction]:
    """f(g) mod x^(n+1) by Horner's rule; g[0] must be zero.

    With g = P/d and f = a/e over common denominators, the sum
    ``sum a_i d^(N-i) P^i`` is run entirely in integers and divided out once.
    """
    p, d = _to_ints(g[: n + 1])
    if d.bit_length() > _INT_HORNER_MAX_DEN_BITS:
        # d^N would swamp the coefficients; keep reducing as we go
        acc = [Fraction(0)] * (n + 1)
        for c in reversed(f[: n + 1]):
            acc = _mul(acc, g, n)
            acc[0] += c
        return acc
    a, e = _to_ints(f[: n + 1])
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    big_n = len(a) - 1
    acc = [0] * (n + 1)
    acc[0] = a[big_n]
    dpow = 1
    for i in range(big_n - 1, -1, -1):
        acc = _int_mul(acc, p, n)
        dpow *= d
        acc[0] += a[i] * dpow
    den = e * dpow
    return [Fraction(x, den) for x in acc]


# ---------------------------------------------------------------------------
# the value type
# ---------------------------------------------------------------------------

class PowerSeries:
    """Exact truncated power series ``sum a_n x^n + O(x^(order+1))``.

    ``var`` is a display label only ("phi", "q", ...); arithmetic never checks it.
    """

    __slots__ = ("_c", "_order", "var")

    def __init__(self, coeffs: Iterable = (), order: int | None = None, var: str = "x"):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise SeriesError("a series needs at least its constant term")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._c = tuple(cs)
        self._order = order
        self.var = var

    # -- construction helpers --------------------------------------------
    @classmethod
    def constant(cls, c, order: int, var: str = "x") -> "PowerSeries":
        return cls([c], order, var)

    @classmethod
    def gen(cls, order: int, var: str = "x") -> "PowerSeries":
        """The series ``x`` known to the given order."""
        return cls([0, 1], order, var)

    @classmethod
    def _raw(cls, cs: list, order: int, var: str) -> "PowerSeries":
        obj = cls.__new__(cls)
        obj._c = tuple(cs[: order + 1])
        obj._order = order
        obj.var = var
        return obj

    # -- basic access -----------------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._c[n]
        if n < 0 or n > self._order:
            raise IndexError(f"coefficient {n} is beyond the known order {self._order}")
        return self._c[n]

    def __len__(self) -> int:
        return self._order + 1

    def __iter__(self):
        return iter(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if zero to this order."""
        for k, c in enumerate(self._c):
            if c:
                return k
        return None

    def _val_bound(self) -> int:
        v = self.valuation()
        return self._order + 1 if v is None else v

    def truncate(self, order: int) -> "PowerSeries":
        if order > self._order:
            raise SeriesError(f"cannot extend a series known to order {self._order} to {order}")
        return PowerSeries._raw(list(self._c), order, self.var)

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def denominator_lcm(self) -> int:
        return lcm(*(c.denominator for c in self._c))

    def with_var(self, var: str) -> "PowerSeries":
        return PowerSeries._raw(list(self._c), self._order, var)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self._order == other._order and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self._c, self._order))

    def agrees_with(self, other: "PowerSeries", order: int | None = None) -> bool:
        """Coefficient-wise equality up to ``order`` (default: both known orders)."""
        n = min(self._order, other._order) if order is None else order
        if n > self._order or n > other._order:
            return False
        return self._c[: n + 1] == other._c[: n + 1]

    def __repr__(self):
        shown = []
        for k, c in enumerate(self._c[:8]):
            if c:
                mon = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
                shown.append(f"{c}{'*' + mon if mon else ''}")
        body = " + ".join(shown) or "0"
        more = " + ..." if self._order >= 8 else ""
        return f"PowerSeries({body}{more} + O({self.var}^{self._order + 1}))"

    # -- ring operations ------------------------------------------------------
    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries([other], self._order, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self._order, other._order)
        return PowerSeries._raw([self._c[i] + other._c[i] for i in range(n + 1)], n, self.var)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries._raw([-c for c in self._c], self._order, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries._raw([c * other for c in self._c], self._order, self.var)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self._order + other._val_bound(), other._order + self._val_bound())
        return PowerSeries._raw(_mul(self._c, other._c, n), n, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("series divided by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by a series that is zero to its known order")
        if self._val_bound() < v:
            raise SeriesError(
                f"exponent underflow: numerator has valuation {self.valuation()} "
                f"below the divisor's valuation {v}")
        n = min(self._order, other._order) - v
        if n < 0:
            raise SeriesError("quotient has no known coefficients")
        num = self._c[v:v + n + 1]
        quo = _mul(num, _inv(other._c[v:], n), n)
        return PowerSeries._raw(quo, n, self.var)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([other], self._order, self.var) / self
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise SeriesError("only nonnegative integer powers are supported")
        if e == 0:
            return PowerSeries([1], self._order, self.var)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "PowerSeries":
        if self._c[0] == 0:
            raise SeriesError("only series with a nonzero constant term are invertible")
        return PowerSeries._raw(_inv(self._c, self._order), self._order, self.var)

    # -- calculus ---------------------------------------------------------------
    def theta(self) -> "PowerSeries":
        """Apply ``x d/dx``: a_n -> n a_n."""
        return PowerSeries._raw([k * c for k, c in enumerate(self._c)], self._order, self.var)

    def derivative(self) -> "PowerSeries":
        if self._order == 0:
            return PowerSeries([0], 0, self.var)
        return PowerSeries._raw(_derivative(self._c), self._order - 1, self.var)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by x^k (k >= 0) or divide by x^-k when the low terms vanish."""
        if k >= 0:
            return PowerSeries._raw([Fraction(0)] * k + list(self._c), self._order + k, self.var)
        if self._val_bound() < -k:
            raise SeriesError(f"cannot divide by x^{-k}: valuation is {self.valuation()}")
        if self._order + k < 0:
            raise SeriesError("no coefficients left after the shift")
        return PowerSeries._raw(list(self._c[-k:]), self._order + k, self.var)

    def exp(self) -> "PowerSeries":
        if self._c[0] != 0:
            raise SeriesError("exp needs a zero constant term")
        return PowerSeries._raw(_exp(self._c, self._order), self._order, self.var)

    def log(self) -> "PowerSeries":
        if self._c[0] != 1:
            raise SeriesError("log needs constant term 1")
        return PowerSeries._raw(_log(self._c, self._order), self._order, self.var)

    # -- composition --------------------------------------------------------------
    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """``self(inner)``; inner must have zero constant term."""
        if inner._c[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        v = inner._val_bound()
        tail = PowerSeries._raw([Fraction(0)] + list(self._c[1:]), self._order, self.var)
        m = tail._val_bound()
        n = min(v * (self._order + 1) - 1, inner._order + v * (m - 1))
        return PowerSeries._raw(_compose(self._c, inner._c, n), n, inner.var)

    __call__ = compose

    def substitute_power(self, k: int) -> "PowerSeries":
        """``f(x^k)``, known to order k*(order+1) - 1."""
        if k < 1:
            raise SeriesError("power must be positive")
        n = k * (self._order + 1) - 1
        cs = [Fraction(0)] * (n + 1)
        for i, c in enumerate(self._c):
            cs[i * k] = c
        return PowerSeries._raw(cs, n, self.var)

    def revert(self) -> "PowerSeries":
        """Compositional inverse g with ``self(g) = x`` (Newton iteration)."""
        _check_revertible(self)
        n = self._order
        f = list(self._c)
        df = _derivative(f) + [Fraction(0)]
        g = [Fraction(0), Fraction(1)][: n + 1]
        g.extend([Fraction(0)] * (n + 1 - len(g)))
        m = 2  # g is exact mod x^m
        while m < n + 1:
            m = min(2 * m, n + 1)
            t = m - 1
            fg = _compose(f, g, t)
            fg[1] -= 1
            dfg = _compose(df, g, t)
            step = _mul(fg, _inv(dfg, t), t)
            g = [g[i] - step[i] for i in range(t + 1)] + g[t + 1:]
        return PowerSeries._raw(g[: n + 1], n, self.var)


def _check_revertible(f: PowerSeries) -> None:
    if f.order < 1:
        if f[0] != 0:
            raise SeriesError("reversion needs zero constant term")
        return
    if f[0] != 0 or f[1] != 1:
        raise SeriesError(
            f"reversion needs f = x + O(x^2); got constant {f[0]} and linear coefficient {f[1]}")


# ---------------------------------------------------------------------------
# functional interface
# ---------------------------------------------------------------------------

def ps_arith(a: PowerSeries, b: PowerSeries, kind: str) -> PowerSeries:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    return outer.compose(inner)


def ps_revert(f: PowerSeries) -> PowerSeries:
    return f.revert()


def revert_lagrange(f: PowerSeries) -> PowerSeries:
    """Reversion straight from Lagrange inversion, ``[x^n] g = [x^(n-1)] (x/f)^n / n``.

    Quadratic in the number of products; kept as an independent check on
    :meth:`PowerSeries.revert`.
    """
    _check_revertible(f)
    n = f.order
    if n == 0:
        return PowerSeries([0], 0, f.var)
    h = f.shift(-1).inverse()          # x/f, known to order n-1
    g = [Fraction(0)] * (n + 1)
    power = PowerSeries([1], n - 1, f.var)
    for k in range(1, n + 1):
        power = power * h
        g[k] = power[k - 1] / k
    return PowerSeries(g, n, f.var)


def ps_exp(f: PowerSeries) -> PowerSeries:
    return f.exp()


def ps_log(f: PowerSeries) -> PowerSeries:
    return f.log()


def theta_derive(f: PowerSeries) -> PowerSeries:
    return f.theta()
