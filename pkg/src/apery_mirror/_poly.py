"""Dense univariate polynomials over Q, stored low-degree first as tuples of Fractions.

Small helper layer shared by the operator and recursion code. Polynomials are
always trimmed (no trailing zeros); the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Sequence

Poly = tuple


def poly(coeffs: Iterable) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def scale(p: Poly, c) -> Poly:
    return poly(c * a for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def evaluate(p: Poly, x):
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def shift(p: Poly, s) -> Poly:
    """Return p(x + s)."""
    out = [Fraction(0)] * len(p)
    for k, a in enumerate(p):
        if a:
            for i in range(k + 1):
                out[i] += a * comb(k, i) * Fraction(s) ** (k - i)
    return poly(out)


def negate_variable(p: Poly) -> Poly:
    """Return p(-x)."""
    return poly(a if k % 2 == 0 else -a for k, a in enumerate(p))


def theta(p: Poly) -> Poly:
    """Apply x d/dx."""
    return poly(k * a for k, a in enumerate(p))


def monomial(k: int, c=1) -> Poly:
    return poly([0] * k + [c])


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        c = r[k + len(q) - 1] / lead
        quot[k] = c
        if c:
            for i, b in enumerate(q):
                r[k + i] -= c * b
    return poly(quot), poly(r[: len(q) - 1])


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    while q:
        p, q = q, divmod_poly(p, q)[1]
    if not p:
        return ()
    return scale(p, 1 / p[-1])


def valuation(p: Poly) -> int | None:
    for k, a in enumerate(p):
        if a:
            return k
    return None


def integer_content(polys: Sequence[Poly]) -> Fraction:
    """Positive rational c such that every p/c has coprime integer coefficients."""
    from math import gcd as igcd

    coeffs = [a for p in polys for a in p if a]
    if not coeffs:
        return Fraction(1)
    den = lcm(*(a.denominator for a in coeffs))
    g = 0
    for a in coeffs:
        g = igcd(g, int(a * den))
    return Fraction(g, den)


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots of p, by the rational root theorem."""
    p = poly(p)
    if not p:
        raise ValueError("zero polynomial has every root")
    roots = []
    v = valuation(p)
    if v:
        roots.append(Fraction(0))
        p = p[v:]
    if len(p) <= 1:
        return roots
    c = integer_content([p])
    ints = [int(a / c) for a in p]
    lead, const = abs(ints[-1]), abs(ints[0])
    cands = set()
    for a in _divisors(const):
        for b in _divisors(lead):
            cands.add(Fraction(a, b))
            cands.add(Fraction(-a, b))
    roots.extend(sorted(r for r in cands if evaluate(p, r) == 0))
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return out


def to_str(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for k, a in enumerate(p):
        if not a:
            continue
        mon = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mon and a == 1:
            terms.append(mon)
        elif mon and a == -1:
            terms.append("-" + mon)
        else:
            terms.append(f"{a}{'*' + mon if mon else ''}")
    return " + ".join(terms).replace("+ -", "- ")
