"""Kernel tests for PowerSeries: ring laws, order bookkeeping, exp/log, composition, reversion."""
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from apery_mirror.series import (
    PowerSeries,
    SeriesError,
    _int_mul,
    _schoolbook,
    ps_arith,
    ps_compose,
    ps_exp,
    ps_log,
    ps_revert,
    revert_lagrange,
    theta_derive,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def series(draw, min_order=0, max_order=12, c0=None, c1=None):
    n = draw(st.integers(min_order, max_order))
    cs = draw(st.lists(small, min_size=n + 1, max_size=n + 1))
    if c0 is not None:
        cs[0] = Fraction(c0)
    if c1 is not None and n >= 1:
        cs[1] = Fraction(c1)
    return PowerSeries(cs, n)


def naive_mul(a, b, n):
    return [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]


def sym(s: PowerSeries, x):
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(s.coeffs))


def from_sym(expr, x, n):
    poly = sympy.Poly(sympy.series(expr, x, 0, n + 1).removeO(), x)
    cs = [Fraction(0)] * (n + 1)
    for (k,), c in poly.terms():
        cs[k] = Fraction(int(c.p), int(c.q))
    return cs


# -- construction and access ---------------------------------------------------

def test_order_is_inclusive():
    s = PowerSeries([1, 2, 3])
    assert s.order == 2 and len(s) == 3
    assert PowerSeries([1], 4).coeffs == (1, 0, 0, 0, 0)
    with pytest.raises(IndexError):
        s[3]


def test_negative_order_rejected():
    with pytest.raises(SeriesError):
        PowerSeries([], -1)


def test_valuation_and_zero():
    assert PowerSeries([0, 0, 3]).valuation() == 2
    assert PowerSeries([0, 0]).valuation() is None
    assert PowerSeries([0, 0]).is_zero()


def test_equality_needs_same_order():
    assert PowerSeries([1, 2], 1) != PowerSeries([1, 2], 2)
    assert PowerSeries([1, 2], 2).agrees_with(PowerSeries([1, 2, 5]), 1)


# -- ring laws ---------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    n = min(a.order, b.order, c.order)
    assert ((a * b) * c).truncate(n) == (a * (b * c)).truncate(n)
    assert (a * (b + c)).truncate(n) == (a * b + a * c).truncate(n)
    assert (a - a).is_zero()


@settings(max_examples=60, deadline=None)
@given(series(min_order=1))
def test_inverse(a):
    if a[0] == 0:
        a = a + 1 - a[0]
    one = a * a.inverse()
    assert one == PowerSeries([1], a.order)
    assert (1 / a) == a.inverse()


def test_kronecker_matches_schoolbook():
    import random

    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(0, 60)
        a = [rng.randint(-10 ** 30, 10 ** 30) for _ in range(n + 1)]
        b = [rng.randint(-10 ** 30, 10 ** 30) for _ in range(n + 1)]
        assert _int_mul(a, b, n) == _schoolbook(a, b, n)


def test_product_matches_naive_convolution():
    a = PowerSeries([Fraction(i + 1, i + 2) for i in range(30)])
    b = PowerSeries([Fraction((-1) ** i, i * i + 1) for i in range(30)])
    assert list((a * b).coeffs) == naive_mul(a.coeffs, b.coeffs, 29)


def test_product_order_uses_valuations():
    a = PowerSeries([0, 0, 1], 5)   # x^2 + O(x^6)
    b = PowerSeries([0, 1], 3)      # x + O(x^4)
    assert (a * b).order == min(5 + 1, 3 + 2)


def test_division_order_and_underflow():
    a = PowerSeries([0, 0, 2, 4], 6)
    b = PowerSeries([0, 1, 1], 5)
    q = a / b
    assert q.order == 5 - 1
    assert (q * b).truncate(4) == a.truncate(4)
    with pytest.raises(SeriesError):
        PowerSeries([1, 1]) / PowerSeries([0, 1])
    with pytest.raises(ZeroDivisionError):
        PowerSeries([1, 1]) / PowerSeries([0, 0])


def test_pow():
    s = PowerSeries([1, 1], 6)
    assert s ** 5 == PowerSeries([1, 5, 10, 10, 5, 1, 0])
    assert s ** 0 == PowerSeries([1], 6)
    with pytest.raises(SeriesError):
        s ** -1


def test_shift():
    s = PowerSeries([0, 0, 1, 2], 4)
    assert s.shift(-2) == PowerSeries([1, 2, 0])
    assert s.shift(1) == PowerSeries([0, 0, 0, 1, 2, 0])
    with pytest.raises(SeriesError):
        s.shift(-3)


def test_theta_and_derivative():
    s = PowerSeries([5, 1, 2, 3])
    assert s.theta() == PowerSeries([0, 1, 4, 9])
    assert theta_derive(s) == s.theta()
    assert s.derivative() == PowerSeries([1, 4, 9])


# -- exp / log -------------------------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(series(min_order=1, c0=0))
def test_exp_log_inverse(f):
    assert f.exp().log() == f
    g = f + 1
    assert g.log().exp() == g


def test_exp_log_against_sympy():
    x = sympy.Symbol("x")
    f = PowerSeries([0, Fraction(1, 2), -3, Fraction(5, 7), 2, 0, 1, Fraction(-1, 3)])
    assert list(ps_exp(f).coeffs) == from_sym(sympy.exp(sym(f, x)), x, f.order)
    g = f + 1
    assert list(ps_log(g).coeffs) == from_sym(sympy.log(sym(g, x)), x, g.order)


def test_exp_log_domain_errors():
    with pytest.raises(SeriesError):
        PowerSeries([1, 1]).exp()
    with pytest.raises(SeriesError):
        PowerSeries([2, 1]).log()


# -- composition and reversion ----------------------------------------------------

def test_compose_against_sympy():
    x = sympy.Symbol("x")
    f = PowerSeries([1, 2, Fraction(-1, 3), 4, 0, Fraction(7, 2), 1, 1, -1])
    g = PowerSeries([0, Fraction(3, 2), 1, 0, -2, 1, Fraction(1, 5), 0, 3])
    expr = sym(f, x).subs(x, sym(g, x))
    assert list(f.compose(g).coeffs) == from_sym(sympy.expand(expr), x, 8)


def test_compose_order_bookkeeping():
    f = PowerSeries([1, 1, 1, 1], 3)
    g = PowerSeries([0, 0, 1], 10)          # x^2 + O(x^11)
    assert f.compose(g).order == min(2 * 4 - 1, 10 + 2 * 0)
    assert f(g) == ps_compose(f, g)
    with pytest.raises(SeriesError):
        f.compose(PowerSeries([1, 1]))


def test_substitute_power():
    f = PowerSeries([1, 2, 3], 2)
    s = f.substitute_power(3)
    assert s.order == 8
    assert s.coeffs == (1, 0, 0, 2, 0, 0, 3, 0, 0)


@settings(max_examples=100, deadline=None)
@given(series(min_order=1, max_order=14, c0=0, c1=1))
def test_revert_round_trip_and_lagrange(f):
    g = f.revert()
    x = PowerSeries.gen(f.order)
    assert f.compose(g) == x
    assert g.compose(f) == x
    assert g == revert_lagrange(f)
    assert ps_revert(f) == g


def test_revert_requires_unit_linear_term():
    with pytest.raises(SeriesError):
        PowerSeries([0, 2, 1]).revert()
    with pytest.raises(SeriesError):
        PowerSeries([1, 1, 1]).revert()


def test_revert_known_case():
    # x/(1-x) has inverse x/(1+x)
    f = PowerSeries([0] + [1] * 10)
    assert f.revert() == PowerSeries([0] + [(-1) ** (k - 1) for k in range(1, 11)])


def test_functional_arith():
    a, b = PowerSeries([1, 2, 3]), PowerSeries([2, 1, 0])
    assert ps_arith(a, b, "add") == a + b
    assert ps_arith(a, b, "sub") == a - b
    assert ps_arith(a, b, "mul") == a * b
    assert ps_arith(a, b, "div") == a / b
    with pytest.raises(ValueError):
        ps_arith(a, b, "pow")
