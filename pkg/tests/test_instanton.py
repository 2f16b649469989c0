from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apery_mirror.instanton import InstantonTable, detect_period, divisors, lambert_extract, lambert_synthesize
from apery_mirror.mirror import BEUKERS, build_mirror, yukawa_D
from apery_mirror.series import PowerSeries


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=6), min_size=2, max_size=25))
def test_extract_synthesize_round_trip(cs):
    y = PowerSeries(cs, var="q")
    t = lambert_extract(y)
    assert lambert_synthesize(t, y.order) == y


def test_extract_naive_divisor_sums():
    N = [Fraction(k % 5 - 2, 1 + k % 3) for k in range(1, 21)]
    cs = [Fraction(3)] + [sum(d ** 3 * N[d - 1] for d in range(1, n + 1) if n % d == 0) for n in range(1, 21)]
    t = lambert_extract(PowerSeries(cs))
    assert list(t.N) == N and t.c0 == 3
    assert t.integral_flags == tuple(x.denominator == 1 for x in N)


def test_beukers_instantons():
    t = lambert_extract(yukawa_D(build_mirror(BEUKERS.basis(36))))
    assert t.N[:6] == (-42, -39, -44, -39, -42, -34)
    assert t[1] == -42 and t.verified_to == 36
    assert t.all_integral
    assert detect_period(t) == 6
    with pytest.raises(IndexError):
        t[0]


def test_period_needs_enough_data():
    t = InstantonTable(Fraction(6), (Fraction(-42),), (True,))
    assert detect_period(t) is None
    t = InstantonTable(Fraction(0), tuple(Fraction(x) for x in (1, 2, 1, 2, 1, 2)), (True,) * 6)
    assert detect_period(t) == 2
    # only two full repeats: not enough to call it
    t = InstantonTable(Fraction(0), tuple(Fraction(x) for x in (1, 2, 3, 1, 2, 3)), (True,) * 6)
    assert detect_period(t) is None
    assert detect_period(t, min_repeats=2) == 3


def test_non_periodic():
    t = InstantonTable(Fraction(0), tuple(Fraction(k) for k in range(10)), (True,) * 10)
    assert t.with_period().detected_period is None


def test_synthesize_too_far():
    t = InstantonTable(Fraction(0), (Fraction(1),), (True,))
    with pytest.raises(ValueError):
        lambert_synthesize(t, 2)
