from fractions import Fraction

import pytest

from apery_mirror.mirror import (
    BEUKERS,
    DWORK,
    beukers_tilde_h3,
    build_mirror,
    family,
    prepotential_correction,
    rho_series,
    yukawa_bp_normalized,
    yukawa_D,
    yukawa_variant,
)
from apery_mirror.modular import F_series, T_series, h_series
from apery_mirror.series import PowerSeries


@pytest.fixture(scope="module")
def beukers40():
    return build_mirror(BEUKERS.basis(40))


def naive_rho(basis, n):
    # h3 - h1^3 / w0^2 by coefficient recursion, no library series arithmetic
    w0, h1, h3 = (list(basis.series[j].coeffs[: n + 1]) for j in (0, 1, 3))

    def mul(a, b):
        return [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]

    def div(a, b):
        out = []
        for k in range(n + 1):
            out.append((a[k] - sum((out[i] * b[k - i] for i in range(k)), Fraction(0))) / b[0])
        return out

    cube = mul(mul(h1, h1), h1)
    return [x - y for x, y in zip(h3, div(cube, mul(w0, w0)))]


def test_family_lookup():
    assert family("beukers") is BEUKERS and family("dwork") is DWORK
    with pytest.raises(ValueError):
        family("quintic")
    assert BEUKERS.discriminant == (1, -34, 1)


def test_mirror_map_is_T(beukers40):
    assert beukers40.phi_of_q == T_series(40)
    assert beukers40.q_of_phi[:5] == (0, 1, 12, 222, 4900)


def test_mirror_maps_are_inverse(beukers40):
    m = beukers40
    assert m.q_of_phi.compose(m.phi_of_q) == PowerSeries.gen(40)


def test_rho(beukers40):
    rho = beukers40.rho
    assert rho[:4] == (0, -42, Fraction(-3033, 4), Fraction(-584597, 36))
    assert list(rho.coeffs[:21]) == naive_rho(beukers40.basis, 20)
    assert rho_series(beukers40.basis) == rho


def test_yukawa_leading(beukers40):
    y = yukawa_D(beukers40)
    assert y[:7] == (6, -42, -354, -1230, -2850, -5292, -8886)
    assert y == 6 * F_series(40) * h_series(40)


def test_prepotential_correction(beukers40):
    g = prepotential_correction(beukers40)
    assert g[0] == 0 and 6 + g.theta().theta().theta() == yukawa_D(beukers40)


def test_bp_normalized_is_one():
    m = build_mirror(BEUKERS.basis(31))
    k = yukawa_bp_normalized(m)
    assert k.order == 30
    assert k == PowerSeries([1], 30, "q")


def test_bp_normalization_needs_right_discriminant():
    m = build_mirror(BEUKERS.basis(10))
    assert yukawa_bp_normalized(m, (1, -256)) != PowerSeries([1], 9, "q")


def test_rival_h3():
    assert beukers_tilde_h3(3)[:4] == (0, -48, Fraction(-6765, 8), Fraction(-3507923, 216))


def test_rival_yukawa_denominators_grow():
    m = build_mirror(BEUKERS.basis(30))
    y = yukawa_variant(m, beukers_tilde_h3(30))
    d10, d30 = y.truncate(10).denominator_lcm(), y.truncate(30).denominator_lcm()
    assert d10 == 604800
    assert d30 > d10 and d30 % d10 == 0


def test_variant_validation(beukers40):
    with pytest.raises(ValueError):
        yukawa_variant(beukers40, PowerSeries([1, 0, 0]))


def test_build_mirror_order_argument():
    b = BEUKERS.basis(20)
    assert build_mirror(b, 10).order == 10
