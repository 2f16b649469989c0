from fractions import Fraction
from math import factorial

import pytest

from apery_mirror.dwork import dwork_basis, dwork_mirror_yukawa, h1_closed_form, w0_closed_form
from apery_mirror.mirror import DWORK, build_mirror, yukawa_bp_normalized
from apery_mirror.operators import op_apply
from apery_mirror.series import PowerSeries


def test_closed_forms():
    assert w0_closed_form(3).coeffs == (1, 24, 2520, 369600)
    # 4 * 24 * (H_4 - H_1)
    assert h1_closed_form(1)[1] == 4 * 24 * Fraction(13, 12)


def test_routes_agree():
    b = dwork_basis(30)
    assert b.W0 == w0_closed_form(30)
    assert b.h1_dw == h1_closed_form(30)


def test_annihilation_and_quadratic_relation():
    w = dwork_basis(25).solutions
    assert all(op_apply(DWORK.L, s).is_zero() for s in w[:3])
    assert all(op_apply(DWORK.D, s).is_zero() for s in w)
    assert (w[0] * w[2] - w[1] * w[1]).is_zero()


def test_mirror_and_yukawa():
    y, t, phi = dwork_mirror_yukawa(40)
    assert phi[:5] == (0, 1, -104, 6444, -311744)
    assert y[:5] == (6, -480, -2400, -13440, -17760)
    assert t.N[:2] == (-480, -240)
    assert t.all_integral and t.detected_period == 2


def test_bp_normalized():
    k = yukawa_bp_normalized(build_mirror(DWORK.basis(21)))
    assert k == PowerSeries([1], 20, "q")


def test_order_validation():
    with pytest.raises(ValueError):
        dwork_basis(0)
    with pytest.raises(ValueError):
        dwork_mirror_yukawa(1)
