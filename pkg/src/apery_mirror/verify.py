"""Named invariant suites, each a list of (check name, passed, detail) results."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

from . import modular
from .apery import apery_sequences, lcm_to, zeta3_convergent
from .dwork import dwork_basis, dwork_mirror_yukawa
from .frobenius import frobenius_basis, monodromy_shift, recursion_basis
from .instanton import detect_period, lambert_extract, lambert_synthesize
from .mirror import BEUKERS, DWORK, beukers_tilde_h3, build_mirror, yukawa_bp_normalized, yukawa_D, yukawa_variant
from .operators import (
    THETA,
    apery_D,
    apery_D_phi,
    apery_L,
    apery_root,
    op_apply,
    op_mul,
    op_pullback_inversion,
    op_sym_square,
)

__all__ = ["CheckResult", "SUITES", "run_suite"]


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, cond: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(cond), detail)


def suite_apery(order: int) -> Iterator[CheckResult]:
    n_max = max(order, 10)
    try:
        pair = apery_sequences(n_max)
        yield _check(f"A_n integral for n <= {n_max}", True)
        yield _check(f"d_n^3 B_n integral for n <= {n_max}", True)
    except ArithmeticError as exc:
        yield _check("Apery integrality", False, str(exc))
        return
    yield _check("A_0..A_3 = 1, 5, 73, 1445", pair.A[:4] == (1, 5, 73, 1445))
    yield _check("B_1..B_4", pair.B[1:5] == (6, Fraction(351, 4), Fraction(62531, 36),
                                             Fraction(11424695, 288)))
    yield _check("lcm_to(10) = 2520", lcm_to(10) == 2520)
    ratio, err = zeta3_convergent(10)
    yield _check("|B_10/A_10 - zeta(3)| < 1e-14", err < Fraction(1, 10 ** 14), f"bound {err}")
    m = min(n_max, 50)
    increasing = all(
        pair.B[n] * pair.A[n - 1] - pair.B[n - 1] * pair.A[n] == Fraction(6, n ** 3)
        for n in range(1, m + 1))
    yield _check(f"convergents increase monotonically to n = {m}", increasing)


def suite_frobenius(order: int) -> Iterator[CheckResult]:
    n = max(order, 4)
    eng = frobenius_basis(apery_D(), 4, n, family="beukers")
    rec = recursion_basis(n)
    yield _check(f"recursion and eps-ring routes agree to order {n}",
                 all(eng.series[j] == rec.series[j] for j in range(4)))
    h1, h2, h3 = eng.series[1], eng.series[2], eng.series[3]
    yield _check("h1 = 12 phi + 210 phi^2 + 4438 phi^3", h1[1:4] == (12, 210, 4438))
    yield _check("h2 = 144 phi^2 + 4320 phi^3", h2[1:4] == (0, 144, 4320))
    yield _check("h3 = -42 phi - 3033/4 phi^2 - 522389/36 phi^3",
                 h3[1:4] == (-42, Fraction(-3033, 4), Fraction(-522389, 36)))
    k = min(n, 40)
    sols = [s.truncate(k) for s in eng.solutions]
    L, D = apery_L(), apery_D()
    yield _check(f"L kills w0, w1, w2 to order {k}", all(op_apply(L, s).is_zero() for s in sols[:3]))
    yield _check(f"D kills w0..w3 to order {k}", all(op_apply(D, s).is_zero() for s in sols))
    yield _check("w0 w2 = w1^2", (sols[0] * sols[2] - sols[1] * sols[1]).is_zero())
    yield _check("w0 w3 != w1 w2", not (sols[0] * sols[3] - sols[1] * sols[2]).is_zero())
    rows = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1]]
    ok = True
    for j, row in enumerate(rows):
        expect = sols[0] * 0
        for i, c in enumerate(row):
            expect = expect + sols[i] * c
        ok &= monodromy_shift(sols[j]) == expect
    yield _check("monodromy L -> L+1 is the binomial matrix", ok)
    pulled, m = op_pullback_inversion(apery_D_phi())
    yield _check("pullback of D equals theta L after clearing phi^2",
                 m == 2 and pulled == op_mul(THETA, L))
    yield _check("indicial polynomials eps^3 and eps^4",
                 L.indicial() == (0, 0, 0, 1) and D.indicial() == (0, 0, 0, 0, 1))
    yield _check("symmetric square of the root operator equals L", op_sym_square(apery_root()) == L)


def suite_modular(order: int) -> Iterator[CheckResult]:
    n = max(order, 4)
    T, F = modular.T_series(n), modular.F_series(n)
    yield _check("T = q - 12q^2 + 66q^3 - 220q^4", T[:5] == (0, 1, -12, 66, -220))
    yield _check("F = 1 + 5q + 13q^2 + 23q^3", F[:4] == (1, 5, 13, 23))
    yield _check(f"T, F integral to order {n}", T.is_integral() and F.is_integral())
    w0 = frobenius_basis(apery_L(), 3, n).series[0]
    yield _check(f"F = sum A_n T^n to order {n}", w0.compose(T) == F)
    yield _check(f"lattice and theta-product hexagonal theta agree to order {n}",
                 modular.hexagonal_theta(n) == modular.hexagonal_theta_product(n))


def suite_yukawa(order: int) -> Iterator[CheckResult]:
    n = max(order, 30)
    m = build_mirror(BEUKERS.basis(n + 1))
    phi = m.phi_of_q.truncate(n)
    yield _check(f"phi(q) = T(q) to order {n}", phi == modular.T_series(n))
    y = yukawa_D(m).truncate(n)
    yield _check("Y_D = 6(1 - 7q - 59q^2 - 205q^3 - 475q^4 - 882q^5)",
                 y[:6] == (6, -42, -354, -1230, -2850, -5292))
    six_fh = 6 * modular.F_series(n) * modular.h_series(n)
    yield _check(f"Y_D = 6 F H to order {n}", y == six_fh)
    k = yukawa_bp_normalized(m)
    yield _check(f"normalized Y_bp = 1 to order {k.order}", k == k * 0 + 1)
    yt = yukawa_variant(m, beukers_tilde_h3(n + 1))
    d10, d30 = yt.truncate(10).denominator_lcm(), yt.truncate(30).denominator_lcm()
    yield _check("rival Yukawa denominators grow (order 30 vs 10)", d30 > d10, f"{d10} -> {d30}")


def suite_instanton(order: int) -> Iterator[CheckResult]:
    n = max(order, 18)
    m = build_mirror(BEUKERS.basis(n))
    y = yukawa_D(m)
    t = lambert_extract(y)
    yield _check("N_1..N_6 = -42, -39, -44, -39, -42, -34", t.N[:6] == (-42, -39, -44, -39, -42, -34))
    yield _check(f"N_k integral for k <= {n}", t.all_integral)
    p = detect_period(t)
    yield _check(f"period 6 verified to k = {n}", p == 6, f"detected {p}")
    yield _check("Lambert synthesis reproduces the Yukawa series", lambert_synthesize(t, n) == y)


def suite_dwork(order: int) -> Iterator[CheckResult]:
    n = max(order, 6)
    y, t, phi = dwork_mirror_yukawa(n)
    yield _check("phi(q) = q - 104q^2 + 6444q^3 - 311744q^4", phi[:5] == (0, 1, -104, 6444, -311744))
    yield _check("Y = 6 - 480q - 2400q^2 - 13440q^3 - 17760q^4",
                 y[:5] == (6, -480, -2400, -13440, -17760))
    yield _check("N_1 = -480, N_2 = -240", t.N[:2] == (-480, -240))
    yield _check(f"N_k integral for k <= {n}", t.all_integral)
    yield _check(f"period 2 verified to k = {n}", t.detected_period == 2, f"detected {t.detected_period}")
    b = dwork_basis(min(n, 40))
    w = b.solutions
    yield _check("W0 W2 = W1^2", (w[0] * w[2] - w[1] * w[1]).is_zero())
    yield _check("L_dk kills W0, W1, W2; D_dk kills all four",
                 all(op_apply(DWORK.L, s).is_zero() for s in w[:3])
                 and all(op_apply(DWORK.D, s).is_zero() for s in w))
    m = build_mirror(DWORK.basis(n + 1))
    k = yukawa_bp_normalized(m)
    yield _check(f"normalized Y_bp = 1 to order {k.order}", k == k * 0 + 1)


SUITES: dict[str, Callable[[int], Iterator[CheckResult]]] = {
    "apery": suite_apery,
    "frobenius": suite_frobenius,
    "modular": suite_modular,
    "yukawa": suite_yukawa,
    "instanton": suite_instanton,
    "dwork": suite_dwork,
}


def run_suite(name: str, order: int) -> list[CheckResult]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](order)]
    return list(SUITES[name](order))
