"""From the fourth-order operator to the instanton numbers of the Apery family.

Steps: Frobenius basis at the maximally unipotent point, mirror map (which turns
out to be the eta quotient T), prepotential, Yukawa coupling, Lambert inversion.

Run:  python demos/beukers_mirror.py [order]
"""
import sys

from apery_mirror import BEUKERS, build_mirror, lambert_extract, yukawa_D
from apery_mirror.mirror import beukers_tilde_h3, yukawa_variant
from apery_mirror.modular import F_series, T_series, h_series

order = int(sys.argv[1]) if len(sys.argv) > 1 else 36

basis = BEUKERS.basis(order)
for j, name in enumerate(("w0", "h1", "h2", "h3")):
    print(f"{name} = {basis.series[j].truncate(4)}")

m = build_mirror(basis)
print("phi(q) =", m.phi_of_q.truncate(5))
print("phi(q) == T(q):", m.phi_of_q == T_series(order))

y = yukawa_D(m)
print("Y =", y.truncate(6))
print("Y == 6 F H:", y == 6 * F_series(order) * h_series(order))

table = lambert_extract(y).with_period()
print("N_1..N_12 =", [int(n) for n in table.N[:12]])
print("all integral:", table.all_integral, " period:", table.detected_period)

# the other fourth-order extension gives a prepotential with growing denominators
yt = yukawa_variant(m, beukers_tilde_h3(order))
for k in (10, 20, 30):
    if k <= order:
        print(f"rival Yukawa, lcm of denominators to q^{k}: {yt.truncate(k).denominator_lcm()}")
