"""The same pipeline for the Dwork pencil of quartic K3 surfaces.

Run:  python demos/dwork_quartic.py
"""
from apery_mirror.dwork import dwork_basis, dwork_mirror_yukawa

b = dwork_basis(6)
print("W0 =", b.W0)
print("h1 =", b.h1_dw)

y, table, phi = dwork_mirror_yukawa(24)
print("phi(q) =", phi.truncate(4))
print("Y =", y.truncate(4))
print("N_k =", [int(n) for n in table.N[:8]], "...  period", table.detected_period)
