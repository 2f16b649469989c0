"""Apery's two sequences and how fast B_n/A_n closes in on zeta(3).

Run:  python demos/apery_and_zeta3.py
"""
from apery_mirror.apery import apery_sequences, lcm_to, zeta3_convergent

pair = apery_sequences(30)
print("A_n:", pair.A[:6])
print("B_n:", [str(b) for b in pair.B[:5]])

# d_n^3 B_n is an integer even though B_n itself is not
for n in (5, 10, 20, 30):
    scaled = pair.B[n] * lcm_to(n) ** 3
    print(f"n={n:2d}  denominator of B_n = {pair.B[n].denominator:>24}  d_n^3 B_n integral: {scaled.denominator == 1}")

# each step gains a factor of roughly (1 + sqrt 2)^4 ~ 34 in accuracy
for n in (5, 10, 20, 30):
    _, err = zeta3_convergent(n)
    print(f"|B_{n}/A_{n} - zeta(3)| < {err:.3E}")
