"""Cone angle beta(b) for the two product-of-P1 bases, printed as a table.

Run:  python demos/01_cone_angle_curves.py
"""
from fractions import Fraction

from conekit import build_momentum_data, build_setup, solve_cscK_conical

# two P1 factors, Einstein constant 1; only the twisting exponents differ
above_one = [(1, 1, -1), (1, 1, 2)]
below_one = [(1, 1, -2), (1, 1, 1)]

print(f"{'b':>6}  {'beta (l=-1,2)':>14}  {'beta (l=-2,1)':>14}")
for k in range(1, 50, 4):
    b = Fraction(k, 100)
    betas = []
    for factors in (above_one, below_one):
        data = build_momentum_data(build_setup(factors, b))
        betas.append(solve_cscK_conical(data).beta)  # exact rational
    print(f"{float(b):6.2f}  {float(betas[0]):14.6f}  {float(betas[1]):14.6f}")

# the exact value at b = 1/4 is a small rational
data = build_momentum_data(build_setup(above_one, Fraction(1, 4)))
print("\nbeta(1/4) for l = (-1, 2):", solve_cscK_conical(data).beta)
