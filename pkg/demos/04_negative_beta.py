"""Admissible data can still give beta < 0.

For this base the momentum interval is admissible and AC - B^2, bA - B are both
positive, yet the cscK profile takes a negative slope at tau = b and dips below
zero inside the interval. The float-quadrature route gives the same beta.

Run:  python demos/04_negative_beta.py
"""
from fractions import Fraction

from conekit import build_momentum_data, build_setup, solve_cscK_conical
from conekit.errors import PositivityFailure
from conekit.numeric import cone_angle_float

factors = [(1, 1, 3), (3, 1, -3)]
b = Fraction(31, 97)
data = build_momentum_data(build_setup(factors, b))
print("b =", b, " b_max =", data.setup.max_b)
print("AC - B^2 =", float(data.A * data.C - data.B**2), " bA - B =", float(b * data.A - data.B))

con = solve_cscK_conical(data, require_positive=False)
print("beta =", con.beta, f"~ {float(con.beta):.4f}")
print("interior roots of phi*Q:", con.positivity.interior_root_count)
print(f"float route: beta ~ {cone_angle_float(factors, float(b)):.4f}")

try:
    solve_cscK_conical(data)
except PositivityFailure as exc:
    print("strict solve refuses:", exc)
