"""The constructed cone angle is exactly where the log Futaki invariant vanishes.

Run:  python demos/02_futaki_vanishing.py
"""
from fractions import Fraction

from conekit import build_momentum_data, build_setup, solve_cscK_conical, solve_extremal
from conekit.futaki import beta_via_futaki, classical_futaki_exact, log_futaki_exact

factors = [(1, 1, -2), (1, 1, 1)]
data = build_momentum_data(build_setup(factors, Fraction(1, 4)))
print("Q  =", data.Q)
print("RQ =", data.RQ)
print("A, B, C =", data.A, data.B, data.C)

ext = solve_extremal(data)
con = solve_cscK_conical(data)
print("\nextremal: sigma0 =", ext.sigma0, " lambda =", ext.lam)
print("conical:  sigma0' =", con.sigma0_prime, " beta =", con.beta)

# beta from the Futaki side agrees to the last digit of numerator and denominator
print("\nbeta via Futaki:", beta_via_futaki(data, ext))
print("classical Futaki / (2 pi vol):", classical_futaki_exact(data, ext))

# Fut_{D,beta} is affine in beta; it crosses zero at con.beta and nowhere else
for beta in (Fraction(1, 2), con.beta, Fraction(1)):
    print(f"  Fut_D,beta at beta = {float(beta):.6f}: {float(log_futaki_exact(data, beta, ext)):+.3e}")
