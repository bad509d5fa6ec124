"""Near the infinity section the metric looks like a cone of angle 2 pi beta.

The fibre distance s from tau = b behaves like (b - tau)^(1/2), and the angular
coordinate t = integral dtau/phi grows like ln(b - tau)/(2 beta). Fitting that
slope recovers beta from the profile alone.

Run:  python demos/03_cone_exponent_fit.py
"""
from fractions import Fraction

import numpy as np

from conekit import build_momentum_data, build_setup, fit_cone_exponent, solve_cscK_conical
from conekit.profiles import sample_profile

data = build_momentum_data(build_setup([(1, 1, -2), (1, 1, 1)], Fraction(1, 4)))
con = solve_cscK_conical(data)

samples = sample_profile(con.phiQ, data, 9)
print("phi and scalar curvature on a coarse grid:")
for t, p, s in samples:
    print(f"  tau = {t:+.4f}  phi = {p:.6f}  S = {s:.6f}")

fit = fit_cone_exponent(con.phiQ, data, con.beta, cutoff=1e-6, steps=10_000)
print(f"\nslope target 1/(2 beta) = {fit.slope_target:.6f}")
print(f"slope fitted            = {fit.slope_fitted:.6f}")
print(f"relative error          = {fit.relative_error:.2e}")

# slope of phi at the right end gives the same beta directly
tau, phi, _ = np.array(sample_profile(con.phiQ, data, 2001)).T
slope = (phi[-1] - phi[-2]) / (tau[-1] - tau[-2])
print(f"-phi'(b)/2 from the grid ~ {-slope / 2:.4f}  (exact beta {float(con.beta):.6f})")
