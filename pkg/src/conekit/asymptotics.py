"""Numerical check of the cone exponent near tau = b.

The fibre coordinate obeys dt = dtau / phi(tau). If phi(tau) ~ 2 beta (b - tau)
then t grows like -(1/(2 beta)) log(b - tau), so the slope of t against
-log(b - tau) close to b recovers 1/(2 beta).

Integration runs in u = -log(b - tau), where dtau = (b - tau) du and the
integrand (b - tau)/phi stays bounded, so plain Gauss-Legendre panels suffice.
phi is re-expanded exactly in powers of (b - tau) first; evaluating it in the
original basis that close to a root would cancel away most digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonPositiveProfile
from .exactalg import RationalPoly, as_rational, float_coeffs
from .geometry import MomentumData
from .quadrature import composite_gauss_legendre, gauss_legendre_nodes


@dataclass(frozen=True)
class AsymptoticFit:
    beta_target: Fraction
    slope_fitted: float
    relative_error: float
    samples: list

    @property
    def slope_target(self) -> float:
        return 1.0 / (2.0 * float(self.beta_target))


def _integrand(phiQ: RationalPoly, data: MomentumData):
    b = data.b
    num = np.array(list(reversed(float_coeffs(phiQ.compose_linear(b, -1)))))
    den = np.array(list(reversed(float_coeffs(data.Q.compose_linear(b, -1)))))

    def g(u):
        s = np.exp(-u)
        phi = np.polyval(num, s) / np.polyval(den, s)
        if np.any(phi <= 0):
            bad = float(b) - s[np.unravel_index(np.argmin(phi), phi.shape)]
            raise NonPositiveProfile(f"profile is not positive near tau={bad!r}")
        return s / phi

    return g


def fit_cone_exponent(
    phiQ: RationalPoly,
    data: MomentumData,
    beta,
    cutoff: float = 1e-6,
    steps: int = 10_000,
    tau0=0,
) -> AsymptoticFit:
    """Fit the log-slope of t(tau) on [b - 10*cutoff, b - cutoff].

    ``steps`` is the number of sample points in the fit window; each gap
    between samples is integrated with an 8-point Gauss-Legendre rule.
    """
    beta = as_rational(beta)
    if steps < 100:
        raise ValueError(f"steps must be at least 100, got {steps}")
    b = float(data.b)
    tau0 = float(tau0)
    if not (0 < cutoff and 10 * cutoff < b - tau0):
        raise ValueError(f"cutoff {cutoff} does not fit inside the interval (tau0={tau0}, b={b})")
    if beta <= 0:
        raise ValueError("cone exponent fit needs beta > 0")

    g = _integrand(phiQ, data)
    u0 = -np.log(b - tau0)
    u_lo, u_hi = -np.log(10 * cutoff), -np.log(cutoff)
    t_lo = composite_gauss_legendre(g, u0, u_lo, panels=256, order=16)

    u = np.linspace(u_lo, u_hi, steps)
    x, w = gauss_legendre_nodes(8)
    half = 0.5 * np.diff(u)
    mid = 0.5 * (u[1:] + u[:-1])
    increments = np.sum(half[:, None] * w[None, :] * g(mid[:, None] + half[:, None] * x[None, :]), axis=1)
    t = t_lo + np.concatenate([[0.0], np.cumsum(increments)])

    slope = float(np.polyfit(u, t, 1)[0])
    target = 1.0 / (2.0 * float(beta))
    tau = b - np.exp(-u)
    return AsymptoticFit(
        beta_target=beta,
        slope_fitted=slope,
        relative_error=abs(slope - target) / target,
        samples=list(zip(tau.tolist(), t.tolist(), u.tolist())),
    )
