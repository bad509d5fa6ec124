"""Independent numeric oracles.

Nothing here touches the exact polynomial layer: Q and RQ are evaluated from
the product formula directly, and the cone angle is found by shooting on the
ODE rather than from the closed-form moment expressions.
"""
from __future__ import annotations

import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq


def q_and_rq(factors):
    """Float closures for Q and R*Q built from (dim, kappa, l) triples."""
    dims = np.array([float(f[0]) for f in factors])
    kap = np.array([float(f[1]) for f in factors])
    ell = np.array([float(f[2]) for f in factors])

    # Kähler form of factor i scales by 1 - tau * l_i * kappa_i
    def Q(t):
        return float(np.prod((1.0 - t * ell * kap) ** dims))

    def RQ(t):
        return Q(t) * float(np.sum(dims * kap / (1.0 - t * ell * kap)))

    return Q, RQ


def shoot_cone_angle(factors, b):
    """Return (sigma0', beta) by shooting y'' = 2(RQ - sigma Q) from tau = -b.

    y = phi*Q with y(-b) = 0, y'(-b) = 2Q(-b); sigma is tuned so y(b) = 0.
    """
    b = float(b)
    Q, RQ = q_and_rq(factors)

    def endpoint(sigma):
        sol = solve_ivp(
            lambda t, y: [y[1], 2.0 * (RQ(t) - sigma * Q(t))],
            (-b, b),
            [0.0, 2.0 * Q(-b)],
            method="DOP853",
            rtol=1e-13,
            atol=1e-15,
        )
        return sol.y[:, -1]

    # phi''-term pushes y down as sigma grows, so y(b) is decreasing in sigma
    lo, hi = -1.0, 1.0
    while endpoint(lo)[0] < 0:
        lo *= 2
    while endpoint(hi)[0] > 0:
        hi *= 2
    sigma = brentq(lambda s: endpoint(s)[0], lo, hi, xtol=1e-15, rtol=1e-15)
    dy = endpoint(sigma)[1]
    return sigma, -dy / (2.0 * Q(b))


def shoot_extremal(factors, b):
    """Return (sigma0, lambda) with y(b) = 0 and y'(b) = -2Q(b) by 2D Newton."""
    b = float(b)
    Q, RQ = q_and_rq(factors)

    def endpoint(sigma, lam):
        sol = solve_ivp(
            lambda t, y: [y[1], 2.0 * (RQ(t) - (sigma + lam * t) * Q(t))],
            (-b, b),
            [0.0, 2.0 * Q(-b)],
            method="DOP853",
            rtol=1e-13,
            atol=1e-15,
        )
        y, dy = sol.y[:, -1]
        return np.array([y, dy + 2.0 * Q(b)])

    # endpoint is affine in (sigma, lam): three evaluations pin it down
    f0 = endpoint(0.0, 0.0)
    J = np.column_stack([endpoint(1.0, 0.0) - f0, endpoint(0.0, 1.0) - f0])
    sigma, lam = np.linalg.solve(J, -f0)
    return float(sigma), float(lam)


def quad_moments(factors, b):
    """A, B, C, int RQ, int x RQ by scipy's adaptive QUADPACK."""
    b = float(b)
    Q, RQ = q_and_rq(factors)
    opts = dict(epsabs=0.0, epsrel=1e-13, limit=200)
    return (
        quad(Q, -b, b, **opts)[0],
        quad(lambda t: t * Q(t), -b, b, **opts)[0],
        quad(lambda t: t * t * Q(t), -b, b, **opts)[0],
        quad(RQ, -b, b, **opts)[0],
        quad(lambda t: t * RQ(t), -b, b, **opts)[0],
    )


def count_sign_changes(coeffs, lo, hi, samples=10_000):
    """Dense-sampling root oracle: sign changes of a float polynomial on (lo, hi)."""
    xs = np.linspace(float(lo), float(hi), samples + 2)[1:-1]
    vals = np.polyval(list(reversed([float(c) for c in coeffs])), xs)
    s = np.sign(vals)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))
