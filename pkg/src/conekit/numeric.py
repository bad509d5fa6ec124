"""Floating-point backend.

Q and RQ are evaluated straight from the factor data (products of linear
scalings), never from the expanded exact polynomials, so agreement with the
exact layer checks the expansion as well as the integration.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import FibrationSetup, build_setup_float
from .quadrature import adaptive_gauss_legendre


@dataclass(frozen=True)
class NumericMoments:
    A: float
    B: float
    C: float
    int_RQ: float
    int_xRQ: float

    def as_tuple(self):
        return (self.A, self.B, self.C, self.int_RQ, self.int_xRQ)


def factor_functions(factors):
    dims = np.array([float(f.dim) for f in factors])
    kap = np.array([float(f.einstein) for f in factors])
    eig = np.array([float(f.eigenvalue) for f in factors])

    def Q(t):
        t = np.asarray(t, dtype=float)
        s = 1.0 - t[..., None] * eig
        return np.prod(s**dims, axis=-1)

    def RQ(t):
        t = np.asarray(t, dtype=float)
        s = 1.0 - t[..., None] * eig
        return Q(t) * np.sum(dims * kap / s, axis=-1)

    return Q, RQ


def numeric_moments(factors, b: float, rtol: float = 1e-13) -> NumericMoments:
    Q, RQ = factor_functions(factors)
    b = float(b)

    def integ(f):
        return adaptive_gauss_legendre(f, -b, b, rtol=rtol)[0]

    return NumericMoments(
        A=integ(Q),
        B=integ(lambda t: t * Q(t)),
        C=integ(lambda t: t * t * Q(t)),
        int_RQ=integ(RQ),
        int_xRQ=integ(lambda t: t * RQ(t)),
    )


def moments_for_setup(setup: FibrationSetup, rtol: float = 1e-13) -> NumericMoments:
    return numeric_moments(setup.factors, float(setup.b), rtol)


def cone_angle_float(factors, b: float) -> float:
    """Cone angle for a float half-width, computed entirely in doubles."""
    factors, b = build_setup_float(factors, b)
    Q, _ = factor_functions(factors)
    m = numeric_moments(factors, b)
    qm, qp = float(Q(-b)), float(Q(b))
    num = qm * (b * m.A + m.B) - m.A * m.int_xRQ + m.B * m.int_RQ
    return num / (qp * (b * m.A - m.B))


def extremal_float(factors, b: float) -> tuple[float, float]:
    """(sigma0, lambda) of the extremal profile in doubles."""
    factors, b = build_setup_float(factors, b)
    Q, _ = factor_functions(factors)
    m = numeric_moments(factors, b)
    qm, qp = float(Q(-b)), float(Q(b))
    rhs = np.array([qm + qp + m.int_RQ, -b * qm + b * qp + m.int_xRQ])
    sol = np.linalg.solve(np.array([[m.A, m.B], [m.B, m.C]]), rhs)
    return float(sol[0]), float(sol[1])
