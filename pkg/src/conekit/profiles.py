"""Momentum profiles: the smooth extremal one and the conical cscK one.

A profile phi is stored only through the polynomial phiQ = phi * Q. Both
constructions share the shape

    phiQ(t) = 2 (t + b) Q(-b) + 2 W(t),   W'' = RQ - S Q,  W(-b) = W'(-b) = 0,

where S is the target scalar curvature (sigma0 + lambda*t, or a constant).
That fixes phi(-b) = 0 and phi'(-b) = 2; the constants in S are then chosen so
that phi(b) = 0 and, in the extremal case, phi'(b) = -2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InternalInconsistency, PoleAtTau, PositivityFailure
from .exactalg import (
    RationalPoly,
    as_rational,
    count_roots_in_open_interval,
    double_antiderivative_from,
    float_coeffs,
)
from .geometry import MomentumData


@dataclass(frozen=True)
class PositivityCertificate:
    interior_root_count: int
    midpoint_value: Fraction

    @property
    def ok(self) -> bool:
        return self.interior_root_count == 0 and self.midpoint_value > 0


@dataclass(frozen=True)
class ExtremalSolution:
    sigma0: Fraction
    lam: Fraction
    phiQ: RationalPoly
    positivity: PositivityCertificate


@dataclass(frozen=True)
class ConicalSolution:
    sigma0_prime: Fraction
    beta: Fraction
    phiQ: RationalPoly
    positivity: PositivityCertificate
    beta_boundary: Fraction
    beta_closed_form: Fraction


def profile_from_curvature(data: MomentumData, curvature: RationalPoly) -> RationalPoly:
    """phiQ solving the scalar-curvature ODE with phi(-b) = 0, phi'(-b) = 2."""
    b = data.b
    W = double_antiderivative_from(data.RQ - curvature * data.Q, -b)
    return RationalPoly([2 * b * data.Q_minus, 2 * data.Q_minus]) + W * 2


def certify_positivity(phiQ: RationalPoly, data: MomentumData) -> PositivityCertificate:
    b = data.b
    if phiQ.is_zero():
        raise PositivityFailure("profile is identically zero", root_count=None)
    cert = PositivityCertificate(count_roots_in_open_interval(phiQ, -b, b), phiQ(0))
    if not cert.ok:
        raise PositivityFailure(
            f"profile is not positive on (-{b}, {b}): {cert.interior_root_count} interior "
            f"root(s), value {cert.midpoint_value} at the midpoint",
            root_count=cert.interior_root_count,
        )
    return cert


def _check_boundary(phiQ, data, beta):
    b = data.b
    dphiQ = phiQ.derivative()
    failures = []
    if phiQ(-b) != 0:
        failures.append("phiQ(-b) != 0")
    if phiQ(b) != 0:
        failures.append("phiQ(b) != 0")
    if dphiQ(-b) != 2 * data.Q_minus:
        failures.append("phiQ'(-b) != 2 Q(-b)")
    if dphiQ(b) != -2 * beta * data.Q_plus:
        failures.append(f"phiQ'(b) != -2*{beta}*Q(b)")
    if failures:
        raise InternalInconsistency("boundary conditions violated: " + ", ".join(failures))


def _check_ode(phiQ, data, curvature):
    lhs = data.RQ * 2 - phiQ.derivative().derivative()
    if lhs != curvature * data.Q * 2:
        raise InternalInconsistency("profile does not satisfy the scalar-curvature identity")


def solve_extremal(data: MomentumData) -> ExtremalSolution:
    """Smooth extremal profile with scalar curvature sigma0 + lambda * tau.

    Solves the 2x2 moment system (A B; B C)(sigma0, lambda) = (r1, r2) exactly.
    """
    b, A, B, C = data.b, data.A, data.B, data.C
    qm, qp = data.Q_minus, data.Q_plus
    r1 = qm + qp + data.int_RQ
    r2 = -b * qm + b * qp + data.int_xRQ
    det = A * C - B * B
    sigma0 = (C * r1 - B * r2) / det
    lam = (A * r2 - B * r1) / det
    curvature = RationalPoly([sigma0, lam])
    phiQ = profile_from_curvature(data, curvature)
    _check_boundary(phiQ, data, Fraction(1))
    _check_ode(phiQ, data, curvature)
    return ExtremalSolution(sigma0, lam, phiQ, certify_positivity(phiQ, data))


def cone_angle_closed_form(data: MomentumData) -> Fraction:
    b, A, B = data.b, data.A, data.B
    num = data.Q_minus * (b * A + B) - A * data.int_xRQ + B * data.int_RQ
    return num / (data.Q_plus * (b * A - B))


def cscK_constant(data: MomentumData) -> Fraction:
    """sigma0' from the closing condition phi(b) = 0."""
    b = data.b
    return (2 * b * data.Q_minus + b * data.int_RQ - data.int_xRQ) / (b * data.A - data.B)


def solve_cscK_conical(data: MomentumData, require_positive: bool = True) -> ConicalSolution:
    """cscK profile, smooth at tau = -b, with cone angle 2*pi*beta at tau = b.

    With ``require_positive=False`` a profile that dips below zero is still
    returned (its certificate then has ``ok == False``); the cone angle and the
    exact identities do not depend on positivity.
    """
    sigma = cscK_constant(data)
    # phi'(b) Q(b) = 2 Q(-b) - 2 (sigma A - int RQ)
    dphi_b = (2 * data.Q_minus - 2 * (sigma * data.A - data.int_RQ)) / data.Q_plus
    beta_boundary = -dphi_b / 2
    beta_closed = cone_angle_closed_form(data)
    if beta_boundary != beta_closed:
        raise InternalInconsistency(
            f"cone angle routes disagree: boundary {beta_boundary} vs closed form {beta_closed}"
        )
    curvature = RationalPoly([sigma])
    phiQ = profile_from_curvature(data, curvature)
    _check_boundary(phiQ, data, beta_closed)
    _check_ode(phiQ, data, curvature)
    if require_positive:
        cert = certify_positivity(phiQ, data)
        if beta_closed < 0:
            raise InternalInconsistency(f"negative cone angle {beta_closed} for a positive profile")
    else:
        cert = PositivityCertificate(count_roots_in_open_interval(phiQ, -data.b, data.b), phiQ(0))
    return ConicalSolution(sigma, beta_closed, phiQ, cert, beta_boundary, beta_closed)


def scalar_curvature(phiQ: RationalPoly, data: MomentumData, tau) -> Fraction:
    """S = (RQ - phiQ''/2) / Q at tau, exactly."""
    tau = as_rational(tau)
    q = data.Q(tau)
    if q == 0:
        raise PoleAtTau(f"Q vanishes at tau={tau}")
    return (data.RQ(tau) - phiQ.derivative().derivative()(tau) / 2) / q


def sample_profile(phiQ: RationalPoly, data: MomentumData, grid_size: int):
    """Uniform float samples (tau, phi, S) on [-b, b], endpoints included."""
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    b = float(data.b)
    taus = np.linspace(-b, b, grid_size)
    rev = lambda p: list(reversed(float_coeffs(p)))  # noqa: E731
    q = np.polyval(rev(data.Q), taus)
    phi = np.polyval(rev(phiQ), taus) / q
    S = (np.polyval(rev(data.RQ), taus) - 0.5 * np.polyval(rev(phiQ.derivative().derivative()), taus)) / q
    phi[0] = phi[-1] = 0.0
    return [(float(t), float(p), float(s)) for t, p, s in zip(taus, phi, S)]
