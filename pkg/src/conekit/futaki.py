"""Futaki invariants for the fibrewise C*-action and the cone angle they predict.

The holomorphy potential of the fibrewise generator is f = a (tau - tau_bar),
tau_bar = B / A. All vanishing decisions are made on exact rationals; the
float outputs additionally carry 2*pi and the base volume.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominator
from .exactalg import RationalPoly, as_rational, definite_integral
from .geometry import MomentumData
from .profiles import ExtremalSolution, solve_cscK_conical, solve_extremal


@dataclass(frozen=True)
class FutakiReport:
    """Futaki data of one setup.

    ``fut_classical`` includes the factor 2*pi; ``fut_log`` does not, matching
    the usual way the two invariants are normalised against each other.
    """

    tau_bar: Fraction
    fut_classical: float
    fut_log: float
    beta_from_futaki: Fraction
    identity_ok: bool


@dataclass(frozen=True)
class MainTheoremCheck:
    ok: bool
    beta_construction: Fraction
    beta_futaki: Fraction

    @property
    def discrepancy(self) -> Fraction:
        return self.beta_construction - self.beta_futaki


def volume_functional(data: MomentumData, f: RationalPoly, vol_M: float = 1.0) -> float:
    """Integral of f(tau) against the volume form, 2*pi*Vol(M)*int f Q."""
    return 2 * math.pi * float(vol_M) * float(definite_integral(f * data.Q, -data.b, data.b))


def centred_second_moment(data: MomentumData) -> Fraction:
    """int (tau - tau_bar)^2 Q = C - B^2/A."""
    return data.C - data.B**2 / data.A


def classical_futaki_exact(data: MomentumData, extremal: ExtremalSolution, a=1) -> Fraction:
    """a * lambda * int (tau - tau_bar)^2 Q, i.e. Fut / (2*pi*Vol(M))."""
    return as_rational(a) * extremal.lam * centred_second_moment(data)


def classical_futaki(data: MomentumData, extremal: ExtremalSolution, a=1, vol_M: float = 1.0) -> float:
    return 2 * math.pi * float(vol_M) * float(classical_futaki_exact(data, extremal, a))


def log_futaki_exact(data: MomentumData, beta, extremal: ExtremalSolution, a=1) -> Fraction:
    """Fut_{D,beta} / Vol(M) as an exact rational; affine in beta."""
    a = as_rational(a)
    beta = as_rational(beta)
    divisor_term = (1 - beta) * a * (data.b - data.tau_bar) * data.Q_plus
    return classical_futaki_exact(data, extremal, a) - divisor_term


def log_futaki(data: MomentumData, beta, extremal: ExtremalSolution, a=1, vol_M: float = 1.0) -> float:
    return float(vol_M) * float(log_futaki_exact(data, beta, extremal, a))


def beta_via_futaki(data: MomentumData, extremal: ExtremalSolution) -> Fraction:
    """The unique beta at which the log Futaki invariant vanishes."""
    denom = data.Q_plus * (data.b * data.A - data.B)
    if denom == 0:
        raise DegenerateDenominator("Q(b)(bA - B) vanishes")
    return (denom - extremal.lam * (data.A * data.C - data.B**2)) / denom


def verify_main_theorem(data: MomentumData) -> MainTheoremCheck:
    """Compare the constructed cone angle with the Futaki-vanishing one, exactly."""
    conical = solve_cscK_conical(data, require_positive=False)
    fut_beta = beta_via_futaki(data, solve_extremal(data))
    return MainTheoremCheck(conical.beta == fut_beta, conical.beta, fut_beta)


def futaki_report(data: MomentumData, a=1, vol_M: float = 1.0, extremal=None, conical=None) -> FutakiReport:
    """Collect Futaki numbers; ``fut_log`` is evaluated at the constructed beta."""
    extremal = extremal or solve_extremal(data)
    conical = conical or solve_cscK_conical(data)
    fut_beta = beta_via_futaki(data, extremal)
    return FutakiReport(
        tau_bar=data.tau_bar,
        fut_classical=classical_futaki(data, extremal, a, vol_M),
        fut_log=log_futaki(data, conical.beta, extremal, a, vol_M),
        beta_from_futaki=fut_beta,
        identity_ok=fut_beta == conical.beta,
    )
