"""Randomised invariant suite behind ``conekit verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .asymptotics import fit_cone_exponent
from .errors import ConekitError
from .geometry import FibrationSetup, build_momentum_data, build_setup, max_admissible_b
from .futaki import beta_via_futaki
from .numeric import moments_for_setup
from .profiles import solve_cscK_conical, solve_extremal

EINSTEIN_CHOICES = (Fraction(1, 2), Fraction(1), Fraction(2))
NUMERIC_RTOL = 1e-10
FIT_RTOL = 0.01


def random_setup(rng: random.Random, max_factors=3, max_dim=3, max_exponent=3, b_denominator=97) -> FibrationSetup:
    """A random admissible setup: r <= 3 factors, n_i <= 3, integer l_i in [-3, 3]."""
    factors = [
        (rng.randint(1, max_dim), rng.choice(EINSTEIN_CHOICES), rng.randint(-max_exponent, max_exponent))
        for _ in range(rng.randint(1, max_factors))
    ]
    bmax = max_admissible_b(factors)
    if bmax is None:
        bmax = Fraction(2)
    b = bmax * Fraction(rng.randint(1, b_denominator - 1), b_denominator)
    return build_setup(factors, b)


@dataclass
class VerificationReport:
    cases: int = 0
    fits: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def relative_gap(numeric: float, exact: Fraction, scale: float) -> float:
    return abs(numeric - float(exact)) / max(abs(float(exact)), scale)


def check_setup(setup: FibrationSetup, fit: bool = False, cutoff: float = 1e-6, steps: int = 10_000) -> list[str]:
    """Run every invariant on one setup; return failure messages (empty if clean)."""
    failures = []
    tag = f"factors={[(f.dim, str(f.einstein), str(f.exponent)) for f in setup.factors]} b={setup.b}"
    try:
        data = build_momentum_data(setup)
        ext = solve_extremal(data)
        con = solve_cscK_conical(data, require_positive=False)
    except ConekitError as exc:
        return [f"{type(exc).__name__}: {exc} [{tag}]"]

    if not con.positivity.ok:
        failures.append(
            f"PositivityFailure: conical profile has {con.positivity.interior_root_count} "
            f"interior root(s), beta = {con.beta} ~ {float(con.beta):.6g} [{tag}]"
        )

    beta_fut = beta_via_futaki(data, ext)
    if beta_fut != con.beta:
        failures.append(f"main theorem identity: {con.beta} != {beta_fut} [{tag}]")
    if ext.lam == 0 and con.beta != 1:
        failures.append(f"lambda = 0 but beta = {con.beta} [{tag}]")
    if con.beta < 0:
        failures.append(f"beta < 0 [{tag}]")

    num = moments_for_setup(setup)
    exact = (data.A, data.B, data.C, data.int_RQ, data.int_xRQ)
    # odd moments can cancel almost completely; |B| <= bA and |int xRQ| <= b int RQ
    # give the floor against which their rounding error is judged
    floors = (0, data.b * data.A, 0, 0, data.b * data.int_RQ)
    for name, n, e, s in zip(("A", "B", "C", "int RQ", "int xRQ"), num.as_tuple(), exact, floors):
        gap = relative_gap(n, e, float(s))
        if gap > NUMERIC_RTOL:
            failures.append(f"numeric {name} off by {gap:.2e} [{tag}]")

    if fit and con.positivity.ok and con.beta > 0 and 10 * cutoff < float(setup.b):
        try:
            res = fit_cone_exponent(con.phiQ, data, con.beta, cutoff=cutoff, steps=steps)
        except ConekitError as exc:
            failures.append(f"{type(exc).__name__}: {exc} [{tag}]")
        else:
            if res.relative_error > FIT_RTOL:
                failures.append(f"cone exponent fit off by {res.relative_error:.2e} [{tag}]")
    return failures


def run_verification(seed: int = 0, cases: int = 100, fits: int = 10) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport()
    for k in range(cases):
        setup = random_setup(rng)
        do_fit = k < fits
        report.failures.extend(check_setup(setup, fit=do_fit))
        report.cases += 1
        report.fits += do_fit
    return report
