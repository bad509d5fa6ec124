"""Base data for line bundles over products of Kähler-Einstein Fano factors.

Each factor M_i (complex dimension n_i, Ric = kappa_i * omega_i) contributes a
linear scaling s_i(tau) = 1 - tau * l_i * kappa_i of its Kähler form along the
momentum interval, so that

    Q(tau)  = prod_i s_i(tau)^{n_i}
    RQ(tau) = sum_i n_i kappa_i s_i(tau)^{n_i - 1} prod_{j != i} s_j(tau)^{n_j}.

The curvature endomorphism has eigenvalue l_i * kappa_i on the i-th factor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateInterval, InternalInconsistency, ParseError, PoleAtTau
from .exactalg import RationalPoly, as_rational, count_roots_in_open_interval, definite_integral


@dataclass(frozen=True)
class KEFactor:
    """One Kähler-Einstein Fano factor: dimension, Einstein constant, bundle exponent."""

    dim: int
    einstein: Fraction = Fraction(1)
    exponent: Fraction = Fraction(0)

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"factor dimension must be a positive integer, got {self.dim!r}")
        object.__setattr__(self, "einstein", as_rational(self.einstein))
        object.__setattr__(self, "exponent", as_rational(self.exponent))
        if self.einstein <= 0:
            raise ValueError(f"Einstein constant must be positive (Fano), got {self.einstein}")

    @property
    def eigenvalue(self) -> Fraction:
        return self.exponent * self.einstein

    @property
    def scaling(self) -> RationalPoly:
        return RationalPoly([1, -self.eigenvalue])


def _as_factor(f) -> KEFactor:
    if isinstance(f, KEFactor):
        return f
    if isinstance(f, dict):
        return KEFactor(int(f["dim"]), f.get("einstein", 1), f.get("exponent", 0))
    dim, einstein, exponent = f
    return KEFactor(int(dim), einstein, exponent)


def max_admissible_b(factors) -> Fraction | None:
    """Supremum of admissible half-widths, or None when every exponent is zero."""
    eig = [abs(_as_factor(f).eigenvalue) for f in factors]
    eig = [e for e in eig if e != 0]
    return 1 / max(eig) if eig else None


@dataclass(frozen=True)
class FibrationSetup:
    factors: tuple[KEFactor, ...]
    b: Fraction
    vol_M: float = 1.0
    a: Fraction = Fraction(1)

    @property
    def base_dim(self) -> int:
        """Complex dimension n - 1 of the base."""
        return sum(f.dim for f in self.factors)

    @property
    def max_b(self) -> Fraction | None:
        return max_admissible_b(self.factors)

    @property
    def scalings(self) -> list[RationalPoly]:
        return [f.scaling for f in self.factors]

    @property
    def eigenvalues(self) -> list[tuple[Fraction, int]]:
        """(eigenvalue, multiplicity) of the curvature endomorphism per factor."""
        return [(f.eigenvalue, f.dim) for f in self.factors]


def build_setup(factors, b, vol_M=1.0, a=1) -> FibrationSetup:
    factors = tuple(_as_factor(f) for f in factors)
    if not factors:
        raise ParseError("at least one factor is required", field="factors")
    b = as_rational(b)
    if b <= 0:
        raise DegenerateInterval(f"half-width must be positive, got b={b}", b=b)
    a = as_rational(a)
    if a == 0:
        raise ValueError("potential scale a must be nonzero")
    vol_M = float(vol_M)
    if not vol_M > 0:
        raise ValueError(f"base volume must be positive, got {vol_M}")
    bmax = max_admissible_b(factors)
    if bmax is not None and b >= bmax:
        raise DegenerateInterval(
            f"b={b} leaves the admissible range; a scaling factor vanishes on "
            f"[-b, b] unless b < {bmax}",
            b=b,
            max_b=bmax,
        )
    return FibrationSetup(factors, b, vol_M, a)


def build_setup_float(factors, b: float, vol_M=1.0, a=1.0) -> tuple[tuple[KEFactor, ...], float]:
    """Validate a float half-width for the numeric backend (no exact rounding)."""
    factors = tuple(_as_factor(f) for f in factors)
    if not factors:
        raise ParseError("at least one factor is required", field="factors")
    b = float(b)
    bmax = max_admissible_b(factors)
    if not b > 0 or (bmax is not None and b >= float(bmax)):
        raise DegenerateInterval(f"b={b} is not admissible (max {bmax})", b=b, max_b=bmax)
    return factors, b


@dataclass(frozen=True)
class MomentumData:
    Q: RationalPoly
    RQ: RationalPoly
    A: Fraction
    B: Fraction
    C: Fraction
    int_RQ: Fraction
    int_xRQ: Fraction
    b: Fraction
    setup: FibrationSetup | None = field(default=None, compare=False)

    @property
    def tau_bar(self) -> Fraction:
        return self.B / self.A

    @property
    def Q_minus(self) -> Fraction:
        return self.Q(-self.b)

    @property
    def Q_plus(self) -> Fraction:
        return self.Q(self.b)


def momentum_polynomials(factors) -> tuple[RationalPoly, RationalPoly]:
    """Exact Q and RQ for a list of factors."""
    factors = [_as_factor(f) for f in factors]
    powers = [f.scaling ** f.dim for f in factors]
    Q = RationalPoly([1])
    for p in powers:
        Q = Q * p
    RQ = RationalPoly()
    for i, f in enumerate(factors):
        term = f.scaling ** (f.dim - 1) * (f.dim * f.einstein)
        for j, p in enumerate(powers):
            if j != i:
                term = term * p
        RQ = RQ + term
    return Q, RQ


def build_momentum_data(setup: FibrationSetup) -> MomentumData:
    b = setup.b
    Q, RQ = momentum_polynomials(setup.factors)
    x = RationalPoly.monomial(1)
    A = definite_integral(Q, -b, b)
    B = definite_integral(x * Q, -b, b)
    C = definite_integral(x * x * Q, -b, b)
    data = MomentumData(
        Q=Q,
        RQ=RQ,
        A=A,
        B=B,
        C=C,
        int_RQ=definite_integral(RQ, -b, b),
        int_xRQ=definite_integral(x * RQ, -b, b),
        b=b,
        setup=setup,
    )
    _check_momentum_invariants(data)
    return data


def _check_momentum_invariants(data: MomentumData) -> None:
    b = data.b
    if data.Q(-b) <= 0 or data.Q(b) <= 0 or count_roots_in_open_interval(data.Q, -b, b):
        raise DegenerateInterval(f"Q is not positive on [-{b}, {b}]", b=b)
    if not data.A > 0:
        raise InternalInconsistency(f"A = {data.A} is not positive")
    if not data.A * data.C - data.B**2 > 0:
        raise InternalInconsistency("AC - B^2 is not positive")
    if not b * data.A - data.B > 0:
        raise InternalInconsistency("bA - B is not positive")


def eval_R(data: MomentumData, tau) -> Fraction:
    """R(tau) = RQ(tau) / Q(tau), exactly."""
    tau = as_rational(tau)
    q = data.Q(tau)
    if q == 0:
        raise PoleAtTau(f"Q vanishes at tau={tau}")
    return data.RQ(tau) / q
