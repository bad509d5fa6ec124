"""Momentum-constructed extremal and conical cscK metrics on P(F + C).

Typical use::

    from conekit import build_setup, build_momentum_data, solve_cscK_conical

    data = build_momentum_data(build_setup([(1, 1, -1), (1, 1, 2)], "1/4"))
    solve_cscK_conical(data).beta   # Fraction(542, 375)
"""
from .asymptotics import AsymptoticFit, fit_cone_exponent
from .errors import (
    ConekitError,
    DegenerateDenominator,
    DegenerateInterval,
    FloatOverflow,
    InternalInconsistency,
    InvalidInterval,
    NonPositiveProfile,
    ParseError,
    PoleAtTau,
    PositivityFailure,
    ZeroPolynomial,
)
from .exactalg import (
    RationalPoly,
    count_roots_in_open_interval,
    definite_integral,
    differentiate,
    double_antiderivative_from,
    eval_float,
    poly_arith,
)
from .futaki import (
    FutakiReport,
    beta_via_futaki,
    classical_futaki,
    futaki_report,
    log_futaki,
    verify_main_theorem,
    volume_functional,
)
from .geometry import FibrationSetup, KEFactor, MomentumData, build_momentum_data, build_setup, eval_R
from .numeric import cone_angle_float, numeric_moments
from .profiles import (
    ConicalSolution,
    ExtremalSolution,
    sample_profile,
    scalar_curvature,
    solve_cscK_conical,
    solve_extremal,
)

__version__ = "0.1.0"
