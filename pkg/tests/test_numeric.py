from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conekit.errors import DegenerateInterval
from conekit.geometry import build_momentum_data, build_setup
from conekit.numeric import cone_angle_float, extremal_float, moments_for_setup, numeric_moments
from conekit.profiles import solve_extremal
from oracles import quad_moments, shoot_cone_angle
from strategies import setups


@given(setups())
@settings(max_examples=60, deadline=None)
def test_moments_match_exact(setup):
    d = build_momentum_data(setup)
    num = moments_for_setup(setup)
    floors = (0, d.b * d.A, 0, 0, d.b * d.int_RQ)
    for n, e, s in zip(num.as_tuple(), (d.A, d.B, d.C, d.int_RQ, d.int_xRQ), floors):
        assert abs(n - float(e)) <= 1e-10 * float(max(abs(e), s))


def test_moments_match_quadpack(above_factors):
    ours = numeric_moments(build_setup(above_factors, F(2, 5)).factors, 0.4).as_tuple()
    for a, b in zip(ours, quad_moments(above_factors, 0.4)):
        assert a == pytest.approx(b, rel=1e-11)


@pytest.mark.parametrize("b", [0.05, 0.2372, 0.45])
def test_float_cone_angle(below_factors, b):
    assert cone_angle_float(below_factors, b) == pytest.approx(shoot_cone_angle(below_factors, b)[1], rel=1e-9)


def test_float_extremal(above_factors):
    d = build_momentum_data(build_setup(above_factors, F(1, 4)))
    ext = solve_extremal(d)
    sigma, lam = extremal_float(above_factors, 0.25)
    assert sigma == pytest.approx(float(ext.sigma0), rel=1e-12)
    assert lam == pytest.approx(float(ext.lam), rel=1e-12)


def test_float_mode_rejects_bad_b(above_factors):
    with pytest.raises(DegenerateInterval):
        cone_angle_float(above_factors, 0.5)
