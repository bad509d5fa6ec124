import math

import numpy as np
import pytest
from scipy.integrate import quad

from conekit.quadrature import adaptive_gauss_legendre, composite_gauss_legendre


@pytest.mark.parametrize(
    "f, lo, hi, exact",
    [
        (np.exp, 0.0, 1.0, math.e - 1),
        (np.sin, 0.0, math.pi, 2.0),
        (lambda t: 1.0 / (1.0 + t * t), -5.0, 5.0, 2 * math.atan(5.0)),
        (lambda t: np.sqrt(np.abs(t)), -1.0, 1.0, 4.0 / 3.0),
    ],
)
def test_adaptive_known_integrals(f, lo, hi, exact):
    val, err = adaptive_gauss_legendre(f, lo, hi, rtol=1e-12)
    assert val == pytest.approx(exact, rel=1e-10)


def test_adaptive_reversed_and_empty():
    assert adaptive_gauss_legendre(np.exp, 1.0, 1.0) == (0.0, 0.0)
    fwd, _ = adaptive_gauss_legendre(np.exp, 0.0, 2.0)
    back, _ = adaptive_gauss_legendre(np.exp, 2.0, 0.0)
    assert back == -fwd


def test_adaptive_agrees_with_quadpack():
    f = lambda t: np.cos(7 * t) * np.exp(-t * t)  # noqa: E731
    assert adaptive_gauss_legendre(f, -3, 2, rtol=1e-13)[0] == pytest.approx(quad(f, -3, 2, epsabs=0, epsrel=1e-10, limit=200)[0], rel=1e-10)


def test_odd_integrand_with_zero_total():
    val, _ = adaptive_gauss_legendre(lambda t: t**3, -1.0, 1.0)
    assert abs(val) < 1e-15


def test_composite_exact_for_polynomials():
    # 4-point rule is exact through degree 7
    assert composite_gauss_legendre(lambda t: t**7 + t**2, 0.0, 2.0, panels=3, order=4) == pytest.approx(2**8 / 8 + 8 / 3, rel=1e-14)
