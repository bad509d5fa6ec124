"""Acceptance gate. Each test is one criterion; the summary hook in conftest
prints a PASS/FAIL line per test."""
import json
import math
import random
import time
from fractions import Fraction as F
from pathlib import Path

import pytest
from oracles import shoot_cone_angle

from conekit import (
    RationalPoly,
    build_momentum_data,
    build_setup,
    fit_cone_exponent,
    solve_cscK_conical,
    solve_extremal,
    volume_functional,
)
from conekit.checks import relative_gap, random_setup
from conekit.futaki import beta_via_futaki
from conekit.numeric import moments_for_setup
from conekit.sweep import parse_config

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = json.loads((ROOT / "tests" / "data" / "cone_angle_golden.json").read_text())
SEEDS = range(10)


def solve(setup):
    data = build_momentum_data(setup)
    return data, solve_extremal(data), solve_cscK_conical(data, require_positive=False)


def random_setups(seed, cases=100):
    rng = random.Random(seed)
    return [random_setup(rng) for _ in range(cases)]


@pytest.fixture(scope="module")
def random_solutions():
    return {seed: [solve(s) for s in random_setups(seed)] for seed in SEEDS}


def config_solutions(name):
    cfg = parse_config(ROOT / "configs" / f"{name}.json")
    return [solve(build_setup(cfg.factors, b, cfg.vol_M, cfg.a)) for b in cfg.b_values]


def test_c1_main_theorem_identity_exact():
    start = time.perf_counter()
    mismatches = []
    for setup in random_setups(0):
        data, ext, con = solve(setup)
        if beta_via_futaki(data, ext) != con.beta:
            mismatches.append(setup)
    elapsed = time.perf_counter() - start
    assert not mismatches
    assert elapsed < 5.0, f"{elapsed:.2f} s"


@pytest.mark.parametrize("name, in_band", [
    ("beta_above_one", lambda beta: beta > 1),
    ("beta_below_one", lambda beta: F(1, 4) < beta < 1),
], ids=["c2_beta_above_one", "c3_beta_below_one_band"])
def test_c2_c3_cone_angle_curves(name, in_band):
    sols = config_solutions(name)
    golden = GOLDEN[name]["rows"]
    assert len(sols) == len(golden) == 49
    for (data, _, con), row in zip(sols, golden):
        assert data.b == F(row["b"])
        assert in_band(con.beta), f"b={data.b} beta={float(con.beta)}"
        assert con.positivity.ok
        assert con.beta == F(row["beta"])
        assert float(con.beta) == pytest.approx(row["beta_oracle"], rel=1e-10)
    # independent shooting solve at a few points
    factors = GOLDEN[name]["factors"]
    for row in golden[::12]:
        assert shoot_cone_angle(factors, float(F(row["b"])))[1] == pytest.approx(float(F(row["beta"])), rel=1e-8)


def test_c4_trivial_bundle():
    for factors in ([(1, 1, 0), (1, 1, 0)], [(2, F(1, 2), 0)], [(1, 2, 0), (3, 1, 0), (2, F(1, 2), 0)]):
        for b in (F(1, 3), F(1), F(5, 2)):
            data, ext, con = solve(build_setup(factors, b))
            assert ext.lam == 0 and con.beta == 1
            assert con.phiQ == ext.phiQ and con.sigma0_prime == ext.sigma0
    data, ext, con = solve(build_setup([(1, 1, 0), (1, 1, 0)], 1))
    assert con.sigma0_prime == 3
    assert con.phiQ == RationalPoly([1, 0, -1])


def _identity_failures(data, ext, con):
    Q, RQ, b = data.Q, data.RQ, data.b
    out = []
    if 2 * RQ - ext.phiQ.derivative().derivative() != 2 * RationalPoly([ext.sigma0, ext.lam]) * Q:
        out.append("extremal ODE")
    if 2 * RQ - con.phiQ.derivative().derivative() != 2 * con.sigma0_prime * Q:
        out.append("conical ODE")
    ext_beta = 1  # the extremal profile is smooth at both ends
    for label, phiQ, beta in (("extremal", ext.phiQ, ext_beta), ("conical", con.phiQ, con.beta)):
        d = phiQ.derivative()
        if phiQ(-b) != 0 or phiQ(b) != 0:
            out.append(f"{label} endpoint value")
        if d(-b) != 2 * Q(-b):
            out.append(f"{label} slope at -b")
        if d(b) != -2 * beta * Q(b):
            out.append(f"{label} slope at b")
    return out


def test_c5_exact_identities(random_solutions):
    solutions = [s for sols in random_solutions.values() for s in sols]
    for name in ("beta_below_one", "beta_above_one", "trivial"):
        solutions += config_solutions(name)
    bad = []
    for data, ext, con in solutions:
        fails = _identity_failures(data, ext, con)
        if fails:
            bad.append((data.b, fails))
    assert not bad


def _describe(data):
    return f"{[(f.dim, str(f.einstein), str(f.exponent)) for f in data.setup.factors]} b={data.b}"


@pytest.mark.parametrize("check", ["AC-B2", "bA-B", "beta", "roots"], ids=[
    "c6a_cauchy_schwarz", "c6b_bA_minus_B", "c6c_beta_nonnegative", "c6d_no_interior_roots",
])
def test_c6_structural_inequalities(random_solutions, check):
    bad = []
    for seed, sols in random_solutions.items():
        for data, _, con in sols:
            ok = {
                "AC-B2": data.A * data.C - data.B**2 > 0,
                "bA-B": data.b * data.A - data.B > 0,
                "beta": con.beta >= 0,
                "roots": con.positivity.interior_root_count == 0,
            }[check]
            if not ok:
                bad.append(f"seed {seed}: {_describe(data)} beta={float(con.beta):.4g}")
    total = sum(len(s) for s in random_solutions.values())
    assert not bad, f"{len(bad)} of {total} setups violate {check}; first: {bad[0]}"


def test_c7_numeric_vs_exact_moments():
    worst = 0.0
    for name in ("beta_below_one", "beta_above_one", "trivial"):
        cfg = parse_config(ROOT / "configs" / f"{name}.json")
        for b in cfg.b_values:
            setup = build_setup(cfg.factors, b)
            data = build_momentum_data(setup)
            num = moments_for_setup(setup).as_tuple()
            exact = (data.A, data.B, data.C, data.int_RQ, data.int_xRQ)
            # odd moments may vanish exactly (B = 0 for Q = 1); judge them against bA and b int RQ
            floors = (0, data.b * data.A, 0, 0, data.b * data.int_RQ)
            for n, e, s in zip(num, exact, floors):
                worst = max(worst, relative_gap(n, e, float(s)))
    assert worst <= 1e-10, worst


@pytest.mark.parametrize("factors, b", [
    ([(1, 1, -2), (1, 1, 1)], F(1, 4)),
    ([(1, 1, 0), (1, 1, 0)], F(1)),
], ids=["c8_fit_beta_below_one_b_quarter", "c8_fit_trivial"])
def test_c8_cone_exponent_fit(factors, b):
    data, _, con = solve(build_setup(factors, b))
    start = time.perf_counter()
    fit = fit_cone_exponent(con.phiQ, data, con.beta, cutoff=1e-6, steps=10_000)
    elapsed = time.perf_counter() - start
    assert fit.relative_error < 0.01
    assert fit.slope_fitted == pytest.approx(1 / (2 * float(con.beta)), rel=0.01)
    assert elapsed < 2.0, f"{elapsed:.2f} s"


def test_c9_volume_functional():
    one = RationalPoly([1])
    for factors, b, vol in (([(1, 1, -2), (1, 1, 1)], F(1, 4), 2.5), ([(2, F(1, 2), 3)], F(1, 5), 1.0)):
        data = build_momentum_data(build_setup(factors, b, vol))
        assert volume_functional(data, one, vol) == pytest.approx(2 * math.pi * vol * float(data.A), rel=1e-14)
    data = build_momentum_data(build_setup([(1, 1, 0)], 1))
    assert data.Q == one
    assert abs(volume_functional(data, one, 1.0) - 4 * math.pi) <= 1e-12 * 4 * math.pi
