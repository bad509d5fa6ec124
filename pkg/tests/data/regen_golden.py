"""Regenerate cone_angle_golden.json.

Oracle floats come from ODE shooting (tests/oracles.py); the exact rationals
are then read off the library and stored next to them. Run from tests/:

    python data/regen_golden.py
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))
from oracles import shoot_cone_angle  # noqa: E402

from conekit import build_momentum_data, build_setup, solve_cscK_conical  # noqa: E402

CONFIGS = {"beta_above_one": [(1, 1, -1), (1, 1, 2)], "beta_below_one": [(1, 1, -2), (1, 1, 1)]}
GRID = [Fraction(k, 100) for k in range(1, 50)]

out = {}
for name, factors in CONFIGS.items():
    rows = []
    for b in GRID:
        _, beta_oracle = shoot_cone_angle(factors, b)
        beta = solve_cscK_conical(build_momentum_data(build_setup(factors, b))).beta
        rows.append({"b": str(b), "beta": str(beta), "beta_oracle": float(beta_oracle)})
    out[name] = {"factors": [[d, str(k), str(l)] for d, k, l in factors], "rows": rows}

Path(__file__).with_name("cone_angle_golden.json").write_text(json.dumps(out, indent=1) + "\n")
