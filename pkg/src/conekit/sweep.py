"""Run configuration, cone-angle sweeps over b, and CSV output."""
from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .asymptotics import fit_cone_exponent
from .errors import ConekitError, InternalInconsistency, ParseError
from .exactalg import as_rational
from .futaki import beta_via_futaki, classical_futaki
from .geometry import KEFactor, build_momentum_data, build_setup
from .profiles import solve_cscK_conical, solve_extremal

CSV_HEADER = "b,beta,sigma0_cscK,lambda_ext,sigma0_ext,positivity_ok,identity_ok,fut_classical,asympt_rel_err"
FIT_CUTOFF = 1e-6
FIT_STEPS = 10_000


@dataclass(frozen=True)
class RunConfig:
    factors: tuple[KEFactor, ...]
    b_values: tuple[Fraction, ...]
    name: str = "conekit"
    vol_M: float = 1.0
    a: Fraction = Fraction(1)
    csv_path: Path | None = None
    svg_path: Path | None = None
    exact_only: bool = False
    seed: int = 0
    sweep: dict = field(default_factory=dict, compare=False)


def _rational_field(raw, name):
    if isinstance(raw, float):
        raise ParseError(f"write exact values as strings like \"1/4\", not the float {raw!r}", field=name)
    try:
        return as_rational(raw)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {raw!r} ({exc})", field=name) from None


def _parse_factor(raw, k):
    name = f"factors[{k}]"
    if isinstance(raw, dict):
        unknown = set(raw) - {"dim", "einstein", "exponent"}
        if unknown:
            raise ParseError(f"unknown keys {sorted(unknown)}", field=name)
        dim, kappa, ell = raw.get("dim"), raw.get("einstein", "1"), raw.get("exponent", "0")
    elif isinstance(raw, list) and len(raw) == 3:
        dim, kappa, ell = raw
    else:
        raise ParseError("expected {dim, einstein, exponent} or a 3-element list", field=name)
    if isinstance(dim, str) and dim.strip().isdigit():
        dim = int(dim)
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise ParseError(f"dim must be an integer, got {dim!r}", field=f"{name}.dim")
    try:
        return KEFactor(dim, _rational_field(kappa, f"{name}.einstein"), _rational_field(ell, f"{name}.exponent"))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), field=name) from None


def sweep_grid(b_min: Fraction, b_max: Fraction, points: int) -> tuple[Fraction, ...]:
    """Exact grid b_min + k (b_max - b_min)/(points - 1)."""
    if points == 1:
        return (b_min,)
    step = (b_max - b_min) / (points - 1)
    return tuple(b_min + k * step for k in range(points))


def parse_config(source, base_dir=None) -> RunConfig:
    """Build a :class:`RunConfig` from JSON text, a path, or an already-loaded dict."""
    if isinstance(source, Path):
        base_dir = base_dir or source.parent
        source = source.read_text(encoding="utf-8")
    if isinstance(source, str):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    else:
        doc = source
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    if doc.get("version") != 1:
        raise ParseError(f"unsupported schema version {doc.get('version')!r}", field="version")

    raw_factors = doc.get("factors")
    if not isinstance(raw_factors, list) or not raw_factors:
        raise ParseError("at least one factor is required", field="factors")
    factors = tuple(_parse_factor(f, k) for k, f in enumerate(raw_factors))

    sweep = doc.get("sweep", {})
    if "b" in doc:
        sweep = {"b": doc["b"]}
    if not isinstance(sweep, dict):
        raise ParseError("expected an object", field="sweep")
    if "b" in sweep:
        b_values = (_rational_field(sweep["b"], "sweep.b"),)
        if b_values[0] <= 0:
            raise ParseError("b must be positive", field="sweep.b")
    else:
        for key in ("b_min", "b_max", "grid_points"):
            if key not in sweep:
                raise ParseError("missing", field=f"sweep.{key}")
        b_min = _rational_field(sweep["b_min"], "sweep.b_min")
        b_max = _rational_field(sweep["b_max"], "sweep.b_max")
        points = sweep["grid_points"]
        if isinstance(points, bool) or not isinstance(points, int) or points < 1:
            raise ParseError(f"must be a positive integer, got {points!r}", field="sweep.grid_points")
        if b_min <= 0:
            raise ParseError("must be positive", field="sweep.b_min")
        if b_max < b_min:
            raise ParseError("must not be below b_min", field="sweep.b_max")
        b_values = sweep_grid(b_min, b_max, points)

    outputs = doc.get("outputs", {}) or {}
    flags = doc.get("flags", {}) or {}
    base = Path(base_dir) if base_dir else Path.cwd()

    def out_path(key):
        p = outputs.get(key)
        return None if p is None else (base / p)

    vol_M = doc.get("vol_M", 1)
    if isinstance(vol_M, str):
        vol_M = float(Fraction(vol_M))
    return RunConfig(
        factors=factors,
        b_values=b_values,
        name=str(doc.get("name", "conekit")),
        vol_M=float(vol_M),
        a=_rational_field(doc.get("a", "1"), "a"),
        csv_path=out_path("csv"),
        svg_path=out_path("svg"),
        exact_only=bool(flags.get("exact_only", False)),
        seed=int(flags.get("seed", 0)),
        sweep=sweep,
    )


@dataclass(frozen=True)
class SweepRow:
    b: Fraction
    beta: Fraction
    sigma0_cscK: Fraction
    lambda_ext: Fraction
    sigma0_ext: Fraction
    positivity_ok: bool
    identity_ok: bool
    fut_classical: float
    asympt_rel_err: float | None


def compute_row(config: RunConfig, b: Fraction) -> SweepRow:
    """One sweep point; raises on degenerate b, non-positive profiles or identity failure."""
    setup = build_setup(config.factors, b, config.vol_M, config.a)
    data = build_momentum_data(setup)
    ext = solve_extremal(data)
    con = solve_cscK_conical(data)
    identity_ok = beta_via_futaki(data, ext) == con.beta
    if not identity_ok:
        raise InternalInconsistency(f"cone angle identity fails at b={b}")
    rel_err = None
    if not config.exact_only and con.beta > 0 and 10 * FIT_CUTOFF < float(b):
        rel_err = fit_cone_exponent(con.phiQ, data, con.beta, FIT_CUTOFF, FIT_STEPS).relative_error
    return SweepRow(
        b=b,
        beta=con.beta,
        sigma0_cscK=con.sigma0_prime,
        lambda_ext=ext.lam,
        sigma0_ext=ext.sigma0,
        positivity_ok=con.positivity.ok and ext.positivity.ok,
        identity_ok=identity_ok,
        fut_classical=classical_futaki(data, ext, config.a, config.vol_M),
        asympt_rel_err=rel_err,
    )


def run_sweep(config: RunConfig) -> list[SweepRow]:
    rows = []
    for b in config.b_values:
        try:
            rows.append(compute_row(config, b))
        except ConekitError as exc:
            # the CLI reports the offending grid point from this attribute
            if getattr(exc, "b", None) is None:
                exc.b = b
            raise
    return rows


def _num(x) -> str:
    if x is None:
        return ""
    x = float(x)
    if math.isnan(x):
        return "nan"
    return repr(x)


def format_csv(rows) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in rows:
        fields = [
            _num(r.b),
            _num(r.beta),
            _num(r.sigma0_cscK),
            _num(r.lambda_ext),
            _num(r.sigma0_ext),
            "true" if r.positivity_ok else "false",
            "true" if r.identity_ok else "false",
            _num(r.fut_classical),
            _num(r.asympt_rel_err),
        ]
        buf.write(",".join(fields) + "\n")
    return buf.getvalue()


def write_csv(rows, path) -> None:
    Path(path).write_bytes(format_csv(rows).encode("utf-8"))
