"""Command-line front end.

Subcommands: ``simulate`` (one width trajectory), ``thermal`` (a width
profile over an inverse-temperature grid), ``sweep`` (repeat a task over
one or two parameter grids), ``equilibrium`` (closed-form equilibrium
widths), ``verify`` (self-check suites), ``plot`` (re-render a CSV as an
SVG chart).

Run configuration is a single JSON document; unknown keys are rejected
by name so typos never pass silently.  Exit codes: 0 success, 1 bad
configuration or usage, 2 integration stopped before the requested end
time, 3 verification failure.  Data files carry no timestamps and are
byte-identical across repeated runs of the same configuration.
"""

import argparse
import copy
import itertools
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import analytic, core, integrators, output, thermal, verification
from .core import PhysicalParams, State, State3
from .integrators import IntegratorConfig, Scheme, StopReason
from .models import ModelVariant, OVERDAMPED_VARIANTS
from .thermal import BetaGrid, ThermalField, ThermalVariant

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_STOPPED = 2
EXIT_VERIFY = 3

_SCHEMES = {
    "explicit-adaptive": Scheme.DOPRI54,
    "implicit-a-stable": Scheme.TRBDF2,
}
_MODEL_NAMES = {variant.value: variant for variant in ModelVariant}
_THERMAL_NAMES = {variant.value: variant for variant in ThermalVariant}


class ConfigError(ValueError):
    """Configuration problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # Usage mistakes are configuration errors, not integration stops,
    # so bad flags must not exit with argparse's default code 2.
    def error(self, message):
        raise ConfigError(message)


# ------------------------------------------------------------- parsing

def _mapping(obj, where: str) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(f"{where} must be a JSON object")
    return obj


def _check_keys(section: dict, allowed: Sequence[str], where: str) -> None:
    for key in section:
        if key not in allowed:
            raise ConfigError(f"unknown key: {where}.{key}" if where
                              else f"unknown key: {key}")


def _need(section: dict, key: str, where: str):
    if key not in section:
        raise ConfigError(f"missing key: {where}.{key}" if where
                          else f"missing key: {key}")
    return section[key]


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where} must be a number")
    return float(value)


def _integer(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where} must be an integer")
    return value


def _load_config(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}")
    return _mapping(obj, "config")


def _parse_params(obj: Optional[dict], where: str = "params"
                  ) -> PhysicalParams:
    if obj is None:
        return PhysicalParams()
    _mapping(obj, where)
    if "natural" in obj:
        _check_keys(obj, ("natural",), where)
        nat = _mapping(obj["natural"], f"{where}.natural")
        _check_keys(nat, ("friction", "temperature", "radiation"),
                    f"{where}.natural")
        return core.make_natural_params(
            gamma=_number(nat.get("friction", 0.0),
                          f"{where}.natural.friction"),
            theta=_number(nat.get("temperature", 0.0),
                          f"{where}.natural.temperature"),
            epsilon=_number(nat.get("radiation", 0.0),
                            f"{where}.natural.radiation"))
    _check_keys(obj, ("m", "omega0", "hbar", "b", "beta", "k_B", "r"), where)
    kwargs = {}
    for key, value in obj.items():
        if key == "beta" and value == "zero-temperature":
            kwargs[key] = core.ZERO_TEMPERATURE
        else:
            kwargs[key] = _number(value, f"{where}.{key}")
    try:
        return PhysicalParams(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}")


def _parse_integrator(obj: Optional[dict]) -> IntegratorConfig:
    if obj is None:
        return IntegratorConfig()
    _mapping(obj, "integrator")
    _check_keys(obj, ("scheme", "rel_tol", "abs_tol", "h_init", "h_min",
                      "h_max", "max_steps", "sigma_min_guard",
                      "runaway_ratio"), "integrator")
    kwargs: Dict[str, object] = {}
    for key, value in obj.items():
        if key == "scheme":
            if value not in _SCHEMES:
                raise ConfigError(
                    "integrator.scheme must be one of "
                    + ", ".join(sorted(_SCHEMES)))
            kwargs[key] = _SCHEMES[value]
        elif key == "max_steps":
            kwargs[key] = _integer(value, "integrator.max_steps")
        else:
            kwargs[key] = _number(value, f"integrator.{key}")
    try:
        return IntegratorConfig(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"integrator: {exc}")


def _parse_span(value, where: str = "t_span") -> Tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise ConfigError(f"{where} must be a two-element list [t0, t1]")
    t0 = _number(value[0], f"{where}[0]")
    t1 = _number(value[1], f"{where}[1]")
    if not (math.isfinite(t0) and math.isfinite(t1) and t1 > t0):
        raise ConfigError(f"{where} must be finite with t1 > t0")
    return t0, t1


def _parse_samples(cfg: dict) -> int:
    samples = _integer(cfg.get("samples", 201), "samples")
    if samples < 2:
        raise ConfigError("samples must be at least 2")
    return samples


def _parse_output(obj: Optional[dict], default_csv: str) -> Dict[str, str]:
    names = {"csv": default_csv, "svg": None, "summary": "summary.json"}
    if obj is None:
        return names
    _mapping(obj, "output")
    _check_keys(obj, ("csv", "svg", "summary"), "output")
    for key, value in obj.items():
        if not isinstance(value, str) or not value:
            raise ConfigError(f"output.{key} must be a non-empty file name")
        names[key] = value
    return names


def _parse_simulate(cfg: dict) -> dict:
    _check_keys(cfg, ("model", "params", "initial", "t_span", "samples",
                      "integrator", "output"), "")
    model = _need(cfg, "model", "")
    if model not in _MODEL_NAMES:
        raise ConfigError("model must be one of "
                          + ", ".join(sorted(_MODEL_NAMES)))
    variant = _MODEL_NAMES[model]
    params = _parse_params(cfg.get("params"))
    initial_obj = _mapping(_need(cfg, "initial", ""), "initial")
    if variant in OVERDAMPED_VARIANTS:
        _check_keys(initial_obj, ("sigma",), "initial")
        initial = _number(_need(initial_obj, "sigma", "initial"),
                          "initial.sigma")
    else:
        allowed = ("sigma", "sigma_dot", "sigma_ddot") \
            if variant is ModelVariant.RADIATIVE_NAIVE \
            else ("sigma", "sigma_dot")
        _check_keys(initial_obj, allowed, "initial")
        sigma = _number(_need(initial_obj, "sigma", "initial"),
                        "initial.sigma")
        sigma_dot = _number(initial_obj.get("sigma_dot", 0.0),
                            "initial.sigma_dot")
        if "sigma_ddot" in initial_obj:
            initial = State3(sigma, sigma_dot,
                             _number(initial_obj["sigma_ddot"],
                                     "initial.sigma_ddot"))
        else:
            initial = State(sigma, sigma_dot)
    return {
        "variant": variant,
        "params": params,
        "initial": initial,
        "t_span": _parse_span(_need(cfg, "t_span", "")),
        "samples": _parse_samples(cfg),
        "integrator": _parse_integrator(cfg.get("integrator")),
        "output": _parse_output(cfg.get("output"), "trajectory.csv"),
    }


def _parse_profile(obj: Optional[dict]) -> dict:
    if obj is None:
        return {"kind": "coth"}
    _mapping(obj, "profile")
    kind = _need(obj, "kind", "profile")
    if kind == "coth":
        _check_keys(obj, ("kind",), "profile")
        return {"kind": "coth"}
    if kind == "scaled-coth":
        _check_keys(obj, ("kind", "factor"), "profile")
        factor = _number(_need(obj, "factor", "profile"), "profile.factor")
        if not factor > 0.0:
            raise ConfigError("profile.factor must be positive")
        return {"kind": "scaled-coth", "factor": factor}
    if kind == "constant":
        _check_keys(obj, ("kind", "value"), "profile")
        value = _number(_need(obj, "value", "profile"), "profile.value")
        if not value > 0.0:
            raise ConfigError("profile.value must be positive")
        return {"kind": "constant", "value": value}
    if kind == "file":
        _check_keys(obj, ("kind", "path"), "profile")
        path = _need(obj, "path", "profile")
        if not isinstance(path, str):
            raise ConfigError("profile.path must be a string")
        return {"kind": "file", "path": path}
    raise ConfigError("profile.kind must be one of coth, scaled-coth, "
                      "constant, file")


def _parse_thermal(cfg: dict) -> dict:
    _check_keys(cfg, ("variant", "params", "grid", "profile", "t_span",
                      "samples", "integrator", "output"), "")
    name = _need(cfg, "variant", "")
    if name not in _THERMAL_NAMES:
        raise ConfigError("variant must be one of "
                          + ", ".join(sorted(_THERMAL_NAMES)))
    grid_obj = _mapping(_need(cfg, "grid", ""), "grid")
    _check_keys(grid_obj, ("beta_min", "beta_max", "beta_count"), "grid")
    try:
        grid = BetaGrid.from_range(
            _number(_need(grid_obj, "beta_min", "grid"), "grid.beta_min"),
            _number(_need(grid_obj, "beta_max", "grid"), "grid.beta_max"),
            _integer(_need(grid_obj, "beta_count", "grid"),
                     "grid.beta_count"))
    except ValueError as exc:
        raise ConfigError(f"grid: {exc}")
    params = _parse_params(cfg.get("params"))
    if params.is_zero_temperature:
        # The grid supplies per-node temperatures; the scalar slot only
        # has to be finite, so borrow the coldest node.
        params = params.with_(beta=grid.beta_max)
    return {
        "variant": _THERMAL_NAMES[name],
        "params": params,
        "grid": grid,
        "profile": _parse_profile(cfg.get("profile")),
        "t_span": _parse_span(_need(cfg, "t_span", "")),
        "samples": _parse_samples(cfg),
        "integrator": _parse_integrator(cfg.get("integrator")),
        "output": _parse_output(cfg.get("output"), "thermal.csv"),
    }


def _parse_equilibrium(cfg: dict) -> dict:
    _check_keys(cfg, ("params", "output"), "")
    params = _parse_params(cfg.get("params"))
    if params.is_zero_temperature:
        raise ConfigError("equilibrium closed forms need a finite "
                          "params.beta")
    if params.omega0 <= 0.0:
        raise ConfigError("equilibrium closed forms need params.omega0 > 0")
    return {
        "params": params,
        "output": _parse_output(cfg.get("output"), "equilibrium.csv"),
    }


# ------------------------------------------------------------- running

_TRAJECTORY_HEADER = ("t", "sigma", "sigma_dot", "energy")
_THERMAL_HEADER = ("t", "beta", "sigma", "sigma_dot")
_EQUILIBRIUM_HEADER = ("sigma_ground", "sigma_coth",
                       "sigma_high_temperature")


def _energy_column(sigma: np.ndarray, sigma_dot: np.ndarray,
                   params: PhysicalParams) -> np.ndarray:
    return (0.5 * params.m * sigma_dot ** 2
            + 0.5 * params.m * params.omega0 ** 2 * sigma ** 2
            + params.hbar ** 2 / (8.0 * params.m * sigma ** 2))


def _run_trajectory(parsed: dict):
    """Integrate one width model; returns (rows, trajectory, reason)."""
    t0, t1 = parsed["t_span"]
    if parsed["variant"] in OVERDAMPED_VARIANTS:
        traj, reason = integrators.integrate_overdamped(
            parsed["variant"], parsed["initial"], (t0, t1),
            parsed["params"], parsed["integrator"])
    else:
        traj, reason = integrators.integrate(
            parsed["variant"], parsed["initial"], (t0, t1),
            parsed["params"], parsed["integrator"])
    ts = np.linspace(t0, float(traj.times[-1]), parsed["samples"])
    got = traj.sample(ts)
    energy = _energy_column(got[:, 0], got[:, 1], parsed["params"])
    rows = [(float(t), float(row[0]), float(row[1]), float(e))
            for t, row, e in zip(ts, got, energy)]
    return rows, traj, reason


def _initial_profile(parsed: dict) -> np.ndarray:
    grid, profile = parsed["grid"], parsed["profile"]
    if profile["kind"] in ("coth", "scaled-coth"):
        base = thermal.equilibrium_profile_coth(grid, parsed["params"]).sigma
        return profile.get("factor", 1.0) * base
    if profile["kind"] == "constant":
        return np.full(grid.count, profile["value"])
    try:
        values = np.array([float(line) for line in
                           Path(profile["path"]).read_text().split()])
    except (OSError, ValueError) as exc:
        raise ConfigError(f"profile.path: {exc}")
    if values.shape != (grid.count,):
        raise ConfigError(
            f"profile.path holds {values.size} widths, grid has "
            f"{grid.count} nodes")
    if not np.all(values > 0.0):
        raise ConfigError("profile.path widths must be positive")
    return values


def _run_thermal(parsed: dict):
    """Integrate a thermal field; returns (rows, trajectory, reason)."""
    grid = parsed["grid"]
    field0 = ThermalField.at_rest(grid, _initial_profile(parsed))
    t0, t1 = parsed["t_span"]
    traj, reason = thermal.integrate_thermal(
        parsed["variant"], field0, (t0, t1), parsed["params"],
        parsed["integrator"])
    ts = np.linspace(t0, float(traj.times[-1]), parsed["samples"])
    got = traj.sample(ts)
    nodes = grid.nodes
    n = grid.count
    rows = []
    for it, t in enumerate(ts):
        for j in range(n):
            rows.append((float(t), float(nodes[j]), float(got[it, j]),
                         float(got[it, n + j])))
    return rows, traj, reason


def _run_equilibrium(params: PhysicalParams) -> Tuple[float, float, float]:
    return (core.ground_state_sigma(params),
            math.sqrt(analytic.equilibrium_coth(params)),
            math.sqrt(analytic.equilibrium_high_temperature(params)))


def _out_path(out_dir: str, name: str) -> Path:
    path = Path(out_dir) / name
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _say(quiet: bool, message: str) -> None:
    if not quiet:
        print(message)


# ------------------------------------------------------------ commands

def _cmd_simulate(args) -> int:
    parsed = _parse_simulate(_load_config(args.config))
    rows, traj, reason = _run_trajectory(parsed)
    names = parsed["output"]
    csv_path = _out_path(args.out, names["csv"])
    output.write_csv(csv_path, _TRAJECTORY_HEADER, rows)
    if names["svg"]:
        xs = np.array([r[0] for r in rows])
        svg = output.polyline_chart(
            xs, [("sigma", np.array([r[1] for r in rows]))],
            parsed["variant"].value, "t", "sigma")
        _out_path(args.out, names["svg"]).write_text(svg, encoding="ascii")
    summary = {
        "command": "simulate",
        "model": parsed["variant"].value,
        "stop_reason": reason.value,
        "t_requested": list(parsed["t_span"]),
        "t_reached": float(traj.times[-1]),
        "rows": len(rows),
        "csv": names["csv"],
        "svg": names["svg"],
        "sigma_final": rows[-1][1],
        "sigma_dot_final": rows[-1][2],
        "energy_final": rows[-1][3],
        "steps_accepted": traj.n_accepted,
        "steps_rejected": traj.n_rejected,
        "rhs_evaluations": traj.n_rhs,
    }
    output.write_json(_out_path(args.out, names["summary"]), summary)
    _say(args.quiet, f"wrote {csv_path} ({len(rows)} rows), "
         f"stop reason {reason.value}")
    return EXIT_OK if reason is StopReason.COMPLETED else EXIT_STOPPED


def _cmd_thermal(args) -> int:
    parsed = _parse_thermal(_load_config(args.config))
    rows, traj, reason = _run_thermal(parsed)
    names = parsed["output"]
    csv_path = _out_path(args.out, names["csv"])
    output.write_csv(csv_path, _THERMAL_HEADER, rows)
    grid = parsed["grid"]
    if names["svg"]:
        ts = np.array(sorted({r[0] for r in rows}))
        sig = np.array([r[2] for r in rows]).reshape(ts.size, grid.count)
        picks = (0, grid.count // 2, grid.count - 1)
        series = [(f"beta={grid.nodes[j]:.5g}", sig[:, j]) for j in picks]
        svg = output.polyline_chart(ts, series, parsed["variant"].value,
                                    "t", "sigma")
        _out_path(args.out, names["svg"]).write_text(svg, encoding="ascii")
    summary = {
        "command": "thermal",
        "variant": parsed["variant"].value,
        "stop_reason": reason.value,
        "t_requested": list(parsed["t_span"]),
        "t_reached": float(traj.times[-1]),
        "beta_min": grid.beta_min,
        "beta_max": grid.beta_max,
        "beta_count": grid.count,
        "profile": parsed["profile"]["kind"],
        "rows": len(rows),
        "csv": names["csv"],
        "svg": names["svg"],
        "steps_accepted": traj.n_accepted,
        "steps_rejected": traj.n_rejected,
        "rhs_evaluations": traj.n_rhs,
    }
    output.write_json(_out_path(args.out, names["summary"]), summary)
    _say(args.quiet, f"wrote {csv_path} ({len(rows)} rows), "
         f"stop reason {reason.value}")
    return EXIT_OK if reason is StopReason.COMPLETED else EXIT_STOPPED


def _cmd_equilibrium(args) -> int:
    parsed = _parse_equilibrium(_load_config(args.config))
    row = _run_equilibrium(parsed["params"])
    for name, value in zip(_EQUILIBRIUM_HEADER, row):
        _say(args.quiet, f"{name} = {output.format_float(value)}")
    names = parsed["output"]
    csv_path = _out_path(args.out, names["csv"])
    output.write_csv(csv_path, _EQUILIBRIUM_HEADER, [row])
    summary = {
        "command": "equilibrium",
        "csv": names["csv"],
        "beta": parsed["params"].beta,
        "sigma_ground": row[0],
        "sigma_coth": row[1],
        "sigma_high_temperature": row[2],
    }
    output.write_json(_out_path(args.out, names["summary"]), summary)
    return EXIT_OK


def _set_by_path(cfg: dict, path: str, value: float) -> None:
    parts = path.split(".")
    node = cfg
    for part in parts[:-1]:
        node = node.setdefault(part, {})
        if not isinstance(node, dict):
            raise ConfigError(
                f"sweep path {path!r} does not address a config entry")
    node[parts[-1]] = value


_SWEEP_TASKS = ("simulate", "thermal", "equilibrium")


def _cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    task = _need(cfg, "task", "")
    if task not in _SWEEP_TASKS:
        raise ConfigError("task must be one of " + ", ".join(_SWEEP_TASKS))
    sweep_obj = _mapping(_need(cfg, "sweep", ""), "sweep")
    if not 1 <= len(sweep_obj) <= 2:
        raise ConfigError("sweep takes one or two swept parameters")
    names = sorted(sweep_obj)
    grids = []
    for name in names:
        values = sweep_obj[name]
        if not isinstance(values, list) or not values:
            raise ConfigError(f"sweep.{name} must be a non-empty list")
        grids.append(sorted(_number(v, f"sweep.{name}") for v in values))
    out_names = _parse_output(cfg.get("output"), "sweep.csv")
    base = {k: v for k, v in cfg.items()
            if k not in ("task", "sweep", "output")}

    # Parse once up front so configuration errors surface before any
    # point runs, then re-parse per point with the swept values set.
    def _materialise(point):
        local = copy.deepcopy(base)
        for name, value in zip(names, point):
            _set_by_path(local, name, value)
        return local

    points = list(itertools.product(*grids))

    def run_point(point):
        local = _materialise(point)
        if task == "simulate":
            parsed = _parse_simulate(local)
            rows, _, reason = _run_trajectory(parsed)
        elif task == "thermal":
            parsed = _parse_thermal(local)
            rows, _, reason = _run_thermal(parsed)
        else:
            parsed = _parse_equilibrium(local)
            rows = [_run_equilibrium(parsed["params"])]
            reason = StopReason.COMPLETED
        return [tuple(point) + tuple(row) for row in rows], reason

    _materialise(points[0])  # surface path errors before spawning workers
    if args.jobs > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(run_point, points))
    else:
        outcomes = [run_point(point) for point in points]

    if task == "simulate":
        header = tuple(names) + _TRAJECTORY_HEADER
    elif task == "thermal":
        header = tuple(names) + _THERMAL_HEADER
    else:
        header = tuple(names) + _EQUILIBRIUM_HEADER
    rows = [row for block, _ in outcomes for row in block]
    csv_path = _out_path(args.out, out_names["csv"])
    output.write_csv(csv_path, header, rows)

    stop_reasons = [reason.value for _, reason in outcomes]
    summary = {
        "command": "sweep",
        "task": task,
        "swept": {name: grid for name, grid in zip(names, grids)},
        "points": len(points),
        "rows": len(rows),
        "csv": out_names["csv"],
        "stop_reasons": stop_reasons,
    }
    output.write_json(_out_path(args.out, out_names["summary"]), summary)
    incomplete = [r for r in stop_reasons
                  if r != StopReason.COMPLETED.value]
    _say(args.quiet, f"wrote {csv_path} ({len(rows)} rows, "
         f"{len(points)} points, {len(incomplete)} stopped early)")
    return EXIT_STOPPED if incomplete else EXIT_OK


def _cmd_verify(args) -> int:
    wanted = tuple(args.suites) if args.suites else "all"
    try:
        report = verification.run_suites(wanted, rel_tol=args.rel_tol,
                                         jobs=args.jobs)
    except ValueError as exc:
        raise ConfigError(str(exc))
    for result in report.results:
        mark = "PASS" if result.passed else "FAIL"
        line = (f"{mark} {result.name}: measured {result.measured:.3e}, "
                f"bound {result.tolerance:.3e}")
        if not result.passed and result.detail:
            line += f" ({result.detail})"
        _say(args.quiet, line)
    report_path = _out_path(args.out, "verify_report.json")
    output.write_json(report_path, report.to_dict())
    n_pass = sum(r.passed for r in report.results)
    _say(args.quiet, f"{n_pass}/{len(report.results)} checks passed, "
         f"report at {report_path}")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_plot(args) -> int:
    header, data = output.read_csv(args.csv)
    if data.shape[0] < 2 or len(header) < 2:
        raise ConfigError(f"{args.csv} needs at least 2 rows and 2 columns")
    x = data[:, 0]
    series = [(header[i], data[:, i]) for i in range(1, len(header))]
    stem = Path(args.csv).stem
    svg = output.polyline_chart(x, series, stem, header[0], "value")
    svg_path = _out_path(args.out, stem + ".svg")
    svg_path.write_text(svg, encoding="ascii")
    _say(args.quiet, f"wrote {svg_path}")
    return EXIT_OK


# -------------------------------------------------------------- parser

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=".", metavar="DIR",
                        help="directory for generated files (default: .)")
    common.add_argument("--quiet", action="store_true",
                        help="suppress progress output")
    withcfg = argparse.ArgumentParser(add_help=False)
    withcfg.add_argument("--config", required=True, metavar="PATH",
                         help="JSON run configuration")

    parser = _Parser(prog="ermakov",
                     description="Width-equation laboratory for the "
                                 "quantum harmonic oscillator")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("simulate", parents=[withcfg, common],
                       help="integrate one width trajectory to CSV")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("thermal", parents=[withcfg, common],
                       help="integrate a width profile over an inverse-"
                            "temperature grid")
    p.set_defaults(handler=_cmd_thermal)

    p = sub.add_parser("sweep", parents=[withcfg, common],
                       help="repeat a task over one or two parameter grids")
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="concurrent sweep points (default: 1)")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("equilibrium", parents=[withcfg, common],
                       help="print closed-form equilibrium widths")
    p.set_defaults(handler=_cmd_equilibrium)

    p = sub.add_parser("verify", parents=[common],
                       help="run self-check suites and write a JSON report")
    p.add_argument("suites", nargs="*", metavar="SUITE",
                   help="suite names (default: all); see "
                        + ", ".join(verification.suite_names()))
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="concurrent suites (default: 1)")
    p.add_argument("--rel-tol", type=float, default=None, metavar="TOL",
                   help="override the relative tolerance of every "
                        "integration the checks perform")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("plot", parents=[common],
                       help="re-render an existing CSV as an SVG chart")
    p.add_argument("csv", metavar="CSV", help="table to plot")
    p.set_defaults(handler=_cmd_plot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
