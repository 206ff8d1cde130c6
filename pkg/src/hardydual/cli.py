"""Batch experiment runner.

Reads a JSON experiment configuration, executes the requested studies
(asymptotics, duality, sandwich, theorem, tau, convergence), and writes one
CSV per table plus a machine-readable ``summary.json``.  The pipeline is
deterministic: identical configuration (including the seed) produces
byte-identical CSV and JSON outputs.  Wall-clock timings go to ``run.log``,
which is outside the determinism contract.

Exit codes: 0 all gates pass, 2 configuration error, 3 data failure
(Szego violation / non-positive Gram), 4 tolerance-gate failure (the report
is still written).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from .circle import CircleGrid, MassSet, symbol_from_coefficients, \
    symbol_from_expression, symbol_from_samples, validate_szego
from .duality import UNITARY, PRINTED, apply_tau, dual_of, \
    duality_identity, l2_norm, canonical_vector, theorem_check, TauVector
from .errors import ConfigError, HardyDualError, NotPositiveDefinite, \
    OrderViolation, SzegoViolation
from .kernels import asymptotic_sweep, kernel_value_at_origin, sandwich_check
from .spaces import SpaceData, regularized
from .tolerances import Tolerances

SCHEMA_VERSION = 1
THREADS_ENV = "HARDYDUAL_THREADS"
STUDY_ORDER = ("asymptotics", "duality", "sandwich", "theorem", "tau", "convergence")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_GATE = 4

_DEFAULT_GATES = {
    "identity": 1e-6,
    "asymptotics": 1e-3,
    "theorem": 1e-6,
    "tau": 1e-8,
}


@dataclasses.dataclass
class ExperimentConfig:
    label: str
    seed: int
    grid: int
    degree: int
    hankel: int | None
    symbol_spec: dict
    mass_spec: list
    n_max: int
    rho_list: list
    cutoff_list: list | None
    convention: str
    tolerances: Tolerances
    gates: dict
    studies: list
    convergence: dict | None
    out_dir: str
    raw: dict


@dataclasses.dataclass
class Gate:
    name: str
    value: float
    threshold: float
    passed: bool


@dataclasses.dataclass
class RunReport:
    config: ExperimentConfig
    tables: dict
    gates: list
    scalars: dict
    timings: dict

    @property
    def all_passed(self) -> bool:
        return all(g.passed for g in self.gates)


# ---------------------------------------------------------------------------
# configuration parsing


def _expect(condition, message):
    if not condition:
        raise ConfigError(message)


def _as_complex(pair, what):
    if isinstance(pair, (int, float)):
        return complex(pair)
    _expect(isinstance(pair, list) and len(pair) == 2
            and all(isinstance(v, (int, float)) for v in pair),
            f"{what} must be a number or a [re, im] pair")
    return complex(pair[0], pair[1])


_TOP_KEYS = {"label", "seed", "grid", "degree", "hankel", "symbol", "masses",
             "n_max", "n_range", "rho_list", "N_list", "convention",
             "tolerances", "gates", "studies", "convergence", "output"}


def parse_config(raw: dict) -> ExperimentConfig:
    _expect(isinstance(raw, dict), "configuration must be a JSON object")
    unknown = set(raw) - _TOP_KEYS
    _expect(not unknown, f"unknown configuration keys: {sorted(unknown)}")

    label = raw.get("label", "experiment")
    seed = raw.get("seed", 20260809)
    _expect(isinstance(seed, int), "seed must be an integer")

    grid = raw.get("grid", 4096)
    _expect(isinstance(grid, int) and grid >= 8 and (grid & (grid - 1)) == 0,
            f"grid must be a power of two >= 8, got {grid}")
    degree = raw.get("degree", 48)
    _expect(isinstance(degree, int) and 0 <= degree < grid // 2,
            f"degree must lie in 0..{grid // 2 - 1}")
    hankel = raw.get("hankel")
    if hankel is not None:
        _expect(isinstance(hankel, int) and 1 <= hankel <= grid // 2 - degree,
                f"hankel truncation must lie in 1..{grid // 2 - degree}")

    symbol_spec = raw.get("symbol", {"kind": "coefficients", "entries": {}})
    _expect(isinstance(symbol_spec, dict) and "kind" in symbol_spec,
            "symbol must be an object with a 'kind'")
    kind = symbol_spec["kind"]
    _expect(kind in ("coefficients", "expression", "samples"),
            f"unknown symbol kind {kind!r}")
    allowed = {"coefficients": {"kind", "entries"},
               "expression": {"kind", "formula"},
               "samples": {"kind", "values", "path"}}[kind]
    _expect(set(symbol_spec) <= allowed,
            f"unknown symbol keys: {sorted(set(symbol_spec) - allowed)}")

    mass_spec = raw.get("masses", [])
    _expect(isinstance(mass_spec, list), "masses must be a list")
    for item in mass_spec:
        _expect(isinstance(item, dict) and set(item) == {"point", "weight"},
                "each mass needs exactly the keys 'point' and 'weight'")
        _expect(isinstance(item["weight"], (int, float)) and item["weight"] > 0,
                "mass weights must be positive numbers")

    if "n_range" in raw:
        _expect("n_max" not in raw, "give n_max or n_range, not both")
        rng = raw["n_range"]
        _expect(isinstance(rng, list) and len(rng) == 2 and rng[0] == 0
                and isinstance(rng[1], int) and rng[1] >= 1,
                "n_range must be [0, n_max] with n_max >= 1")
        n_max = rng[1]
    else:
        n_max = raw.get("n_max", 16)
        _expect(isinstance(n_max, int) and n_max >= 1, "n_max must be >= 1")

    rho_list = raw.get("rho_list", [0.5])
    _expect(isinstance(rho_list, list) and rho_list
            and all(isinstance(r, (int, float)) and 0 < r < 1 for r in rho_list),
            "rho_list entries must lie strictly between 0 and 1")
    cutoff_list = raw.get("N_list")
    if cutoff_list is not None:
        _expect(isinstance(cutoff_list, list) and cutoff_list
                and all(isinstance(n, int) and n >= 0 for n in cutoff_list),
                "N_list entries must be nonnegative integers")

    convention = raw.get("convention", UNITARY)
    _expect(convention in (UNITARY, PRINTED),
            f"convention must be '{UNITARY}' or '{PRINTED}'")

    tol_raw = raw.get("tolerances", {})
    _expect(isinstance(tol_raw, dict), "tolerances must be an object")
    tol_fields = {f.name for f in dataclasses.fields(Tolerances)}
    _expect(set(tol_raw) <= tol_fields,
            f"unknown tolerance keys: {sorted(set(tol_raw) - tol_fields)}")
    tolerances = Tolerances(**{k: float(v) for k, v in tol_raw.items()})

    gates = dict(_DEFAULT_GATES)
    gate_raw = raw.get("gates", {})
    _expect(isinstance(gate_raw, dict) and set(gate_raw) <= set(gates),
            f"unknown gate keys: {sorted(set(gate_raw) - set(gates))}")
    gates.update({k: float(v) for k, v in gate_raw.items()})

    studies = raw.get("studies", ["duality"])
    _expect(isinstance(studies, list) and studies
            and all(s in STUDY_ORDER for s in studies),
            f"studies must be a nonempty subset of {STUDY_ORDER}")

    convergence = raw.get("convergence")
    if "convergence" in studies:
        _expect(isinstance(convergence, dict)
                and set(convergence) <= {"grids", "degrees"},
                "convergence study needs an object with 'grids' and 'degrees'")
        grids = convergence.get("grids", [])
        degrees = convergence.get("degrees", [])
        _expect(len(grids) >= 2 and len(degrees) == len(grids),
                "convergence needs at least two (grid, degree) refinement levels")
        for g, d in zip(grids, degrees):
            _expect(isinstance(g, int) and g >= 8 and (g & (g - 1)) == 0,
                    "convergence grids must be powers of two >= 8")
            _expect(isinstance(d, int) and 0 <= d < g // 2,
                    "convergence degrees must fit the grid")

    output = raw.get("output", {})
    _expect(isinstance(output, dict) and set(output) <= {"dir"},
            "output supports only the key 'dir'")
    out_dir = output.get("dir", "out")

    return ExperimentConfig(
        label=label, seed=seed, grid=grid, degree=degree, hankel=hankel,
        symbol_spec=symbol_spec, mass_spec=mass_spec, n_max=n_max,
        rho_list=[float(r) for r in rho_list], cutoff_list=cutoff_list,
        convention=convention, tolerances=tolerances, gates=gates,
        studies=list(studies), convergence=convergence, out_dir=out_dir,
        raw=raw,
    )


def build_space(config: ExperimentConfig, grid_size: int | None = None) -> SpaceData:
    """Realize the configured symbol and masses; contraction-checked."""
    grid = CircleGrid(grid_size or config.grid)
    chosen = config.symbol_spec
    try:
        if chosen["kind"] == "coefficients":
            entries = {int(k): _as_complex(v, "coefficient")
                       for k, v in chosen.get("entries", {}).items()}
            symbol = symbol_from_coefficients(grid, entries)
        elif chosen["kind"] == "expression":
            symbol = symbol_from_expression(grid, chosen["formula"])
        else:
            if "path" in chosen:
                with open(chosen["path"], encoding="utf-8") as handle:
                    values = json.load(handle)
            else:
                values = chosen.get("values")
            _expect(isinstance(values, list) and len(values) == grid.size,
                    f"samples must provide exactly {grid.size} values")
            samples = np.array([_as_complex(v, "sample") for v in values])
            symbol = symbol_from_samples(grid, samples)
    except (ValueError, OSError) as exc:
        raise ConfigError(f"cannot build symbol: {exc}") from exc

    try:
        validate_szego(symbol, tol_unit=config.tolerances.unit,
                       tol_touch=config.tolerances.touch)
    except SzegoViolation as exc:
        raise ConfigError(str(exc)) from exc

    try:
        if config.mass_spec:
            points = np.array([_as_complex(m["point"], "mass point")
                               for m in config.mass_spec])
            weights = np.array([float(m["weight"]) for m in config.mass_spec])
            masses = MassSet(points, weights)
        else:
            masses = MassSet.empty()
    except (ValueError, HardyDualError) as exc:
        raise ConfigError(f"invalid masses: {exc}") from exc

    if config.cutoff_list is not None:
        _expect(max(config.cutoff_list) <= masses.count,
                "N_list entries must not exceed the number of masses")
    needs_dual = set(config.studies) & {"duality", "sandwich", "theorem",
                                        "tau", "convergence"}
    if needs_dual and masses.has_origin:
        raise ConfigError("duality-type studies need origin-free mass points")
    return SpaceData(symbol, masses)


# ---------------------------------------------------------------------------
# studies


def _study_asymptotics(config, space):
    trace = asymptotic_sweep(space, config.n_max, config.degree, config.hankel)
    rows = [{"n": int(n), "kernel_value": float(v), "abs_deviation": float(d)}
            for n, v, d in zip(trace.shifts, trace.values, trace.deviations)]
    final = float(trace.deviations[-1])
    gates = [Gate("asymptotics.final_deviation", final,
                  config.gates["asymptotics"],
                  final < config.gates["asymptotics"])]
    scalars = {"converged_at": trace.converged_at(config.gates["asymptotics"]),
               "tail_monotone": trace.tail_monotone()}
    return {"tables": {"asymptotics": rows}, "gates": gates, "scalars": scalars}


def _study_duality(config, space):
    dual = dual_of(space, convention=config.convention)
    report = duality_identity(space, dual, config.degree, config.hankel)
    row = {
        "product": report.product,
        "residual": report.residual,
        "t_at_zero": report.t_at_zero,
        "kernel_shifted": report.kernel_shifted,
        "kernel_dual": report.kernel_dual,
        "vector_residual": report.vector_residual,
    }
    gates = [Gate("duality.identity_residual", report.residual,
                  config.gates["identity"],
                  report.residual < config.gates["identity"])]
    return {"tables": {"duality": [row]}, "gates": gates,
            "scalars": {"convention": dual.provenance}}


def _study_sandwich(config, space):
    cutoffs = config.cutoff_list
    if cutoffs is None:
        cutoffs = [space.masses.count]
    rows, gates = [], []
    worst_margin = np.inf
    worst_residual = 0.0
    for cutoff in cutoffs:
        for rho in config.rho_list:
            try:
                rep = sandwich_check(space, cutoff, rho, 0, config.degree,
                                     config.hankel,
                                     tol_order=config.tolerances.order)
            except OrderViolation as exc:
                gates.append(Gate(f"sandwich.order[N={cutoff},rho={rho}]",
                                  float("nan"), config.tolerances.order, False))
                rows.append({"cutoff": cutoff, "rho": rho,
                             "error": str(exc)})
                continue
            rows.append({
                "cutoff": cutoff, "rho": rho,
                "k_alpha": rep.k_alpha, "k_cutoff": rep.k_cutoff,
                "k_scaled": rep.k_scaled, "k_both": rep.k_both,
                "margin_cutoff": rep.margin_cutoff,
                "margin_scaled": rep.margin_scaled,
                "psd_margin_cutoff": rep.psd_margin_cutoff,
                "psd_margin_scaled": rep.psd_margin_scaled,
                "identity_residual_cutoff": rep.identity_residuals["cutoff"],
                "identity_residual_scaled": rep.identity_residuals["scaled"],
                "identity_residual_both": rep.identity_residuals["both"],
            })
            worst_margin = min(worst_margin, rep.margin_cutoff, rep.margin_scaled,
                               rep.psd_margin_cutoff, rep.psd_margin_scaled)
            worst_residual = max(worst_residual, *rep.identity_residuals.values())
    gates.append(Gate("sandwich.worst_margin", float(worst_margin),
                      -config.tolerances.order,
                      worst_margin >= -config.tolerances.order))
    gates.append(Gate("sandwich.identity_residual", worst_residual,
                      config.gates["identity"],
                      worst_residual < config.gates["identity"]))
    return {"tables": {"sandwich": rows}, "gates": gates, "scalars": {}}


def _study_theorem(config, space):
    dual = dual_of(space, convention=config.convention)
    rep = theorem_check(space, dual, config.degree, config.hankel)
    worst = max(rep.forward_hardy_residual, rep.forward_mass_residual)
    rows = [{
        "forward_hardy_residual": rep.forward_hardy_residual,
        "forward_mass_residual": rep.forward_mass_residual,
        "converse_orthogonality": rep.converse_orthogonality,
        "complement_dimension": rep.complement_dimension,
    }]
    gates = [Gate("theorem.membership_residual", worst,
                  config.gates["theorem"], worst < config.gates["theorem"]),
             Gate("theorem.converse_orthogonality", rep.converse_orthogonality,
                  config.gates["theorem"],
                  rep.converse_orthogonality < config.gates["theorem"])]
    return {"tables": {"theorem": rows}, "gates": gates, "scalars": {}}


def _random_vector(rng, symbol, masses, band):
    grid = symbol.grid
    exponents = np.arange(-band, band + 1)
    coeffs = (rng.standard_normal(exponents.size)
              + 1j * rng.standard_normal(exponents.size))
    coeffs *= 0.8 ** np.abs(exponents)
    full = np.zeros(grid.size, dtype=complex)
    full[exponents % grid.size] = coeffs
    f1 = grid.values(full)
    values = rng.standard_normal(masses.count) + 1j * rng.standard_normal(masses.count)
    return canonical_vector(symbol, f1, values)


def _study_tau(config, space, n_vectors=20):
    rng = np.random.default_rng(config.seed)
    dual = dual_of(space, convention=config.convention)
    dual_back = dual_of(dual.dual_space(), convention=config.convention)
    symbol, masses = dual.symbol, dual.masses
    band = min(config.degree, symbol.grid.size // 8)
    rows = []
    worst_unit = worst_inv = 0.0
    for index in range(n_vectors):
        vec = _random_vector(rng, symbol, masses, band)
        norm = l2_norm(vec, symbol, masses)
        image = apply_tau(vec, dual)
        norm_image = l2_norm(image, dual.dual_symbol, dual.dual_masses)
        unit_res = abs(norm_image ** 2 - norm ** 2) / norm ** 2
        back = apply_tau(image, dual_back)
        diff = TauVector(back.f1 - vec.f1, back.f2 - vec.f2,
                         back.mass_values - vec.mass_values)
        inv_res = l2_norm(diff, symbol, masses) / norm
        rows.append({"vector": index, "unitarity_residual": unit_res,
                     "involution_residual": inv_res})
        worst_unit = max(worst_unit, unit_res)
        worst_inv = max(worst_inv, inv_res)
    gates = [Gate("tau.unitarity", worst_unit, config.gates["tau"],
                  worst_unit < config.gates["tau"]),
             Gate("tau.involution", worst_inv, config.gates["tau"],
                  worst_inv < config.gates["tau"])]
    return {"tables": {"tau": rows}, "gates": gates, "scalars": {}}


def monotone_improvement(values, floor=1e-12, factor=2.0):
    """Nonincreasing up to a factor guard, with a plateau floor."""
    values = [float(v) for v in values]
    steps_ok = all(b <= factor * max(a, floor) for a, b in zip(values, values[1:]))
    net_ok = values[-1] <= max(values[0], floor) * (1 + 1e-9) or values[0] < 1e-10
    return bool(steps_ok and net_ok)


def convergence_study(config: ExperimentConfig):
    """Refinement table for the identity residual and the kernel deviation."""
    grids = config.convergence["grids"]
    degrees = config.convergence["degrees"]
    rows = []
    residuals = []
    for grid_size, degree in zip(grids, degrees):
        space = build_space(config, grid_size=grid_size)
        dual = dual_of(space, convention=config.convention)
        rep = duality_identity(space, dual, degree)
        trace = asymptotic_sweep(space, config.n_max, degree)
        rows.append({"grid": grid_size, "degree": degree,
                     "identity_residual": rep.residual,
                     "final_deviation": float(trace.deviations[-1])})
        residuals.append(rep.residual)

    base_space = build_space(config)
    k_base = kernel_value_at_origin(base_space, config.degree, config.hankel)
    rho_rows = [{"rho": rho,
                 "k_scaled": kernel_value_at_origin(
                     regularized(base_space, rho=rho), config.degree,
                     config.hankel)}
                for rho in sorted(config.rho_list)]
    rho_values = [r["k_scaled"] for r in rho_rows]
    rho_monotone = all(b >= a - 1e-12 for a, b in zip(rho_values, rho_values[1:]))
    rho_bounded = all(v <= k_base + 1e-10 for v in rho_values)

    cutoffs = sorted(config.cutoff_list or [base_space.masses.count])
    cutoff_rows = [{"cutoff": n,
                    "k_cutoff": kernel_value_at_origin(
                        regularized(base_space, mass_cutoff=n), config.degree,
                        config.hankel)}
                   for n in cutoffs]
    cut_values = [r["k_cutoff"] for r in cutoff_rows]
    cut_monotone = all(b <= a + 1e-12 for a, b in zip(cut_values, cut_values[1:]))
    cut_bounded = all(v >= k_base - 1e-10 for v in cut_values)

    monotone = monotone_improvement(residuals)
    gates = [Gate("convergence.residual_monotone", float(residuals[-1]),
                  float(residuals[0]) * 2 + 1e-12, monotone)]
    scalars = {"rho_sweep_monotone": rho_monotone and rho_bounded,
               "cutoff_sweep_monotone": cut_monotone and cut_bounded,
               "k_unregularized": k_base}
    return {"tables": {"convergence_refinement": rows,
                       "convergence_rho": rho_rows,
                       "convergence_cutoff": cutoff_rows},
            "gates": gates, "scalars": scalars}


_STUDY_FUNCS = {
    "asymptotics": lambda cfg, space: _study_asymptotics(cfg, space),
    "duality": lambda cfg, space: _study_duality(cfg, space),
    "sandwich": lambda cfg, space: _study_sandwich(cfg, space),
    "theorem": lambda cfg, space: _study_theorem(cfg, space),
    "tau": lambda cfg, space: _study_tau(cfg, space),
    "convergence": lambda cfg, space: convergence_study(cfg),
}


# ---------------------------------------------------------------------------
# report persistence


def _fmt_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _expand_complex(row):
    out = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)) and not isinstance(value, float):
            out[f"{key}_re"] = float(np.real(value))
            out[f"{key}_im"] = float(np.imag(value))
        else:
            out[key] = value
    return out


def write_csv(path: Path, rows):
    rows = [_expand_complex(r) for r in rows]
    fields = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_fmt_cell(row.get(k, "")) for k in fields])


def _json_default(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON serializable: {type(value)}")


def write_report(report: RunReport, out_dir: Path):
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, rows in sorted(report.tables.items()):
        write_csv(out_dir / f"{name}.csv", rows)
    summary = {
        "schema_version": SCHEMA_VERSION,
        "label": report.config.label,
        "config": report.config.raw,
        "convention": report.config.convention,
        "tolerances": dataclasses.asdict(report.config.tolerances),
        "gates": [dataclasses.asdict(g) for g in report.gates],
        "scalars": report.scalars,
        "all_passed": report.all_passed,
        "versions": {"hardydual": __version__, "numpy": np.__version__,
                     "scipy": scipy.__version__},
    }
    with open(out_dir / "summary.json", "w", encoding="utf-8") as handle:
        json.dump(summary, handle, indent=2, sort_keys=True, default=_json_default)
        handle.write("\n")
    with open(out_dir / "run.log", "w", encoding="utf-8") as handle:
        for study in STUDY_ORDER:
            if study in report.timings:
                handle.write(f"{study}: {report.timings[study]:.3f} s\n")


# ---------------------------------------------------------------------------
# the runner


def run(config: ExperimentConfig, out_dir: str | None = None) -> tuple[int, RunReport | None]:
    """Execute the configured studies and persist the report."""
    try:
        space = build_space(config)
    except ConfigError:
        raise

    studies = [s for s in STUDY_ORDER if s in config.studies]
    workers = max(1, int(os.environ.get(THREADS_ENV, "1")))

    results = {}
    timings = {}

    def execute(study):
        start = time.perf_counter()
        out = _STUDY_FUNCS[study](config, space)
        return study, out, time.perf_counter() - start

    try:
        if workers > 1 and len(studies) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for study, out, elapsed in pool.map(execute, studies):
                    results[study] = out
                    timings[study] = elapsed
        else:
            for study in studies:
                study, out, elapsed = execute(study)
                results[study] = out
                timings[study] = elapsed
    except (SzegoViolation, NotPositiveDefinite) as exc:
        print(f"data failure: {exc}", file=sys.stderr)
        return EXIT_DATA, None

    tables, gates, scalars = {}, [], {}
    for study in studies:
        out = results[study]
        tables.update(out["tables"])
        gates.extend(out["gates"])
        if out["scalars"]:
            scalars[study] = out["scalars"]

    report = RunReport(config, tables, gates, scalars, timings)
    write_report(report, Path(out_dir or config.out_dir))
    return (EXIT_OK if report.all_passed else EXIT_GATE), report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hardydual",
        description="Perturbed-Hardy-space experiments: kernels, asymptotics, duality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_parser = sub.add_parser("run", help="execute a JSON experiment configuration")
    run_parser.add_argument("config", help="path to the configuration file")
    run_parser.add_argument("--out", help="output directory (overrides config)")
    run_parser.add_argument("--grid", type=int, help="override the grid size")
    run_parser.add_argument("--degree", type=int, help="override the basis degree")
    run_parser.add_argument("--convention", choices=[UNITARY, PRINTED],
                            help="dual-mass pairing convention")
    run_parser.add_argument("--tol-gate", type=float, dest="tol_gate",
                            help="override the residual gates (identity/theorem/tau)")
    args = parser.parse_args(argv)

    try:
        with open(args.config, encoding="utf-8") as handle:
            raw = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if args.grid is not None:
        raw["grid"] = args.grid
    if args.degree is not None:
        raw["degree"] = args.degree
    if args.convention is not None:
        raw["convention"] = args.convention
    if args.tol_gate is not None:
        raw.setdefault("gates", {})
        for key in ("identity", "theorem", "tau"):
            raw["gates"][key] = args.tol_gate

    try:
        config = parse_config(raw)
        code, _ = run(config, out_dir=args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
