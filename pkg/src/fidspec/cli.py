"""Configuration-driven command line for the xx / impurity / bcs scenarios.

Usage:
    fidspec <xx|impurity|bcs> --config <path> [--out <dir>]

Configs are JSON files; the recognized keys per model are documented in the
README.  Every run writes one or more CSV data tables (12 significant
digits, deterministic row order) plus a metadata.json sidecar with the
resolved configuration and run diagnostics.

Exit codes: 0 success, 2 config error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .bcs import BCSParams, brillouin_map, gap_solve
from .impurity import LatticeParams, impurity_jscan, impurity_spatial_map, resolve_site
from .tables import Table
from .xx_chain import xx_pair_sweep, xx_susceptibility_sweep


class ConfigError(ValueError):
    """Invalid scenario configuration; the message names the offending key."""


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def emit_csv(table: Table, path: Path) -> None:
    """Write a table as UTF-8 CSV, 12 significant digits, newline-terminated."""
    lines = [",".join(table.columns)]
    for row in table.rows:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _get(config: dict, key: str, default=None, required: bool = False):
    if key in config:
        return config[key]
    if required:
        raise ConfigError(f"missing required key '{key}'")
    return default


def _grid(spec, key: str) -> list[float]:
    """A grid is either an explicit list or {start, stop, step} (inclusive)."""
    if isinstance(spec, (list, tuple)):
        if not spec:
            raise ConfigError(f"'{key}' must not be empty")
        return [float(v) for v in spec]
    if isinstance(spec, dict):
        try:
            start, stop, step = float(spec["start"]), float(spec["stop"]), float(spec["step"])
        except KeyError as exc:
            raise ConfigError(f"'{key}' range needs start/stop/step, missing {exc}") from exc
        if step <= 0 or stop < start:
            raise ConfigError(f"'{key}' range must have step > 0 and stop >= start")
        n = int(round((stop - start) / step))
        values = [start + i * step for i in range(n + 1)]
        return [v for v in values if v <= stop + 1e-12]
    raise ConfigError(f"'{key}' must be a list or a start/stop/step range")


def _as_int_list(value, key: str) -> list[int]:
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    return [int(value)]


@dataclass
class OutputBundle:
    output_dir: Path
    csv_paths: list[Path]
    metadata_path: Path


def _file_tag(config: dict) -> str:
    """Optional suffix distinguishing runs that share an output directory."""
    tag = _get(config, "file_tag", "")
    if tag and not str(tag).replace("_", "").isalnum():
        raise ConfigError(f"'file_tag' must be alphanumeric, got {tag!r}")
    return f"_{tag}" if tag else ""


def _run_xx(config: dict) -> dict[str, Table]:
    mode = _get(config, "mode", "spectrum")
    n_max = int(_get(config, "moments_max", 5))
    tag = _file_tag(config)
    tables: dict[str, Table] = {}
    if mode == "susceptibility":
        h_grid = _grid(_get(config, "h_grid", required=True), "h_grid")
        delta_h = float(_get(config, "delta_h", 0.01))
        for L in _as_int_list(_get(config, "L", required=True), "L"):
            try:
                tables[f"xx_susceptibility{tag}_L{L}.csv"] = xx_susceptibility_sweep(h_grid, delta_h, L, n_max)
            except ValueError as exc:
                raise ConfigError(f"invalid susceptibility grid: {exc}") from exc
        return tables
    if mode != "spectrum":
        raise ConfigError(f"unknown xx mode '{mode}' (use 'spectrum' or 'susceptibility')")

    for L in _as_int_list(_get(config, "L", required=True), "L"):
        if "h_grid" in config:
            h_values = _grid(config["h_grid"], "h_grid")
            delta_h = config.get("delta_h")
            if delta_h is not None:
                pairs = [(h, h + float(delta_h), L) for h in h_values]
            else:
                pairs = [(h, h, L) for h in h_values]
        elif "h1" in config and "h2" in config:
            h1 = float(config["h1"])
            pairs = [(h1, h2, L) for h2 in _grid(config["h2"], "h2")]
        else:
            raise ConfigError("xx spectrum config needs 'h_grid' or 'h1' + 'h2'")
        try:
            table = xx_pair_sweep(pairs, n_max)
        except ValueError as exc:
            raise ConfigError(f"invalid xx grid: {exc}") from exc
        entangled = all(abs(h1 - h2) == 0.0 for h1, h2, _ in pairs)
        stem = "xx_entanglement_spectrum" if entangled else "xx_fidelity_spectrum"
        tables[f"{stem}{tag}_L{L}.csv"] = table
    return tables


def _site_label(p: LatticeParams, site) -> str:
    if isinstance(site, str):
        return site
    ix, iy = resolve_site(p, site)
    return f"x{ix}_y{iy}"


def _impurity_params(config: dict) -> LatticeParams:
    try:
        return LatticeParams(
            nx=int(_get(config, "nx", 15)),
            ny=int(_get(config, "ny", 15)),
            t=float(_get(config, "t", 1.0)),
            eps_f=float(_get(config, "eps_f", -1.0)),
            v_pair=float(_get(config, "v_pair", 2.0)),
        )
    except ValueError as exc:
        raise ConfigError(f"invalid lattice parameters: {exc}") from exc


def _run_impurity(config: dict) -> dict[str, Table]:
    p = _impurity_params(config)
    mode = _get(config, "mode", "j_scan")
    sites = _get(config, "site", "impurity")
    if not isinstance(sites, list) or (len(sites) == 2 and all(isinstance(v, int) for v in sites)):
        sites = [sites]
    try:
        coords = [resolve_site(p, s) for s in sites]
    except ValueError as exc:
        raise ConfigError(f"invalid site: {exc}") from exc
    labels = {resolve_site(p, s): _site_label(p, s) for s in sites}

    j_grid = _grid(_get(config, "J_grid", required=True), "J_grid")
    tag = _file_tag(config)
    tables: dict[str, Table] = {}
    if mode == "j_scan":
        delta_j = float(_get(config, "delta_J", 0.05))
        if delta_j <= 0:
            raise ConfigError(f"'delta_J' must be positive, got {delta_j}")
        per_site = impurity_jscan(p, j_grid, delta_j, sites=coords)
        for coord, table in per_site.items():
            tables[f"impurity_jscan{tag}_{labels[coord]}.csv"] = table
    elif mode == "spatial_map":
        for j in j_grid:
            for coord in coords:
                table = impurity_spatial_map(p, j, anchor=coord)
                tables[f"impurity_map{tag}_J{_fmt(j)}_{labels[coord]}.csv"] = table
    else:
        raise ConfigError(f"unknown impurity mode '{mode}' (use 'j_scan' or 'spatial_map')")
    return tables


def _bcs_point(config: dict, suffix: str, grid_n: int, mu: float) -> BCSParams:
    temp = float(_get(config, f"T_{suffix}", required=True))
    delta = _get(config, f"delta_{suffix}", required=True)
    if delta == "self_consistent":
        v = float(_get(config, "v_pair", required=True))
        cutoff = float(_get(config, "cutoff", required=True))
        delta = gap_solve(temp, v, cutoff, grid_n=grid_n, mu=mu).delta
    try:
        return BCSParams(T=temp, delta=float(delta), mu=mu, grid_n=grid_n)
    except ValueError as exc:
        raise ConfigError(f"invalid bcs parameters for state '{suffix}': {exc}") from exc


def _run_bcs(config: dict) -> dict[str, Table]:
    grid_n = int(_get(config, "grid_n", 64))
    mu = float(_get(config, "mu", -1.0))
    pa = _bcs_point(config, "a", grid_n, mu)
    pb = _bcs_point(config, "b", grid_n, mu)
    table = brillouin_map(pa, pb)
    table.meta["resolved_delta_a"] = pa.delta
    table.meta["resolved_delta_b"] = pb.delta
    return {f"bcs_brillouin_map{_file_tag(config)}.csv": table}


_RUNNERS = {"xx": _run_xx, "impurity": _run_impurity, "bcs": _run_bcs}


def run_scenario(config_path: str | Path, model: str | None = None, out_override: str | Path | None = None) -> OutputBundle:
    """Execute one scenario config and write its CSV tables plus metadata.

    All tables are computed before any file is created, so an invalid
    config or a failed computation never leaves partial output behind.
    """
    config_path = Path(config_path)
    try:
        config = json.loads(config_path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {config_path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(config, dict):
        raise ConfigError("config must be a JSON object")

    config_model = _get(config, "model", required=True)
    if config_model not in _RUNNERS:
        raise ConfigError(f"unknown model '{config_model}' (use xx, impurity or bcs)")
    if model is not None and model != config_model:
        raise ConfigError(f"subcommand '{model}' does not match config model '{config_model}'")

    started = time.perf_counter()
    tables = _RUNNERS[config_model](config)
    wall = time.perf_counter() - started

    out_dir = Path(out_override) if out_override is not None else Path(_get(config, "output_dir", "out"))
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_paths = []
    for name in sorted(tables):
        path = out_dir / name
        emit_csv(tables[name], path)
        csv_paths.append(path)

    metadata = {
        "tool": "fidspec",
        "version": __version__,
        "model": config_model,
        "config": config,
        "wall_time_s": round(wall, 6),
        "files": {
            name: {"rows": tables[name].n_rows, "columns": tables[name].columns, "meta": tables[name].meta}
            for name in sorted(tables)
        },
    }
    metadata_path = out_dir / f"metadata{_file_tag(config)}.json"
    metadata_path.write_text(json.dumps(metadata, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return OutputBundle(output_dir=out_dir, csv_paths=csv_paths, metadata_path=metadata_path)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="fidspec",
        description="Fidelity-operator spectra for the xx chain, impurity and BCS models",
    )
    sub = parser.add_subparsers(dest="model", required=True)
    for name in _RUNNERS:
        cmd = sub.add_parser(name, help=f"run a '{name}' scenario config")
        cmd.add_argument("--config", required=True, help="path to the JSON scenario config")
        cmd.add_argument("--out", default=None, help="override the config's output_dir")
    args = parser.parse_args(argv)

    try:
        bundle = run_scenario(args.config, model=args.model, out_override=args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation failure
        print(f"computation error: {exc}", file=sys.stderr)
        return 3
    for path in bundle.csv_paths:
        print(path)
    print(bundle.metadata_path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
