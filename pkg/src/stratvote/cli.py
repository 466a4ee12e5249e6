"""Command-line front end: scenario grids in, reproducible CSVs out."""

import argparse
import json
import sys
import time
from datetime import datetime, timezone
from itertools import product
from pathlib import Path

from . import __version__
from .engine import ScenarioConfig, run_scenario_grid
from .stats import aggregate_grid

_INT_KEYS = ("n", "k", "s_count", "c", "q", "l", "t_max", "repetitions", "seed")
_FLOAT_KEYS = ("rho", "e", "jitter")
CONFIG_KEYS = _INT_KEYS + _FLOAT_KEYS

QUICK_REPETITIONS = 200
FULL_REPETITIONS = 4000


class ConfigError(ValueError):
    pass


def read_config_file(path):
    """Parse a flat key=value file; keys mirror the ScenarioConfig fields."""
    values = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
        try:
            values[key] = int(value) if key in _INT_KEYS else float(value)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}: {value!r}") from exc
    return values


def _parse_list(text, kind, flag):
    try:
        return [kind(part.strip()) for part in text.split(",") if part.strip()] or None
    except ValueError as exc:
        raise ConfigError(f"bad value for {flag}: {text!r}") from exc


def build_scenarios(args):
    """Resolve file values and flags into the expanded scenario list.

    Flags override file values; the grid is the cross-product of the K, S,
    and rho lists; per-scenario seeds are master_seed + position.
    """
    file_values = read_config_file(args.config) if args.config else {}

    ks = _parse_list(args.grid_k, int, "--grid-k") if args.grid_k else None
    ss = _parse_list(args.grid_s, int, "--grid-s") if args.grid_s else None
    rhos = _parse_list(args.grid_rho, float, "--grid-rho") if args.grid_rho else None
    if ks is None:
        ks = [file_values["k"]] if "k" in file_values else None
    if ss is None:
        ss = [file_values["s_count"]] if "s_count" in file_values else None
    if rhos is None:
        rhos = [file_values["rho"]] if "rho" in file_values else [ScenarioConfig.rho]
    if not ks:
        raise ConfigError("k is required: set k in the config file or pass --grid-k")
    if not ss:
        raise ConfigError("s_count is required: set s_count in the config file or pass --grid-s")

    base = {key: file_values[key] for key in file_values if key not in ("k", "s_count", "rho", "seed")}
    if args.reps is not None:
        base["repetitions"] = args.reps
    elif args.quick:
        base["repetitions"] = QUICK_REPETITIONS
    elif args.full:
        base["repetitions"] = FULL_REPETITIONS

    master_seed = args.seed if args.seed is not None else file_values.get("seed", 0)
    scenarios = []
    for index, (k, s_count, rho) in enumerate(product(ks, ss, rhos)):
        try:
            scenarios.append(
                ScenarioConfig(k=k, s_count=s_count, rho=rho, seed=master_seed + index, **base)
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    return scenarios, master_seed


def write_results(aggregates, path):
    """One CSV for the whole run: per-scenario, per-episode means and CIs."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("scenario,K,S,rho,t,mean,ci_low,ci_high,reps\n")
        for cfg, points in aggregates:
            for p in points:
                fh.write(
                    f"{cfg.scenario_id},{cfg.k},{cfg.s_count},{cfg.rho:.6f},"
                    f"{p.episode},{p.mean:.6f},{p.ci_low:.6f},{p.ci_high:.6f},{p.reps}\n"
                )


def write_raw(runs, path):
    """Optional per-repetition dump behind --raw."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("scenario,repetition,t,performance\n")
        for cfg, records in runs:
            for r in records:
                fh.write(f"{cfg.scenario_id},{r.repetition},{r.episode},{r.performance:.6f}\n")


def write_manifest(path, scenarios, master_seed, workers, outputs):
    manifest = {
        "tool": "stratvote",
        "version": __version__,
        "created_utc": datetime.now(timezone.utc).isoformat(),
        "master_seed": master_seed,
        "workers": workers,
        "outputs": outputs,
        "scenarios": [
            {
                "scenario": cfg.scenario_id,
                "n": cfg.n, "k": cfg.k, "s_count": cfg.s_count, "rho": cfg.rho,
                "c": cfg.c, "q": cfg.q, "l": cfg.l, "e": cfg.e, "t_max": cfg.t_max,
                "repetitions": cfg.repetitions, "jitter": cfg.jitter, "seed": cfg.seed,
            }
            for cfg in scenarios
        ],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stratvote",
        description="Simulate collective strategy search with minisum approval "
        "shortlisting and Borda selection; write per-episode means with 95% CIs.",
    )
    parser.add_argument("--config", metavar="PATH", help="flat key=value config file")
    parser.add_argument("--grid-k", metavar="LIST", help="comma-separated K values, e.g. 4,7")
    parser.add_argument("--grid-s", metavar="LIST", help="comma-separated S values, e.g. 1,10,100")
    parser.add_argument("--grid-rho", metavar="LIST", help="comma-separated rho values")
    parser.add_argument("--reps", type=int, default=None, help="repetitions per scenario")
    parser.add_argument("--seed", type=int, default=None, help="master seed (default 0)")
    parser.add_argument("--workers", type=int, default=0, help="parallel workers; 0 = auto")
    parser.add_argument("--out", metavar="DIR", default="results", help="output directory")
    parser.add_argument("--raw", action="store_true", help="also write per-repetition records")
    preset = parser.add_mutually_exclusive_group()
    preset.add_argument("--quick", action="store_true",
                        help=f"preset: {QUICK_REPETITIONS} repetitions")
    preset.add_argument("--full", action="store_true",
                        help=f"preset: {FULL_REPETITIONS} repetitions")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        scenarios, master_seed = build_scenarios(args)
    except ConfigError as exc:
        print(f"stratvote: config error: {exc}", file=sys.stderr)
        return 2

    out_dir = Path(args.out)
    marker = out_dir / "INCOMPLETE"
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        marker.write_text("run in progress\n", encoding="utf-8")

        runs = []
        for cfg in scenarios:
            started = time.perf_counter()
            print(
                f"stratvote: {cfg.scenario_id}: {cfg.repetitions} repetitions "
                f"x {cfg.t_max} episodes ...",
                file=sys.stderr, flush=True,
            )
            runs.extend(run_scenario_grid([cfg], workers=args.workers))
            print(
                f"stratvote: {cfg.scenario_id}: done in {time.perf_counter() - started:.1f}s",
                file=sys.stderr, flush=True,
            )
        aggregates = aggregate_grid(runs)

        results_path = out_dir / "results.csv"
        raw_path = out_dir / "raw.csv" if args.raw else None
        write_results(aggregates, results_path)
        if raw_path is not None:
            write_raw(runs, raw_path)
        outputs = {"results": str(results_path), "raw": str(raw_path) if raw_path else None}
        write_manifest(out_dir / "run_manifest.json", scenarios, master_seed, args.workers, outputs)

        degenerate = sum(p.degenerate for _, points in aggregates for p in points)
        if degenerate:
            print(
                f"stratvote: warning: {degenerate} episode(s) had fewer than 2 repetitions; "
                "their confidence intervals are degenerate",
                file=sys.stderr,
            )
        marker.unlink()
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports and exits
        try:
            marker.write_text(f"run failed: {exc}\n", encoding="utf-8")
        except OSError:
            pass
        print(f"stratvote: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
