"""Command line interface.

Subcommands: ``solve`` (one instance), ``sweep`` (figure-style parameter
sweep to CSV), ``oracle-compare`` (solver-vs-exhaustive-search gap report)
and ``detect-sim`` (closed-form vs empirical detection CSV).

Exit codes: 0 success, 2 configuration error, 3 infeasible everywhere.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import replace

import numpy as np

from .harness import (ConfigError, ExperimentConfig, config_from_dict,
                      detect_sim_csv, load_config, oracle_gap_report, run_sweep,
                      solve_draw, sweep_rows_to_csv)
from .model import sample_channel

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covertrate",
        description="Power allocation for joint secrecy and covert "
                    "communication: solver, Monte Carlo sweeps and "
                    "detection simulation.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, doc in (
            ("solve", "solve one fading draw and print the result as JSON"),
            ("sweep", "run the configured sweep and emit CSV "
                      "(columns: sweep_var,sweep_value,mode,ergodic_rate,"
                      "mean_rho_cs,infeasible_frac,oracle_gap_median,draws,seed)"),
            ("oracle-compare", "report solver-vs-exhaustive-search gaps"),
            ("detect-sim", "emit detection CSV (columns: n,theta,p_fa_closed,"
                           "p_md_closed,p_fa_emp,p_md_emp,trials,seed)")):
        p = sub.add_parser(name, help=doc)
        p.add_argument("--config", help="JSON config path (defaults to the "
                                        "baseline simulation setting)")
        p.add_argument("--seed", type=int, help="override the config seed")
        p.add_argument("--draws", type=int, help="override the config draw count")
        p.add_argument("--out", help="output CSV path (default: stdout)")
    return parser


def _load(args: argparse.Namespace) -> ExperimentConfig:
    cfg = load_config(args.config) if args.config else config_from_dict({})
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.draws is not None:
        cfg = replace(cfg, draws=args.draws)
    return cfg


def _open_out(args: argparse.Namespace):
    if args.out:
        return open(args.out, "w", newline="")
    return None  # caller falls back to stdout


def _cmd_solve(cfg: ExperimentConfig, args) -> int:
    ch = sample_channel(np.random.SeedSequence(cfg.seed))
    result = solve_draw(cfg, ch)
    doc = {
        "mode": result.mode,
        "iterations": result.iterations,
        "channel": dataclasses.asdict(ch),
    }
    if result.feasible:
        doc["policy"] = dataclasses.asdict(result.policy)
        doc["rates"] = dataclasses.asdict(result.rates)
        doc["objective_trace"] = list(result.objective_trace)
    print(json.dumps(doc, indent=2))
    return EXIT_OK if result.feasible else EXIT_INFEASIBLE


def _cmd_sweep(cfg: ExperimentConfig, args) -> int:
    rows = run_sweep(cfg)
    out = _open_out(args)
    try:
        sweep_rows_to_csv(rows, out or sys.stdout)
    finally:
        if out:
            out.close()
    if all(row.infeasible_frac >= 1.0 for row in rows):
        print("every draw at every sweep value was infeasible", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def _cmd_oracle_compare(cfg: ExperimentConfig, args) -> int:
    stats = oracle_gap_report(cfg)
    if stats.feasible_draws == 0:
        print("every draw was infeasible", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(json.dumps({
        "median_gap": stats.median,
        "mean_gap": stats.mean,
        "max_gap": stats.max,
        "feasible_draws": stats.feasible_draws,
        "infeasible_draws": stats.infeasible_draws,
    }, indent=2))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write("draw,gap\n")
            for i, gap in enumerate(stats.gaps):
                fh.write(f"{i},{gap:.12g}\n")
    return EXIT_OK


def _cmd_detect_sim(cfg: ExperimentConfig, args) -> int:
    out = _open_out(args)
    try:
        detect_sim_csv(cfg, out or sys.stdout)
    finally:
        if out:
            out.close()
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "oracle-compare": _cmd_oracle_compare,
    "detect-sim": _cmd_detect_sim,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _load(args)
        return _COMMANDS[args.command](cfg, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
