"""Experiment driver: Monte Carlo ergodic averaging over fading draws,
parameter sweeps, oracle-gap reports and the detection-simulator CSV.

Configuration is a single JSON document; any power or noise field may be
given in dB by suffixing its name with ``_db``.  Every draw owns an
independent random substream keyed by (seed, sweep index, draw index), so
output is byte-identical regardless of execution order or parallelism.
Infeasible draws are excluded from the ergodic mean and reported as a
fraction.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .detection import fa_prob, md_prob, psi_params, simulate_received_power
from .model import (ChannelRealization, NetworkGeometry, NoiseProfile, PowerPolicy,
                    QosRequirements, SlotModel, db_to_linear, link_snrs,
                    sample_channel)
from .rates import sic_indicator
from .robust import UncertaintyBudget, robust_solve
from .solver import (Mode, SolveResult, SolverConfig, an_solve, dc_solve,
                     grid_oracle, sic_solve)

MODES = ("joint", "sic", "an-auto", "robust")

SWEEP_CSV_COLUMNS = ("sweep_var", "sweep_value", "mode", "ergodic_rate",
                     "mean_rho_cs", "infeasible_frac", "oracle_gap_median",
                     "draws", "seed")
DETECT_CSV_COLUMNS = ("n", "theta", "p_fa_closed", "p_md_closed", "p_fa_emp",
                      "p_md_emp", "trials", "seed")

# sweepable configuration fields -> setter
_SWEEPABLE = ("d_ab", "d_ac", "d_au", "d_aw", "p_db", "p",
              "eps_d", "eps_b", "eps_c", "eps_u", "r_sec_min", "r_cov_min")


class ConfigError(ValueError):
    """Invalid experiment configuration; message names the offending field."""


@dataclass(frozen=True)
class DetectSettings:
    """Inputs for the detection-simulator CSV."""

    n: int = 5000
    trials: int = 20000
    rho_s: float = 0.5
    thetas: Optional[tuple[float, ...]] = None
    num_thetas: int = 5
    theta_span: float = 3.0  # thresholds span [sigma2_w, sigma2_w + span*psi1]


@dataclass(frozen=True)
class ExperimentConfig:
    geometry: NetworkGeometry
    noise: NoiseProfile
    p: float  # total transmit power, linear
    slots: SlotModel
    qos: QosRequirements
    budget: UncertaintyBudget = UncertaintyBudget()
    sweep_variable: Optional[str] = None
    sweep_values: tuple[float, ...] = ()
    draws: int = 1000
    seed: int = 1
    mode: str = "joint"
    oracle_compare: bool = False
    solver: SolverConfig = SolverConfig()
    detect: DetectSettings = DetectSettings()

    def __post_init__(self):
        if self.draws < 1:
            raise ConfigError("draws must be at least 1")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.sweep_variable is not None:
            if self.sweep_variable not in _SWEEPABLE:
                raise ConfigError(
                    f"sweep.variable must be one of {_SWEEPABLE}, "
                    f"got {self.sweep_variable!r}")
            if not self.sweep_values:
                raise ConfigError("sweep.values must be nonempty")


def table_defaults() -> dict:
    """Baseline simulation setting: detection-error floor 0.9 (epsilon 0.1),
    untrusted user and warden at 5 m, path-loss exponent 4, rate floors
    0.5 / 0.1 bps/Hz, covert slots half the time, figure-caption noise levels
    and 3 dB total power."""
    return {
        "geometry": {"d_ab": 5.0, "d_ac": 5.0, "d_au": 5.0, "d_aw": 5.0,
                     "alpha": 4.0},
        "noise": {"sigma2_b_db": -33.0, "sigma2_c_db": -33.0,
                  "sigma2_u_db": -30.0, "sigma2_w_db": -30.0},
        "power": {"p_db": 3.0},
        "slots": {"p_r1": 0.5},
        "qos": {"r_sec_min": 0.5, "r_cov_min": 0.1, "epsilon": 0.1},
    }


def _merged(base: dict, override: dict) -> dict:
    out = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merged(out[key], value)
        else:
            out[key] = value
    return out


def _linear_field(section: dict, name: str, where: str) -> float:
    """Read ``name`` or ``name_db`` from a config section."""
    has_lin, has_db = name in section, f"{name}_db" in section
    if has_lin and has_db:
        raise ConfigError(f"{where}: give either {name} or {name}_db, not both")
    if has_db:
        return db_to_linear(float(section[f"{name}_db"]))
    if has_lin:
        return float(section[name])
    raise ConfigError(f"{where}: missing {name} (or {name}_db)")


def _drop_default_alternative(merged: dict, user: dict, section: str,
                              name: str) -> None:
    """A user-supplied ``name`` (or ``name_db``) replaces the default's other
    spelling rather than clashing with it."""
    user_section = user.get(section) or {}
    if name in user_section and f"{name}_db" not in user_section:
        merged[section].pop(f"{name}_db", None)
    if f"{name}_db" in user_section and name not in user_section:
        merged[section].pop(name, None)


def config_from_dict(doc: dict) -> ExperimentConfig:
    """Build a validated ExperimentConfig from a JSON document, applying the
    baseline defaults to any omitted field."""
    user = doc
    doc = _merged(table_defaults(), doc)
    _drop_default_alternative(doc, user, "power", "p")
    for x in "bcuw":
        _drop_default_alternative(doc, user, "noise", f"sigma2_{x}")
    try:
        geometry = NetworkGeometry(**{k: float(v)
                                      for k, v in doc["geometry"].items()})
        noise = NoiseProfile(**{f"sigma2_{x}": _linear_field(doc["noise"],
                                                             f"sigma2_{x}", "noise")
                                for x in "bcuw"})
        p = _linear_field(doc["power"], "p", "power")
        slots_doc = doc["slots"]
        if "p_r0" in slots_doc:
            slots = SlotModel(p_r0=float(slots_doc["p_r0"]),
                              p_r1=float(slots_doc["p_r1"]))
        else:
            slots = SlotModel.from_p_r1(float(slots_doc["p_r1"]))
        qos = QosRequirements(**{k: float(v) for k, v in doc["qos"].items()})
        budget = UncertaintyBudget(**{k: float(v)
                                      for k, v in doc.get("budget", {}).items()})
        solver = SolverConfig(**doc.get("solver", {}))
        detect_doc = dict(doc.get("detect", {}))
        if "thetas" in detect_doc and detect_doc["thetas"] is not None:
            detect_doc["thetas"] = tuple(float(t) for t in detect_doc["thetas"])
        detect = DetectSettings(**detect_doc)
    except ConfigError:
        raise
    except (TypeError, ValueError, KeyError) as exc:
        raise ConfigError(str(exc)) from exc

    sweep = doc.get("sweep")
    sweep_variable = None
    sweep_values: tuple[float, ...] = ()
    if sweep is not None:
        sweep_variable = sweep.get("variable")
        sweep_values = tuple(float(v) for v in sweep.get("values", ()))

    return ExperimentConfig(
        geometry=geometry, noise=noise, p=p, slots=slots, qos=qos,
        budget=budget, sweep_variable=sweep_variable, sweep_values=sweep_values,
        draws=int(doc.get("draws", 1000)), seed=int(doc.get("seed", 1)),
        mode=str(doc.get("mode", "joint")),
        oracle_compare=bool(doc.get("oracle_compare", False)),
        solver=solver, detect=detect)


def load_config(path: str) -> ExperimentConfig:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: top-level JSON value must be an object")
    return config_from_dict(doc)


def apply_sweep_value(cfg: ExperimentConfig, value: float) -> ExperimentConfig:
    """Return a copy of cfg with the swept variable set to ``value``."""
    var = cfg.sweep_variable
    if var is None:
        return cfg
    if var in ("d_ab", "d_ac", "d_au", "d_aw"):
        return replace(cfg, geometry=replace(cfg.geometry, **{var: value}))
    if var == "p_db":
        return replace(cfg, p=db_to_linear(value))
    if var == "p":
        return replace(cfg, p=value)
    if var in ("eps_d", "eps_b", "eps_c", "eps_u"):
        return replace(cfg, budget=replace(cfg.budget, **{var: value}))
    if var in ("r_sec_min", "r_cov_min"):
        return replace(cfg, qos=replace(cfg.qos, **{var: value}))
    raise ConfigError(f"unknown sweep variable {var!r}")


@dataclass(frozen=True)
class DrawOutcome:
    feasible: bool
    rate: float = math.nan
    rho_cs: float = math.nan
    gap: float = math.nan


@dataclass(frozen=True)
class ResultRow:
    sweep_var: str
    sweep_value: float
    mode: str
    ergodic_rate: float
    mean_rho_cs: float
    infeasible_frac: float
    oracle_gap_median: Optional[float]
    draws: int
    seed: int


def solve_draw(cfg: ExperimentConfig, ch: ChannelRealization) -> SolveResult:
    """Dispatch one fading draw to the solver selected by cfg.mode."""
    if cfg.mode == "robust":
        return robust_solve(ch, cfg.geometry, cfg.noise, cfg.p, cfg.slots,
                            cfg.qos, cfg.budget, cfg.solver)
    snrs = link_snrs(cfg.geometry, cfg.noise, cfg.p, ch)
    if cfg.mode == "joint":
        return dc_solve(snrs, cfg.slots, cfg.qos, cfg.solver, cfg.p)
    if cfg.mode == "an-auto":
        return an_solve(snrs, cfg.slots, cfg.qos, cfg.solver, cfg.p)
    if cfg.mode == "sic":
        a = sic_indicator(cfg.geometry, ch)
        return sic_solve(snrs, cfg.slots, cfg.qos, a, cfg.solver, cfg.p)
    raise ConfigError(f"unknown mode {cfg.mode!r}")


def _oracle_gap(cfg: ExperimentConfig, ch: ChannelRealization,
                result: SolveResult) -> float:
    """Relative gap of the solver against the exhaustive grid baseline on the
    true objective (0 when the baseline value is not positive)."""
    snrs = link_snrs(cfg.geometry, cfg.noise, cfg.p, ch)
    if cfg.mode == "sic":
        oracle = grid_oracle(snrs, cfg.slots, cfg.qos, cfg.solver.oracle_grid,
                             "sic", a=sic_indicator(cfg.geometry, ch))
    elif result.mode == Mode.ARTIFICIAL_NOISE or cfg.mode == "an-auto":
        oracle = grid_oracle(snrs, cfg.slots, cfg.qos, cfg.solver.oracle_grid, "an")
    else:
        oracle = grid_oracle(snrs, cfg.slots, cfg.qos, cfg.solver.oracle_grid)
    if not oracle.feasible:
        return 0.0
    o = oracle.rates.average_rate
    s = result.rates.average_rate
    return (o - s) / o if o > 0 else 0.0


def _run_draw(cfg: ExperimentConfig, value_idx: int, draw_idx: int,
              with_gap: bool) -> DrawOutcome:
    ss = np.random.SeedSequence(entropy=cfg.seed, spawn_key=(value_idx, draw_idx))
    ch = sample_channel(ss)
    result = solve_draw(cfg, ch)
    if not result.feasible:
        return DrawOutcome(feasible=False)
    gap = _oracle_gap(cfg, ch, result) if with_gap else math.nan
    return DrawOutcome(feasible=True, rate=result.rates.average_rate,
                       rho_cs=result.policy.rho_cs, gap=gap)


def run_sweep(cfg: ExperimentConfig) -> list[ResultRow]:
    """One ResultRow per sweep value; the ergodic rate averages the achieved
    average rate over feasible draws."""
    if cfg.sweep_variable is None:
        raise ConfigError("run_sweep requires a sweep section in the config")
    rows = []
    for value_idx, value in enumerate(cfg.sweep_values):
        sub = apply_sweep_value(cfg, value)
        outcomes = [_run_draw(sub, value_idx, d, cfg.oracle_compare)
                    for d in range(cfg.draws)]
        rows.append(_aggregate(cfg, value, outcomes))
    return rows


def _aggregate(cfg: ExperimentConfig, value: float,
               outcomes: Sequence[DrawOutcome]) -> ResultRow:
    rates = np.array([o.rate for o in outcomes if o.feasible])
    rhos = np.array([o.rho_cs for o in outcomes if o.feasible])
    gaps = np.array([o.gap for o in outcomes if o.feasible and not math.isnan(o.gap)])
    n_feas = len(rates)
    return ResultRow(
        sweep_var=cfg.sweep_variable or "none",
        sweep_value=value,
        mode=cfg.mode,
        ergodic_rate=float(np.mean(rates)) if n_feas else math.nan,
        mean_rho_cs=float(np.mean(rhos)) if n_feas else math.nan,
        infeasible_frac=1.0 - n_feas / len(outcomes),
        oracle_gap_median=float(np.median(gaps)) if gaps.size else None,
        draws=cfg.draws,
        seed=cfg.seed,
    )


@dataclass(frozen=True)
class GapStats:
    """Per-draw oracle-gap statistics over the feasible draws."""

    median: float
    mean: float
    max: float
    feasible_draws: int
    infeasible_draws: int
    gaps: tuple[float, ...]


def oracle_gap_report(cfg: ExperimentConfig) -> GapStats:
    """Relative solver-vs-oracle gaps at the base configuration (no sweep)."""
    gaps = []
    infeasible = 0
    for d in range(cfg.draws):
        outcome = _run_draw(cfg, 0, d, with_gap=True)
        if outcome.feasible:
            gaps.append(outcome.gap)
        else:
            infeasible += 1
    if not gaps:
        return GapStats(math.nan, math.nan, math.nan, 0, infeasible, ())
    arr = np.array(gaps)
    return GapStats(median=float(np.median(arr)), mean=float(np.mean(arr)),
                    max=float(np.max(arr)), feasible_draws=len(gaps),
                    infeasible_draws=infeasible, gaps=tuple(gaps))


# ---------------------------------------------------------------------------
# CSV emission


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def write_csv(columns: Sequence[str], rows: Sequence[Sequence], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])


def sweep_rows_to_csv(rows: Sequence[ResultRow], out) -> None:
    write_csv(SWEEP_CSV_COLUMNS,
              [dataclasses.astuple(r) for r in rows], out)


def sweep_csv_text(rows: Sequence[ResultRow]) -> str:
    buf = io.StringIO()
    sweep_rows_to_csv(rows, buf)
    return buf.getvalue()


def detect_sim_rows(cfg: ExperimentConfig) -> list[tuple]:
    """Closed-form vs empirical detection-error rows for a threshold grid.

    The received-power statistics are simulated once and shared across all
    thresholds.
    """
    d = cfg.detect
    pol = PowerPolicy(rho_s=d.rho_s, rho_cs=0.5, P=cfg.p)
    psi = psi_params(pol, cfg.geometry.d_aw, cfg.geometry.alpha)
    sigma2_w = cfg.noise.sigma2_w
    if d.thetas is not None:
        thetas = d.thetas
    else:
        thetas = tuple(np.linspace(sigma2_w, sigma2_w + d.theta_span * psi.psi1,
                                   d.num_thetas))
    y0, y1 = simulate_received_power(d.n, d.trials, psi, sigma2_w,
                                     np.random.SeedSequence(cfg.seed))
    rows = []
    for theta in thetas:
        rows.append((d.n, theta,
                     fa_prob(theta, sigma2_w, psi.psi0),
                     md_prob(theta, sigma2_w, psi.psi1),
                     float(np.mean(y0 > theta)),
                     float(np.mean(y1 < theta)),
                     d.trials, cfg.seed))
    return rows


def detect_sim_csv(cfg: ExperimentConfig, out) -> None:
    write_csv(DETECT_CSV_COLUMNS, detect_sim_rows(cfg), out)
