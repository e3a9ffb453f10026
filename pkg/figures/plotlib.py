"""Shared rendering helpers for the figure scripts.

Each script reads one or more sweep CSVs produced by the `covertrate` CLI and
draws a multi-series line plot.  Series come either from a grouping column
inside one CSV or from separate CSVs (one series per file).  Rendering never
transforms the numbers: plotted points are exactly the CSV values.
"""

from __future__ import annotations

import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_MARKERS = ("o", "s", "^", "d", "v", "*")


class FigureError(Exception):
    """Bad figure inputs (missing column, empty CSV, unreadable file)."""


@dataclass
class FigureSpec:
    inputs: list[tuple[str, Path]]  # (series label, csv path); label may be ""
    x_column: str
    y_column: str
    output: Path
    group_column: str | None = None
    x_label: str = ""
    y_label: str = "Ergodic average rate (bps/Hz)"
    title: str = ""


def read_rows(path: Path) -> list[dict[str, str]]:
    try:
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        raise FigureError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise FigureError(f"{path}: CSV has no data rows")
    return rows


def _column(rows: list[dict[str, str]], name: str, path: Path) -> list[str]:
    if name not in rows[0]:
        raise FigureError(f"{path}: missing column {name!r}")
    return [row[name] for row in rows]


def load_series(spec: FigureSpec) -> list[tuple[str, list[float], list[float]]]:
    """Series as (label, x values, y values), in first-appearance order."""
    series = []
    for label, path in spec.inputs:
        rows = read_rows(path)
        _column(rows, spec.x_column, path)
        _column(rows, spec.y_column, path)
        if spec.group_column is not None:
            _column(rows, spec.group_column, path)
            groups: dict[str, list[dict]] = {}
            for row in rows:
                groups.setdefault(row[spec.group_column], []).append(row)
            for key, grouped in groups.items():
                name = f"{label} {key}".strip()
                series.append((name,
                               [float(r[spec.x_column]) for r in grouped],
                               [float(r[spec.y_column]) for r in grouped]))
        else:
            series.append((label or path.stem,
                           [float(r[spec.x_column]) for r in rows],
                           [float(r[spec.y_column]) for r in rows]))
    return series


def render(spec: FigureSpec):
    """Draw the figure, save it to spec.output and return (figure, series)."""
    series = load_series(spec)
    fig, ax = plt.subplots(figsize=(6.4, 4.2), dpi=144)
    for idx, (label, xs, ys) in enumerate(series):
        ax.plot(xs, ys, marker=_MARKERS[idx % len(_MARKERS)], label=label)
    ax.set_xlabel(spec.x_label or spec.x_column)
    ax.set_ylabel(spec.y_label)
    if spec.title:
        ax.set_title(spec.title)
    ax.grid(True, alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig(spec.output)
    return fig, series


def run_script(spec: FigureSpec) -> int:
    """Script entry: render, report, exit nonzero on bad inputs."""
    try:
        render(spec)
    except FigureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {spec.output}")
    return 0
