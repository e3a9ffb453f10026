#!/usr/bin/env python3
"""Ergodic average rate vs covert-user distance with and without successive
interference cancellation; series split on the CSV's mode column.

Usage: fig5_sic_comparison.py <sweep.csv> <out.png>
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from plotlib import FigureSpec, run_script


def spec(csv_path: str, out_path: str) -> FigureSpec:
    return FigureSpec(
        inputs=[("mode", Path(csv_path))],
        x_column="sweep_value",
        y_column="ergodic_rate",
        group_column="mode",
        x_label="transmitter to covert-user distance (m)",
        output=Path(out_path),
        title="Average rate with and without SIC",
    )


if __name__ == "__main__":
    if len(sys.argv) != 3:
        print(__doc__, file=sys.stderr)
        sys.exit(2)
    sys.exit(run_script(spec(sys.argv[1], sys.argv[2])))
