#!/usr/bin/env python3
"""Ergodic average rate vs the swept transmitter-user distance, one series per
swept variable (d_ac and d_ab).

Usage: fig2_rate_vs_distance.py <sweep.csv> <out.png>
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from plotlib import FigureSpec, run_script


def spec(csv_path: str, out_path: str) -> FigureSpec:
    return FigureSpec(
        inputs=[("sweep of", Path(csv_path))],
        x_column="sweep_value",
        y_column="ergodic_rate",
        group_column="sweep_var",
        x_label="distance (m)",
        output=Path(out_path),
        title="Average rate vs user distances",
    )


if __name__ == "__main__":
    if len(sys.argv) != 3:
        print(__doc__, file=sys.stderr)
        sys.exit(2)
    sys.exit(run_script(spec(sys.argv[1], sys.argv[2])))
