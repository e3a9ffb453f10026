#!/usr/bin/env python3
"""Ergodic average rate vs total transmit power for several noise settings,
one series per input CSV.

Usage: fig3_rate_vs_power.py <base.csv> [<more.csv> ...] <out.png>
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from plotlib import FigureSpec, run_script


def spec(csv_paths: list[str], out_path: str) -> FigureSpec:
    return FigureSpec(
        inputs=[("", Path(p)) for p in csv_paths],
        x_column="sweep_value",
        y_column="ergodic_rate",
        x_label="total transmit power (dB)",
        output=Path(out_path),
        title="Average rate vs transmit power",
    )


if __name__ == "__main__":
    if len(sys.argv) < 3:
        print(__doc__, file=sys.stderr)
        sys.exit(2)
    sys.exit(run_script(spec(sys.argv[1:-1], sys.argv[-1])))
