#!/usr/bin/env python3
"""Worst-case ergodic average rate vs transmit power under per-user CSI error
budgets, one series per input CSV (perfect CSI plus robust variants).

Usage: fig4_rate_vs_power_csi_error.py <nominal.csv> [<robust.csv> ...] <out.png>
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
        title="Average rate vs transmit power under CSI error",
    )


if __name__ == "__main__":
    if len(sys.argv) < 3:
        print(__doc__, file=sys.stderr)
        sys.exit(2)
    sys.exit(run_script(spec(sys.argv[1:-1], sys.argv[-1])))
