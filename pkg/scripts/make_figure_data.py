#!/usr/bin/env python3
"""Regenerate the sweep CSVs behind the four figures.

Writes into artifacts/ (same filenames the test fixtures use).  Draw counts
default to a quick setting; pass --full for the acceptance-grade counts.
"""

import argparse
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

import conftest
from covertrate.harness import config_from_dict, run_sweep, sweep_csv_text


def scale_draws(doc: dict, quick: bool) -> dict:
    doc = dict(doc)
    if quick:
        doc["draws"] = min(doc["draws"], 2000)
    return doc


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="acceptance-grade draw counts (slow)")
    parser.add_argument("--out-dir", default=str(ROOT / "artifacts"))
    args = parser.parse_args()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(exist_ok=True)
    quick = not args.full

    jobs: list[tuple[str, list[dict]]] = [
        ("fig2_rate_vs_distance", conftest.FIG2_DOCS),
        ("fig5_sic_comparison", conftest.FIG5_DOCS),
    ]
    jobs += [(f"fig3_{label}", [doc]) for label, doc in conftest.FIG3_DOCS.items()]
    jobs += [(f"fig4_{label}", [doc]) for label, doc in conftest.FIG4_DOCS.items()]

    for name, docs in jobs:
        rows = []
        for doc in docs:
            rows.extend(run_sweep(config_from_dict(scale_draws(doc, quick))))
        path = out_dir / f"{name}.csv"
        path.write_text(sweep_csv_text(rows))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
