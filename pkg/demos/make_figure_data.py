"""Generate the CSV data behind all twelve figure analogs.

Runs every config in configs/ through the scenario runner.  The impurity
J-scan (fig01) dominates the runtime (a few minutes of self-consistent
solves); everything else is seconds.  Pass config name fragments as
arguments to run a subset, e.g. `python demos/make_figure_data.py fig07 fig12`.
"""

import sys
import time
from pathlib import Path

from fidspec.cli import run_scenario

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    wanted = sys.argv[1:]
    configs = sorted((ROOT / "configs").glob("*.json"))
    if wanted:
        configs = [c for c in configs if any(w in c.name for w in wanted)]
    if not configs:
        print("no configs matched", file=sys.stderr)
        return 1
    for cfg in configs:
        t0 = time.perf_counter()
        bundle = run_scenario(cfg)
        names = ", ".join(p.name for p in bundle.csv_paths)
        print(f"{cfg.name}: {names} ({time.perf_counter() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
