"""Run the whole pipeline at smoke-test size and print the few-shot grid.

    python3 demos/few_shot_grid.py [out_dir]

Uses the micro configuration with a 2x2 shot grid so it finishes in about a
minute; drop the ``micro`` call for the full experiment.
"""

import json
import sys
from dataclasses import replace
from pathlib import Path

from hybridsdg.cli import dispatch
from hybridsdg.config import RunConfig, micro

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out/few_shot")
cfg = micro(RunConfig())
cfg = replace(cfg, grid=replace(cfg.grid, pass_shots=(2, 4), fail_shots=(2, 4), repetitions=3))
status = dispatch("all", cfg, out=out)
if status:
    sys.exit(status)

exp = json.loads((out / "reports" / "experiment" / "experiment.json").read_text())
print()
print("cell (pass, fail)   SDG mean   FS-Real mean   difference")
for c in exp["cells"]:
    print(f"  ({c['n_pass']:2d}, {c['n_fail']:2d})         {c['sdg_mean']:.3f}      {c['fs_mean']:.3f}        {c['sdg_mean'] - c['fs_mean']:+.3f}")
