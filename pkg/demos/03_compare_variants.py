"""Side-by-side comparison of pyramid variants through the CLI commands.

Equivalent to

    featpyr gen-data --config small.ini --out runs/demo/data
    featpyr compare  --config small.ini --data runs/demo/data --out runs/demo/compare --seeds 0

but with a tiny budget. Expect noisy numbers at this scale; the full
comparison uses the default config and three seeds.

    python3 demos/03_compare_variants.py
"""
from pathlib import Path

from featpyr.config import ExperimentConfig
from featpyr.experiment import cmd_compare, cmd_gen_data

root = Path("runs/demo")
cfg = ExperimentConfig().replace(
    data={"n_train": 300, "n_val": 100},
    train={"stage_epochs": (3, 1), "stage_lr": (3e-3, 3e-4)},
)
cmd_gen_data(cfg, root / "data", force=True)
cmd_compare(cfg, ["identity", "lateral", "global_local"], [0], root / "data", root / "compare",
            force=True, latency_runs=20)
print((root / "compare" / "comparison.txt").read_text())
print("per-cell outputs under", root / "compare")
