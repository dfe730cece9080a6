"""Train a small global_local detector and evaluate it.

A reduced budget (600 images, 6 epochs) so it finishes in a few minutes on
one core; the default config is much larger.

    python3 demos/02_train_and_eval.py [variant]
"""
import sys

from featpyr.config import ExperimentConfig
from featpyr.data import generate_dataset
from featpyr.metrics import evaluate
from featpyr.train import LOG_HEADER, train

variant = sys.argv[1] if len(sys.argv) > 1 else "global_local"
cfg = ExperimentConfig().replace(
    pyramid={"variant": variant},
    data={"n_train": 600, "n_val": 150},
    train={"stage_epochs": (4, 2), "stage_lr": (3e-3, 3e-4)},
)
splits = generate_dataset(cfg.data.scene, cfg.data.n_train, cfg.data.n_val)

print(LOG_HEADER)
result = train(cfg, splits, on_epoch=lambda rec, res: print(rec.line(), flush=True))
report = evaluate(result.model, splits.val, latency_runs=20)
print(f"\nbest epoch {result.best_epoch}")
print(report.to_text())
