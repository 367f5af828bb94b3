"""The ablation ladder: what each stage switches on, and how the stages score.

Stages are cumulative config presets. This script prints the settings that
change from one stage to the next, then plots the proxy-rFID of whichever
stages have been trained by `flowtok ladder` (or by the acceptance suite),
read from runs/ladder/report-<stage>.json.

Train the desk ladder first (several hours on CPU):
    python -m flowtok -v ladder --out runs/ladder

Run: python demos/05_ablation_ladder.py   (writes demos/out/05_ladder.png if reports exist)
"""

import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from flowtok.config import STAGES, to_dict
from flowtok.ladder import STAGE_NFE, stage_config

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

previous = None
for stage in STAGES:
    tree = to_dict(stage_config(stage))
    if previous is not None:
        changed = [
            f"{s}.{k}={tree[s][k]}"
            for s in tree
            for k in tree[s]
            if tree[s][k] != previous[s][k] and (s, k) != ("trainer", "ablation_stage")
        ]
        print(f"{stage:8s} nfe={STAGE_NFE[stage]:4d}  {', '.join(changed)}")
    else:
        print(f"{stage:8s} nfe={STAGE_NFE[stage]:4d}  DDPM schedule, uniform times, plain UNet")
    previous = tree

root = Path(__file__).resolve().parents[1] / "runs" / "ladder"
scores = {}
for stage in STAGES:
    path = root / f"report-{stage}.json"
    if path.exists():
        scores[stage] = json.loads(path.read_text())["rfid_proxy"]
if not scores:
    print(f"no ladder reports under {root}")
else:
    for stage, v in scores.items():
        print(f"stage {stage}: proxy-rFID {v:.3f}")
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(range(len(scores)), list(scores.values()), marker="o")
    ax.set_xticks(range(len(scores)), list(scores))
    ax.set_xlabel("stage")
    ax.set_ylabel("proxy-rFID")
    fig.tight_layout()
    fig.savefig(out / "05_ladder.png", dpi=100)
