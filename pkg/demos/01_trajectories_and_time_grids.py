"""Trajectories, gamma scaling, training-time density and inference grids.

Run: python demos/01_trajectories_and_time_grids.py   (writes demos/out/01_*.png)
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import torch

from flowtok.flowmath import (
    TimeSamplerConfig,
    inference_grid,
    logit_normal_pdf,
    norm_divisor,
    rho_log,
    sample_train_time,
    scaled_point,
    snr,
)

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# A clean value and a noise value, joined by a straight line.
# With gamma < 1 only the signal part shrinks, so the line ends lower at t=0.
x0, eps = torch.tensor([0.8]), torch.tensor([-1.3])
ts = torch.linspace(0, 1, 101)
fig, axes = plt.subplots(1, 3, figsize=(13, 3.6))
for gamma in (1.0, 0.6):
    path = torch.stack([scaled_point(x0, eps, float(t), gamma)[0] for t in ts]).squeeze()
    axes[0].plot(ts, path, label=f"gamma={gamma}")
    axes[1].plot(ts, [norm_divisor(float(t), gamma) for t in ts], label=f"gamma={gamma}")
axes[0].set_title("scaled trajectory point")
axes[1].set_title("input divisor")
for ax in axes[:2]:
    ax.set_xlabel("t")
    ax.legend()

# signal-to-noise ratio in log scale: gamma shifts the whole curve down by 2*log(gamma)
tt = torch.linspace(0.02, 0.98, 97)
for gamma in (1.0, 0.6):
    axes[2].plot(tt, torch.log(snr(tt, gamma)), label=f"gamma={gamma}")
axes[2].set_title("log SNR")
axes[2].legend()
fig.tight_layout()
fig.savefig(out / "01_trajectories.png", dpi=100)

# The normalised network input keeps unit variance for unit-variance data.
g = torch.Generator().manual_seed(0)
for gamma in (1.0, 0.6):
    a, e = torch.randn(100_000, generator=g), torch.randn(100_000, generator=g)
    xs, div = scaled_point(a, e, 0.5, gamma)
    print(f"gamma={gamma}: variance of normalised input at t=0.5 = {float((xs / div).var()):.4f}")

# Training times: logit-normal concentrates around t=0.5.
t = sample_train_time(torch.Generator().manual_seed(1), TimeSamplerConfig(), 200_000, torch.float64)
fig, ax = plt.subplots(figsize=(5, 3.5))
ax.hist(t.numpy(), bins=80, density=True, alpha=0.5, label="samples")
grid = torch.linspace(0.005, 0.995, 199, dtype=torch.float64)
ax.plot(grid, logit_normal_pdf(grid), label="density")
ax.set_xlabel("t")
ax.legend()
fig.tight_layout()
fig.savefig(out / "01_train_times.png", dpi=100)

# Inference grids: rho_log takes small steps near t=1 and big ones near t=0.
for N in (3, 5, 10):
    rl = inference_grid(N)
    un = inference_grid(N, uniform=True)
    print(f"N={N:2d} rho_log {np.round(rl.times, 4).tolist()}")
    print(f"     uniform {np.round(un.times, 4).tolist()}")
print("rho_log(0.5) =", rho_log(0.5))
