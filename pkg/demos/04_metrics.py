"""Reconstruction metrics on controlled distortions of the synthetic corpus.

Each "reconstructor" here is a fixed corruption, so the metric trends are
known in advance: more noise or more blur should lower PSNR and SSIM and
raise the Frechet distance between feature statistics.

Run: python demos/04_metrics.py   (writes demos/out/04_metrics.png)
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import torch
import torch.nn.functional as F

from flowtok.data_io import normalize, synthetic_shapes
from flowtok.features import RandomConvPyramid
from flowtok.metrics import eval_reconstruction

torch.set_num_threads(1)
out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

images = normalize(synthetic_shapes(3, 300, 32)[0])
batches = [images[i : i + 50] for i in range(0, len(images), 50)]
extractor = RandomConvPyramid(777)


def noisy(level):
    def apply(x):
        g = torch.Generator().manual_seed(0)
        return (x + level * torch.randn(x.shape, generator=g)).clamp(-1, 1), 0

    return apply


def blurred(k):
    def apply(x):
        if k == 1:
            return x, 0
        w = torch.full((3, 1, k, k), 1.0 / (k * k))
        return F.conv2d(F.pad(x, [k // 2] * 4, mode="replicate"), w, groups=3)[..., : x.shape[-2], : x.shape[-1]], 0

    return apply


fig, axes = plt.subplots(1, 2, figsize=(10, 3.5))
for ax, (name, family, levels) in zip(axes, [("noise std", noisy, [0.0, 0.05, 0.1, 0.2, 0.4]), ("box blur", blurred, [1, 3, 5, 7])]):
    fids = []
    for level in levels:
        rep = eval_reconstruction(batches, family(level), extractor)
        fids.append(rep.rfid_proxy)
        print(f"{name}={level}: proxy-rFID {rep.rfid_proxy:8.3f}  PSNR {rep.psnr:6.2f}  SSIM {rep.ssim:.3f}")
    ax.plot(levels, fids, marker="o")
    ax.set_xlabel(name)
    ax.set_ylabel("proxy-rFID")
fig.tight_layout()
fig.savefig(out / "04_metrics.png", dpi=100)
