"""The same workflow through the command line: train, reconstruct, evaluate, plot.

Each call below is what you would type in a shell as `flowtok ...`.

Run: python demos/06_command_line.py   (writes under demos/out/cli/)
"""

import shutil
from pathlib import Path

from PIL import Image

from flowtok.cli import main
from flowtok.data_io import synthetic_shapes

work = Path(__file__).parent / "out" / "cli"
shutil.rmtree(work, ignore_errors=True)
images = work / "images"
images.mkdir(parents=True)
for i, im in enumerate(synthetic_shapes(5, 4, 16)[0]):
    Image.fromarray(im).save(images / f"shape{i}.png")

tiny = [
    "--data.resolution", "16,16", "--data.count", "32",
    "--encoder.downsample_factor", "4", "--encoder.base_width", "8", "--encoder.latent_channels", "4",
    "--decoder.variant", "custom", "--decoder.channel_dim", "8", "--decoder.depth_multipliers", "1,2",
    "--decoder.blocks_per_resolution", "1", "--decoder.attention_levels", "",
    "--discriminator.base_width", "8", "--discriminator.num_downsample_layers", "2",
    "--trainer.batch_size", "4", "--trainer.total_steps", "30", "--trainer.warmup_steps", "0",
    "--eval.count", "8", "--eval.batch_size", "8",
]

run = work / "run"
print("$ flowtok train --out", run, "...")
main(["train", "--out", str(run), *tiny])

# a second train into the same directory is refused unless --resume is given (exit code 2)
print("exit code without --resume:", main(["train", "--out", str(run), *tiny]))

for steps in ("1", "3"):
    print(f"$ flowtok reconstruct --steps {steps}")
    main(["reconstruct", str(run / "checkpoint"), str(images), "--steps", steps, "--out", str(work / f"recon{steps}")])

sweep = work / "sweep.jsonl"
print("$ flowtok eval --steps 1 2 3 5 10")
main(["eval", str(run / "checkpoint"), "--steps", "1", "2", "3", "5", "10", "--out", str(sweep)])

print("$ flowtok eval --identity (sanity floor: proxy-rFID 0, PSNR at the cap, SSIM 1)")
main(["eval", "--identity", *tiny])

print("$ flowtok plot nfe_sweep")
main(["plot", "nfe_sweep", str(sweep), "--metric", "rfid_proxy", "--out", str(work / "nfe_sweep")])
