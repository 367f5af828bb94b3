"""Few-step decoding against fields whose answer is known in closed form.

If every training image were the same image c, the ideal velocity would be
(x_t - gamma c) / t. The Euler sampler then lands on c exactly, in any number
of steps, because every trajectory is a straight line.

Run: python demos/02_oracle_sampling.py
"""

import torch

from flowtok.data_io import normalize, synthetic_shapes
from flowtok.encoder import LatentCode
from flowtok.flowmath import ScheduleConfig, ddpm_coefficients
from flowtok.sampler import CountingDecoder, OracleDecoder, SamplerConfig, decode

c = normalize(synthetic_shapes(0, 2, 32)[0]).double()
z = LatentCode(torch.zeros(2, 8, 8, 8, dtype=torch.float64), (32, 32))

for gamma in (1.0, 0.6):
    for grid in ("rholog", "uniform"):
        for N in (1, 2, 3, 10):
            counter = CountingDecoder(OracleDecoder(c, gamma))
            out = decode(z, SamplerConfig(num_steps=N, grid=grid, gamma=gamma, seed=N), counter, clamp=False)
            err = float((out - c).abs().max())
            print(f"gamma={gamma} {grid:7s} N={N:2d}: calls={counter.calls:2d} max error={err:.1e}")

# The discrete baseline: an exact noise predictor makes deterministic DDIM exact too.
sched = ScheduleConfig(kind="ddpm_linear")
alpha, sigma = ddpm_coefficients(sched)
T = sched.num_discrete_steps


def eps_oracle(x, t, z):
    s = int(round(float(t[0]) * T))
    return (x - float(alpha[s]) * c) / float(sigma[s])


for N in (1, 10, 50):
    out = decode(z, SamplerConfig(num_steps=N, grid="uniform"), eps_oracle, sched, clamp=False)
    print(f"DDIM N={N:2d}: max error={float((out - c).abs().max()):.1e}")

# A field that ignores the target shows what the sampler does when the model is wrong:
# the output is just the transported noise, clamped to the image range.
out = decode(z, SamplerConfig(num_steps=3, seed=0), lambda x, t, z: torch.zeros_like(x))
print("zero field output range:", float(out.min()), float(out.max()))
