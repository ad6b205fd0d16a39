# %% [markdown]
# # Regenerating the parameter-sweep figures
#
# Writes fig3..fig7 as CSV + SVG into `figures_out/`, the same files the
# `a2g-sim figures` command produces.

# %%
from pathlib import Path

from a2g_sim.cli import cmd_figures
from a2g_sim.config import RunConfig
from a2g_sim.scenario import sweep_rx_power_vs_elevation

cfg = RunConfig().with_overrides(out=str(Path("figures_out")))
for path in cmd_figures(cfg):
    print(path)

# %% [markdown]
# The received-power curves are parallel in dB: at a fixed elevation the gap
# between exponents 2 and 3 equals one extra decade of `4*pi*f*d/c`.

# %%
s2, s25, s3 = sweep_rx_power_vs_elevation((2.0, 2.5, 3.0), altitude=100.0)
for theta, a, b, c in list(zip(s2.x, s2.y, s25.y, s3.y))[::20]:
    print(f"theta={theta:4.0f} deg  alpha=2: {a:7.2f}  2.5: {b:7.2f}  3: {c:7.2f} dBm  gap(2-3)={a - c:5.2f} dB")
