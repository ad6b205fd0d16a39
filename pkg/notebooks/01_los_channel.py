# %% [markdown]
# # LoS probability and coverage geometry
#
# How the sigmoid LoS model turns into a coverage footprint for a hovering UAV.

# %%
from a2g_sim import (
    URBAN,
    Environment,
    coverage_ground_radius,
    elevation_angle_deg,
    los_probability,
    los_threshold_angle,
    max_slant_distance,
)

# %% [markdown]
# At the environment's own `a` (in degrees) the exponent vanishes and the
# probability is `1/(1+a)`.

# %%
print(f"P_LoS(9.6 deg) = {los_probability(9.6, URBAN):.7f}  (1/(1+a) = {1 / 10.6:.7f})")
for theta in (0, 15, 30, 45, 60, 70, 90):
    print(f"  theta={theta:2d} deg  P_LoS={los_probability(theta, URBAN):.5f}")

# %% [markdown]
# ## Threshold angle and coverage footprint
#
# A head is served when its LoS probability reaches 0.95. That fixes a minimum
# elevation angle; at a given altitude this becomes a maximum slant distance and
# a ground radius.

# %%
theta_min = los_threshold_angle(0.95, URBAN)
print(f"minimum elevation for P_LoS >= 0.95: {theta_min:.3f} deg")
for h in (100, 150, 200):
    d = max_slant_distance(h, 0.95, URBAN)
    r = coverage_ground_radius(h, 0.95, URBAN)
    print(f"H={h} m: slant <= {d:6.1f} m, ground radius <= {r:6.1f} m, "
          f"check angle {elevation_angle_deg(h, d):.3f} deg")

# %% [markdown]
# ## Other environments
#
# Only the urban preset ships with values. Other environments take explicit
# `(a, b)` pairs; the ones below are illustrative, not calibrated.

# %%
steep = Environment("illustrative-steep", 12.0, 0.11)
print(f"{steep.name}: theta_min(0.95) = {los_threshold_angle(0.95, steep):.2f} deg")
try:
    los_threshold_angle(0.9999999, Environment("flat", 9.6, 0.01))
except Exception as exc:  # InfeasibleError
    print(f"{type(exc).__name__}: {exc}")
