# %% [markdown]
# # End-to-end scenario and altitude planning
#
# Evaluate every elected head's uplink from a UAV at 100 m, then find the lowest
# altitude that puts every head inside the LoS footprint.

# %%
from a2g_sim import AirPosition, ClusteringParams, Scenario, run_scenario

sc = Scenario(
    uav=AirPosition(0.0, 0.0, 100.0),
    clustering=ClusteringParams(region_radius=250.0, density=2e-4, seed=7),
)
res = run_scenario(sc)
print(res.clustering)
print(f"heads failing the 0.95 LoS threshold at 100 m: {len(res.infeasible_heads)} / {len(res.links)}")
print(f"lowest altitude covering every head: {res.min_coverage_altitude_m:.1f} m")

# %%
for lr in sorted(res.links, key=lambda r: r.slant_distance_m)[:8]:
    print(f"head {lr.ch_id:3d}: d={lr.slant_distance_m:6.1f} m  theta={lr.elevation_deg:5.1f} deg  "
          f"P_LoS={lr.p_los:.3f}  rx={lr.rx_power_dbm:6.1f} dBm  p_min={lr.min_tx_power_w:.2e} W")

# %% [markdown]
# Raising the UAV to the planned altitude makes every head feasible.

# %%
planned = Scenario(uav=AirPosition(0.0, 0.0, res.min_coverage_altitude_m), clustering=sc.clustering)
again = run_scenario(planned)
print("infeasible heads at planned altitude:", list(again.infeasible_heads))
far = max(again.links, key=lambda r: r.slant_distance_m)
print(f"farthest head P_LoS = {far.p_los:.6f}")
