# %% [markdown]
# # Uplink budget and QPSK bit-error rate
#
# Received power at the UAV, the minimum head transmit power for a BER target,
# and the round trip between them.

# %%
from dataclasses import replace

import numpy as np

from a2g_sim import (
    LinkBudget,
    bit_error_rate,
    inv_q_function,
    min_tx_power_watts,
    q_function,
    received_power_dbm,
    watts_to_dbm,
)

lb = LinkBudget()
lb

# %% [markdown]
# ## Received power versus distance and path-loss exponent

# %%
for alpha in (2.0, 2.5, 3.0):
    lba = replace(lb, path_loss_exponent=alpha)
    row = "  ".join(f"{received_power_dbm(lba, d):8.2f}" for d in (100, 250, 500, 1000))
    print(f"alpha={alpha}: {row}  dBm at 100/250/500/1000 m")

# %% [markdown]
# ## Minimum transmit power for BER 1e-8
#
# Feeding the minimum power back through the link budget lands exactly on the
# target BER, for any exponent.

# %%
print(f"Q^-1(1e-8) = {inv_q_function(1e-8):.6f}")
for alpha in (2.0, 2.5, 3.0):
    lba = replace(lb, path_loss_exponent=alpha)
    for d in (200, 500):
        p_w = min_tx_power_watts(lba, d)
        rx = received_power_dbm(replace(lba, tx_power_dbm=watts_to_dbm(p_w)), d)
        print(f"alpha={alpha} d={d:4d} m: p_min={p_w:.3e} W ({watts_to_dbm(p_w):7.2f} dBm) "
              f"-> BER {bit_error_rate(lba, rx):.3e}")

# %% [markdown]
# ## BER versus received power
#
# With the default 13 dBm head, the 500 m link has an SNR argument around 34,
# far below the numeric floor, so its BER is reported as 0.

# %%
for p in np.arange(-125.0, -100.0, 2.5):
    print(f"{p:7.1f} dBm  BER={bit_error_rate(lb, p):.3e}")
print("BER at -89.31 dBm:", bit_error_rate(lb, received_power_dbm(lb, 500)))
print("Q(2) =", q_function(2.0))
