# %% [markdown]
# # Deployments and channels
#
# Ambient transmitters are dropped as a Poisson point process on a 100 m
# disk around the harvester. Each one reaches the M-antenna array through a
# Rician channel whose LOS factor decays with distance.

# %%
import numpy as np

from dynrf import draw_channel_matrix, draw_deployment, pathloss, rician_factor, steering_vector

rng = np.random.default_rng(1)
density = 10**-2.8  # transmitters per m^2
dep = draw_deployment(density, 100.0, rng)
print(f"{len(dep)} transmitters (mean {dep.mean_count:.1f})")
for site in dep.sites[:5]:
    print(f"  d = {site.distance:6.2f} m   bearing = {np.degrees(site.bearing):6.1f} deg")

# %% [markdown]
# Path loss is 40 dB at 1 m with exponent 2.7; the Rician factor goes from
# 14 dB at 1 m to -4 dB at 10 m, linearly in dB.

# %%
for d in (1, 2, 5, 10, 30):
    print(f"d = {d:3d} m   beta = {pathloss(d):.3e}   kappa = {10 * np.log10(rician_factor(d)):6.1f} dB")

# %% [markdown]
# The received power per antenna averages to ``p * beta`` regardless of the
# LOS share. The nearest transmitter dominates the harvestable power.

# %%
H = draw_channel_matrix(dep, 4, 0.1, rng)
per_source = np.sum(np.abs(H.entries) ** 2, axis=1)
print("share of received power from nearest source:", per_source[0] / per_source.sum())
print("steering vector at 30 deg, M=4:", np.round(steering_vector(np.radians(30), 4), 3))

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(4, 4))
    angle = np.linspace(0, 2 * np.pi, 200)
    ax.plot(100 * np.cos(angle), 100 * np.sin(angle), "k:", lw=0.8)
    x = dep.distances * np.cos(dep.bearings)
    y = dep.distances * np.sin(dep.bearings)
    ax.scatter(x, y, s=12, label="sources (folded to the front side)")
    ax.plot(0, 0, "r^", label="harvester")
    ax.set_aspect("equal")
    ax.legend(fontsize=7)
    fig.savefig("deployment.png", dpi=120, bbox_inches="tight")
