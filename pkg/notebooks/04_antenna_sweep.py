# %% [markdown]
# # Antenna count and optimum resolution (lambda = 10^-2.8 /m^2)
#
# BF and ST are evaluated at 1..4 bits and reported at the resolution with
# the largest mean net energy. CB needs ceil(log2 M) bits. All antenna
# counts reuse the same deployments and fading draws.

# %%
from dynrf import SweepSpec, sweep_antennas

TRIALS = 300
rows = sweep_antennas(SweepSpec("antennas", tuple(range(2, 9)), TRIALS,
                                ("GA_inf", "ST", "CB", "BF", "RC"), master_seed=1))
for r in rows:
    net = "infeasible" if r.mean_E_net is None else f"{r.mean_E_net * 1e9:8.2f} nJ"
    print(f"M={r.M} {r.scheme:7s} B*={r.B_used}  E_net={net}")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for scheme in ("GA_inf", "ST", "CB", "BF", "RC"):
        sel = [r for r in rows if r.scheme == scheme and r.mean_E_net is not None]
        ax.plot([r.M for r in sel], [r.mean_E_net for r in sel], marker="o", label=scheme)
    ax.set(xlabel="antennas M", ylabel="E_net [J]")
    ax.legend(fontsize=7)
    fig.savefig("antenna_sweep.png", dpi=120, bbox_inches="tight")
