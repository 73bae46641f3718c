# %% [markdown]
# # Net and absolute energy versus transmitter density (M=4, B=2)
#
# Dense deployments make the exploration overhead pay off: the rigid
# pattern wins only in the ultra-low harvesting regime. Set ``TRIALS`` to
# 2000 for publication-grade curves (about half a minute per density).

# %%
import numpy as np

from dynrf import SimParams, SweepSpec, crossover_density, sweep_density

TRIALS = 300
lambdas = tuple(float(x) for x in np.logspace(-5, -2, 7))
rows = sweep_density(SweepSpec("density", lambdas, TRIALS, params=SimParams(M=4, B=2), master_seed=1))

for lam in lambdas:
    line = "  ".join(f"{r.scheme}={r.mean_E_net * 1e9:8.2f}" for r in rows if r.value == lam)
    print(f"lambda={lam:.1e}  E_net [nJ]: {line}")
print("RC/ST crossover near lambda =", crossover_density(rows))

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.5), sharex=True)
    for scheme in sorted({r.scheme for r in rows}):
        sel = [r for r in rows if r.scheme == scheme]
        axes[0].loglog([r.value for r in sel], [r.mean_E_abs for r in sel], marker="o", label=scheme)
        axes[1].semilogx([r.value for r in sel], [r.mean_E_net for r in sel], marker="o", label=scheme)
    axes[0].set(xlabel="density [1/m^2]", ylabel="E_abs [J]")
    axes[1].set(xlabel="density [1/m^2]", ylabel="E_net [J]")
    axes[1].legend(fontsize=7)
    fig.savefig("density_sweep.png", dpi=120, bbox_inches="tight")
