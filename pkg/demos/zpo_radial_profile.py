# %% [markdown]
# # Vacuum fluctuation density around a dipole emitter
#
# Summing |mode function|^2 over the 2j+1 projections removes every angular
# dependence. What remains is a radial profile, normalized here so that the
# sum over all types and orders equals 2 everywhere.

# %%
import numpy as np

from gpmzpo import completeness_total, radial_profile

grid = np.linspace(0.01, 20.0, 500)
electric = radial_profile("E", 1, grid)
magnetic = radial_profile("M", 1, grid)

print(f"Z_E1 at x=0.01: {electric.z_values[0]:.6f}")
print(f"Z_E1 first drops below a quarter of its peak at x = {electric.x_star:.4f}")
print(f"largest Z_E1 beyond x=15: {electric.z_values[grid >= 15].max():.4f}")
print(f"Z_M1 at x=0.01: {magnetic.z_values[0]:.2e}")

# %%
# coarse text plot of the electric-dipole profile
for x in (0.01, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0):
    z = float(np.interp(x, grid, electric.z_values))
    print(f"{x:5.2f} {z:7.4f} " + "#" * int(round(30 * z)))

# %%
# all modes together fill space uniformly
for x in (0.5, 3.0, 8.0):
    print(x, completeness_total(x, 40).total)

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.plot(grid, electric.z_values, label="E1")
    ax.plot(grid, magnetic.z_values, label="M1")
    ax.axhline(2 / 3, ls="--", lw=0.8, color="gray", label="baseline 2/3")
    ax.set_xlabel("kr")
    ax.set_ylabel("Z")
    ax.legend()
    fig.tight_layout()
    fig.savefig("zpo_radial_profile.png", dpi=120)
