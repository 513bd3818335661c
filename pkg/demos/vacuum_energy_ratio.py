# %% [markdown]
# # Counting zero-point energy in spherical modes
#
# A plane-wave mode has two polarizations; a multipole of order j has 2j+1
# projections. Restricting the vacuum energy to a chosen set of multipoles
# and comparing with the two plane-wave polarizations of the same frequency
# gives an exact rational ratio.

# %%
from gpmzpo import ModeFilter, zpo_energy_ratio

for text in ("E1", "M1", "E1,M1", "E2", "E1,E2,E3"):
    ratio = zpo_energy_ratio(ModeFilter.parse(text))
    print(f"{text:10s} {ratio!s:>6} = {float(ratio)}")

# %% [markdown]
# A single electric dipole already holds half again the vacuum energy of a
# plane wave: three projections against two polarizations.
