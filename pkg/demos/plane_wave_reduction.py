# %% [markdown]
# # A plane wave collapses to the familiar 2x2 polarization matrix
#
# For a transverse plane wave the full 3x3 matrix carries nothing new:
# the electric part is the usual coherence matrix padded with zeros, and the
# magnetic part adds only the energy density on the propagation axis.

# %%
import numpy as np

from gpmzpo import gpm_electric, gpm_magnetic, phase_differences, plane_wave_fields, reduce_to_conventional

np.set_printoptions(precision=4, suppress=True)

# %%
# elliptical polarization travelling along z
pol = np.array([np.cos(0.4), 1j * np.sin(0.4), 0.0])
wave = plane_wave_fields(1.0, [0.0, 0.0, 2.0], pol, [0.3, -0.1, 1.2])

print("P_E =\n", gpm_electric(wave.e_field))
print("P_B =\n", gpm_magnetic(wave.b_field))

# %%
red = reduce_to_conventional(wave, axis="z")
print("conventional 2x2 =\n", red.p2)
print("largest entry outside the expected blocks:", red.residual)

# %%
# the z component vanishes, so only the x-y phase difference is defined
try:
    phase_differences(wave.e_field)
except ValueError as exc:
    print("phase differences:", exc)

# %%
# the same wave along x; the reduction permutes axes cyclically
wave_x = plane_wave_fields(1.0, [2.0, 0.0, 0.0], np.roll(pol, 1), [0.0, 0.0, 0.0])
print("residual along x:", reduce_to_conventional(wave_x, axis="x").residual)
