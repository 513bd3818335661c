"""
Zero-point oscillations (ZPO) of multipole and plane-wave fields.

The anti-normal minus normal ordered bilinears reduce, with unit mode
commutators, to c-number sums of classical mode bilinears. Spatial profiles
are reported through the dimensionless density

    Z_{lambda,j}(x) = 4 pi sum_{m, mu} |V_{lambda k j m mu}|^2,   x = kr,

so the physical density k^2/(8 pi) [A, A^+] is k^2/(8 pi) * Z / (4 pi).
Energies are counted in units of hbar*omega per mode.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math
import re

import numpy as np

from . import fieldsrc, gpmcore
from .exceptions import DomainError
from .specfun import ComplexVec3, helicity_to_cartesian, spherical_bessel_batch

__all__ = [
    "ModeFilter",
    "ZpoBlocks",
    "RadialProfile",
    "Completeness",
    "zpo_block_matrix",
    "zpo_polarization_matrix",
    "zpo_density_dimensionless",
    "zpo_density_bruteforce",
    "zpo_energy_ratio",
    "completeness_total",
    "radial_profile",
    "plane_wave_homogeneity",
]

_TOKEN = re.compile(r"^([EM])([1-9][0-9]*)$")


@dataclass(frozen=True)
class ModeFilter:
    """Set of (type, j) multipole families passed by a frequency filter at wavenumber k."""

    modes: tuple
    k: float = 1.0

    def __post_init__(self):
        modes = tuple((str(lam), int(j)) for lam, j in self.modes)
        if not modes:
            raise DomainError("mode filter must not be empty")
        for lam, j in modes:
            if lam not in ("E", "M") or j < 1:
                raise DomainError(f"invalid mode family ({lam!r}, {j})")
        if not (math.isfinite(self.k) and self.k > 0):
            raise DomainError("k must be positive")
        object.__setattr__(self, "modes", modes)

    @classmethod
    def parse(cls, text, k=1.0):
        """Build a filter from tokens such as ``"E1,M1,E2"``."""
        tokens = [t.strip() for t in text.split(",")] if text.strip() else []
        if not tokens:
            raise DomainError("empty mode list")
        modes = []
        for tok in tokens:
            match = _TOKEN.match(tok)
            if match is None:
                raise DomainError(f"malformed mode token {tok!r}")
            modes.append((match.group(1), int(match.group(2))))
        return cls(tuple(modes), k)


@dataclass(frozen=True)
class ZpoBlocks:
    """c-number blocks of the ordering difference.

    ``p0_electric`` is the P_E share of ``p0`` (the part k^2 [A, A^+]).
    """

    scalar: float
    vector: np.ndarray
    p0: np.ndarray
    p0_electric: np.ndarray


@dataclass(frozen=True)
class RadialProfile:
    kind: str
    j: int
    x_values: np.ndarray
    z_values: np.ndarray
    x_star: float | None = None


@dataclass(frozen=True)
class Completeness:
    total: float
    warning: str | None = field(default=None)


def zpo_block_matrix(mode_filter, point):
    """Sum the classical R-blocks of every mode (lambda, k, j, m) in the filter.

    scalar = sum |e|^2, vector = sum e* x b, p0 = sum (P_E(e) + P_B(b)).
    """
    scalar = 0.0
    vector = np.zeros(3, dtype=complex)
    p0 = np.zeros((3, 3), dtype=complex)
    p0_e = np.zeros((3, 3), dtype=complex)
    for kind, j in mode_filter.modes:
        for m in range(-j, j + 1):
            s = fieldsrc.multipole_fields(fieldsrc.MultipoleMode(kind, mode_filter.k, j, m), point)
            pe = gpmcore.gpm_electric(s.e_field)
            scalar += float(np.vdot(s.e_field, s.e_field).real)
            vector += np.cross(s.e_field.conj(), s.b_field)
            p0_e += pe
            p0 += pe + gpmcore.gpm_magnetic(s.b_field)
    return ZpoBlocks(scalar, vector, p0, p0_e)


def zpo_polarization_matrix(kind, j, k, point, basis="helicity"):
    """ZPO polarization matrix k^2 sum_m V_mu conj(V_mu').

    ``basis`` selects the components: ``'helicity'`` (mu = +1, 0, -1),
    ``'cartesian'`` or ``'local'`` (e_theta, e_phi, r_hat). The orientation
    is the transpose of the E*_mu E_nu layout used for P_E.
    """
    if point.r == 0.0 and j != 1:
        raise DomainError("r = 0 is only admitted for dipole modes")
    x = k * point.r
    vecs = [fieldsrc.mode_vector(kind, j, m, x, point.theta, point.phi) for m in range(-j, j + 1)]
    if basis != "helicity":
        vecs = [helicity_to_cartesian(ComplexVec3(v, "helicity")).components for v in vecs]
        if basis == "local":
            rot = fieldsrc.local_frame(point)
            vecs = [rot @ v for v in vecs]
        elif basis != "cartesian":
            raise DomainError(f"unknown basis {basis!r}")
    mat = np.zeros((3, 3), dtype=complex)
    for v in vecs:
        mat += np.outer(v, v.conj())
    return k * k * mat


def zpo_density_dimensionless(kind, j, x):
    """Z_{lambda,j}(x) from the closed form.

    Electric type: (j+1) j_{j-1}^2 + j j_{j+1}^2; magnetic type: (2j+1) j_j^2.
    """
    if j < 1:
        raise DomainError("j must be >= 1")
    b = spherical_bessel_batch(j + 1, x)
    if kind == "E":
        return (j + 1) * b[j - 1] ** 2 + j * b[j + 1] ** 2
    if kind == "M":
        return (2 * j + 1) * b[j] ** 2
    raise DomainError(f"multipole type must be 'E' or 'M', got {kind!r}")


def zpo_density_bruteforce(kind, j, x, theta, phi):
    """4 pi sum_m sum_mu |V|^2 evaluated mode by mode at the given direction."""
    total = 0.0
    for m in range(-j, j + 1):
        v = fieldsrc.mode_vector(kind, j, m, x, theta, phi)
        total += float(np.vdot(v, v).real)
    return 4.0 * math.pi * total


def zpo_energy_ratio(mode_filter):
    """Exact vacuum-energy ratio of the filtered spherical modes to plane waves.

    Each multipole family (lambda, j) has 2j+1 modes of hbar*omega/2; the
    plane-wave reference has two polarizations of hbar*omega/2 per k.
    """
    if not mode_filter.modes:
        raise DomainError("mode filter must not be empty")
    spherical = sum(Fraction(2 * j + 1, 2) for _, j in mode_filter.modes)
    plane = 2 * Fraction(1, 2)
    return spherical / plane


def completeness_total(x, j_max):
    """Sum of Z_{lambda,j}(x) over both types and 1 <= j <= j_max; tends to 2."""
    if x < 0:
        raise DomainError("x must be >= 0")
    if j_max < 1:
        raise DomainError("j_max must be >= 1")
    b = spherical_bessel_batch(j_max + 1, x)
    total = 0.0
    for j in range(1, j_max + 1):
        total += (j + 1) * b[j - 1] ** 2 + j * b[j + 1] ** 2 + (2 * j + 1) * b[j] ** 2
    warning = None
    if j_max < x + 30:
        warning = f"j_max={j_max} < x + 30; truncated tail may exceed 1e-10"
    return Completeness(float(total), warning)


def radial_profile(kind, j, x_grid):
    """Sample Z over ``x_grid`` and locate x*, where Z first drops below Z(0)/4.

    x* is interpolated linearly between the bracketing samples; it is None
    when Z(0) = 0 or no crossing occurs on the grid.
    """
    x_grid = np.asarray(x_grid, dtype=float)
    if x_grid.size == 0:
        raise DomainError("empty grid")
    if np.any(x_grid <= 0) or np.any(np.diff(x_grid) <= 0):
        raise DomainError("grid must be positive and strictly increasing")
    z = np.array([zpo_density_dimensionless(kind, j, x) for x in x_grid])
    threshold = zpo_density_dimensionless(kind, j, 0.0) / 4.0
    x_star = None
    if threshold > 0:
        below = np.nonzero(z < threshold)[0]
        if below.size:
            i = int(below[0])
            if i == 0:
                x_star = float(x_grid[0])
            else:
                x0, x1, z0, z1 = x_grid[i - 1], x_grid[i], z[i - 1], z[i]
                x_star = float(x0 + (z0 - threshold) * (x1 - x0) / (z0 - z1))
    return RadialProfile(kind, j, x_grid, z, x_star)


def plane_wave_homogeneity(k_vec, points):
    """Largest deviation of |exp(i k.r)|^2 from 1 over the given Cartesian points."""
    points = np.asarray(points, dtype=float).reshape(-1, 3)
    if len(points) < 2:
        raise DomainError("need at least two points")
    phase = np.exp(1j * (points @ np.asarray(k_vec, dtype=float)))
    return float(np.max(np.abs(np.abs(phase) ** 2 - 1.0)))

