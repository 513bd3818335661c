"""
Positive-frequency field strengths for plane waves and multipole modes.

Units: hbar = c = 1, unit mode amplitude. Multipole vector potentials are
built from vector spherical harmonics,

    magnetic type:  A = j_j(kr) Y_{j,j,m}
    electric type:  A = sqrt((j+1)/(2j+1)) j_{j-1}(kr) Y_{j,j-1,m}
                        - sqrt(j/(2j+1)) j_{j+1}(kr) Y_{j,j+1,m}

with Y_{j,l,m} = sum_mu <l, m-mu; 1, mu | j m> Y_{l,m-mu} chi_mu. The
electric field is E = -ik A and the magnetic induction B = curl A is taken
numerically.
"""

from dataclasses import dataclass
import math

import numpy as np

from .exceptions import DomainError
from .specfun import (
    HELICITY_VALUES,
    AngularPoint,
    ComplexVec3,
    clebsch_gordan_spin1,
    helicity_to_cartesian,
    spherical_bessel_batch,
    spherical_harmonics_table,
)

__all__ = [
    "SpatialPoint",
    "FieldSample",
    "MultipoleMode",
    "plane_wave_fields",
    "mode_vector",
    "multipole_potential",
    "multipole_vector_potential",
    "multipole_fields",
    "numerical_curl",
    "local_frame",
]

CURL_STEP = 1e-4


@dataclass(frozen=True)
class SpatialPoint:
    """Observation point in spherical coordinates (r, theta, phi)."""

    r: float
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.r) or self.r < 0:
            raise DomainError(f"r={self.r!r} must be finite and >= 0")
        angles = AngularPoint(self.theta, self.phi)
        object.__setattr__(self, "phi", angles.phi)

    @property
    def angles(self):
        return AngularPoint(self.theta, self.phi)

    @classmethod
    def from_cartesian(cls, xyz):
        x, y, z = (float(c) for c in xyz)
        r = math.sqrt(x * x + y * y + z * z)
        if r == 0.0:
            return cls(0.0, 0.0, 0.0)
        theta = math.atan2(math.hypot(x, y), z)
        phi = math.atan2(y, x)
        return cls(r, theta, phi)

    def to_cartesian(self):
        st = math.sin(self.theta)
        return np.array(
            [
                self.r * st * math.cos(self.phi),
                self.r * st * math.sin(self.phi),
                self.r * math.cos(self.theta),
            ]
        )

    def unit_radial(self):
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


@dataclass(frozen=True)
class FieldSample:
    """Positive-frequency E and B (Cartesian components) at one point."""

    e_field: np.ndarray
    b_field: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.e_field, dtype=complex).reshape(3)
        b = np.asarray(self.b_field, dtype=complex).reshape(3)
        if not (np.all(np.isfinite(e)) and np.all(np.isfinite(b))):
            raise DomainError("field components must be finite")
        object.__setattr__(self, "e_field", e)
        object.__setattr__(self, "b_field", b)


@dataclass(frozen=True)
class MultipoleMode:
    """Spherical photon mode: type ('E' or 'M'), wavenumber k, angular momentum j, projection m."""

    kind: str
    k: float
    j: int
    m: int

    def __post_init__(self):
        if self.kind not in ("E", "M"):
            raise DomainError(f"multipole type must be 'E' or 'M', got {self.kind!r}")
        if not (math.isfinite(self.k) and self.k > 0):
            raise DomainError(f"k={self.k!r} must be positive")
        if self.j < 1:
            raise DomainError(f"j={self.j} must be >= 1")
        if abs(self.m) > self.j:
            raise DomainError(f"|m|={abs(self.m)} exceeds j={self.j}")


def local_frame(point):
    """Rows are the unit vectors (e_theta, e_phi, r_hat) at ``point``; right-handed."""
    st, ct = math.sin(point.theta), math.cos(point.theta)
    sp, cp = math.sin(point.phi), math.cos(point.phi)
    return np.array(
        [
            [ct * cp, ct * sp, -st],
            [-sp, cp, 0.0],
            [st * cp, st * sp, ct],
        ]
    )


def plane_wave_fields(amplitude, k_vec, pol, point):
    """Plane wave E = amplitude * pol * exp(i k.r), B = k_hat x E.

    ``point`` is a SpatialPoint or a Cartesian 3-vector.
    """
    k_vec = np.asarray(k_vec, dtype=float).reshape(3)
    kn = np.linalg.norm(k_vec)
    if kn == 0.0:
        raise DomainError("k_vec must be nonzero")
    pol = np.asarray(pol, dtype=complex).reshape(3)
    if abs(np.linalg.norm(pol) - 1.0) > 1e-12:
        raise DomainError("polarization vector must have unit norm")
    k_hat = k_vec / kn
    if abs(pol @ k_hat) > 1e-12:
        raise DomainError("polarization vector is not transverse to k_vec")
    xyz = point.to_cartesian() if isinstance(point, SpatialPoint) else np.asarray(point, float)
    e = complex(amplitude) * pol * np.exp(1j * (k_vec @ xyz))
    return FieldSample(e, np.cross(k_hat, e))


def mode_vector(kind, j, m, x, theta, phi):
    """Helicity components (mu = +1, 0, -1) of the mode potential at kr = x."""
    bessel = spherical_bessel_batch(j + 1, x)
    ylm = spherical_harmonics_table(j + 1, theta, phi)
    l_max = j + 1

    def vsh(l):
        out = np.zeros(3, dtype=complex)
        for i, mu in enumerate(HELICITY_VALUES):
            ml = m - mu
            if abs(ml) <= l:
                out[i] = clebsch_gordan_spin1(l, ml, mu, j, m) * ylm[l, l_max + ml]
        return out

    if kind == "M":
        return bessel[j] * vsh(j)
    if kind == "E":
        return (
            math.sqrt((j + 1) / (2 * j + 1)) * bessel[j - 1] * vsh(j - 1)
            - math.sqrt(j / (2 * j + 1)) * bessel[j + 1] * vsh(j + 1)
        )
    raise DomainError(f"multipole type must be 'E' or 'M', got {kind!r}")


def multipole_potential(mode, mu, point):
    """Mode function V_{lambda k j m mu}: helicity component ``mu`` of the mode potential."""
    if mu not in HELICITY_VALUES:
        raise DomainError(f"mu={mu!r} must be one of {HELICITY_VALUES}")
    v = mode_vector(mode.kind, mode.j, mode.m, mode.k * point.r, point.theta, point.phi)
    return complex(v[HELICITY_VALUES.index(mu)])


def multipole_vector_potential(mode, xyz):
    """Cartesian components of the mode potential A at a Cartesian point."""
    p = SpatialPoint.from_cartesian(xyz)
    v = mode_vector(mode.kind, mode.j, mode.m, mode.k * p.r, p.theta, p.phi)
    return helicity_to_cartesian(ComplexVec3(v, "helicity")).components


def numerical_curl(field_fn, point, h):
    """Curl of a vector field by central differences plus one Richardson step.

    ``field_fn`` maps a Cartesian point (array of 3 floats) to 3 components.
    Truncation error is O(h^4).
    """
    if not h > 0:
        raise DomainError("step h must be positive")
    x0 = point.to_cartesian() if isinstance(point, SpatialPoint) else np.asarray(point, float)

    def jacobian(step):
        jac = np.empty((3, 3), dtype=complex)
        for a in range(3):
            dx = np.zeros(3)
            dx[a] = step
            fp = np.asarray(field_fn(x0 + dx), dtype=complex)
            fm = np.asarray(field_fn(x0 - dx), dtype=complex)
            jac[:, a] = (fp - fm) / (2.0 * step)
        return jac

    jac = (4.0 * jacobian(0.5 * h) - jacobian(h)) / 3.0
    if not np.all(np.isfinite(jac)):
        raise FloatingPointError("non-finite field samples in curl stencil")
    return np.array([jac[2, 1] - jac[1, 2], jac[0, 2] - jac[2, 0], jac[1, 0] - jac[0, 1]])


def multipole_fields(mode, point):
    """E = -ik A and B = curl A for one multipole mode.

    At the origin only dipoles (j = 1) are accepted; the curl stencil then
    straddles the origin symmetrically.
    """
    if point.r == 0.0 and mode.j != 1:
        raise DomainError("fields at r = 0 are only evaluated for dipole modes (j = 1)")
    xyz = point.to_cartesian()
    a = multipole_vector_potential(mode, xyz)
    b = numerical_curl(lambda p: multipole_vector_potential(mode, p), xyz, CURL_STEP / mode.k)
    return FieldSample(-1j * mode.k * a, b)
