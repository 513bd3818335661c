"""
General polarization matrix built from the field-strength tensor.

The 4x4 tensor F packs E and B; the bilinear form R = F^H F has the block
layout

    R = [[ W_E ,  -(E* x B) ],
         [  .  ,      P     ]]

with W_E = |E|^2 and P = P_E + P_B the 3x3 general polarization matrix.
P_E is the outer product E*_mu E_nu and P_B = |B|^2 I - B B^H.
"""

from dataclasses import dataclass
import math

import numpy as np

from .exceptions import ContractViolation, UndefinedPhaseError
from .fieldsrc import FieldSample, SpatialPoint, local_frame
from .specfun import ComplexVec3

__all__ = [
    "RBlocks",
    "PhaseDifferences",
    "Reduction",
    "field_strength_tensor",
    "bilinear_form",
    "extract_blocks",
    "gpm_electric",
    "gpm_magnetic",
    "gpm_total",
    "phase_differences",
    "reduce_to_conventional",
    "invariants_report",
    "is_hermitian",
    "is_psd",
]

HERMITIAN_TOL = 1e-12
_AXES = ("x", "y", "z")


def _cartesian(v):
    if isinstance(v, ComplexVec3):
        if v.basis != "cartesian":
            raise ContractViolation("expected Cartesian components")
        return v.components
    return np.asarray(v, dtype=complex).reshape(3)


@dataclass(frozen=True)
class RBlocks:
    w_e: complex
    s_vec: np.ndarray
    p_matrix: np.ndarray


@dataclass(frozen=True)
class PhaseDifferences:
    d_xy: float
    d_yz: float
    d_zx: float

    def as_tuple(self):
        return (self.d_xy, self.d_yz, self.d_zx)


@dataclass(frozen=True)
class Reduction:
    p2: np.ndarray
    residual: float


def field_strength_tensor(sample):
    """4x4 antisymmetric tensor with row 0 = (0, E_x, E_y, E_z)."""
    ex, ey, ez = sample.e_field
    bx, by, bz = sample.b_field
    return np.array(
        [
            [0, ex, ey, ez],
            [-ex, 0, -bz, by],
            [-ey, bz, 0, -bx],
            [-ez, -by, bx, 0],
        ],
        dtype=complex,
    )


def bilinear_form(f):
    """R = F^H F."""
    f = np.asarray(f, dtype=complex)
    return f.conj().T @ f


def extract_blocks(r4):
    """Split R into W_E, the Poynting-type vector and the 3x3 block P.

    The raw upper-right block of F^H F equals -(E* x B); the returned
    ``s_vec`` is E* x B.
    """
    r4 = np.asarray(r4, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(r4))))
    if np.max(np.abs(r4 - r4.conj().T)) > HERMITIAN_TOL * scale:
        raise ContractViolation("bilinear form is not Hermitian")
    return RBlocks(complex(r4[0, 0]), -r4[0, 1:].copy(), r4[1:, 1:].copy())


def gpm_electric(e):
    """P_E with entries E*_mu E_nu."""
    e = _cartesian(e)
    return np.outer(e.conj(), e)


def gpm_magnetic(b):
    """P_B with diagonal |B|^2 - |B_mu|^2 and off-diagonal (mu, nu) entry -B*_nu B_mu."""
    b = _cartesian(b)
    return np.vdot(b, b).real * np.eye(3) - np.outer(b, b.conj())


def gpm_total(sample):
    """General polarization matrix P = P_E + P_B."""
    return gpm_electric(sample.e_field) + gpm_magnetic(sample.b_field)


def is_hermitian(mat, tol=HERMITIAN_TOL):
    mat = np.asarray(mat)
    scale = max(1.0, float(np.max(np.abs(mat))))
    return bool(np.max(np.abs(mat - mat.conj().T)) <= tol * scale)


def is_psd(mat, tol=HERMITIAN_TOL):
    mat = np.asarray(mat)
    evals = np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))
    return bool(evals.min() >= -tol * max(1.0, abs(np.trace(mat).real)))


def _wrap(angle):
    # into (-pi, pi]
    return math.pi - (math.pi - angle) % (2.0 * math.pi)


def phase_differences(e):
    """Phase differences arg E_nu - arg E_mu for (x,y), (y,z), (z,x), wrapped into (-pi, pi]."""
    e = _cartesian(e)
    norm = np.linalg.norm(e)
    for name, comp in zip(_AXES, e):
        if norm == 0.0 or abs(comp) <= 1e-12 * norm:
            raise UndefinedPhaseError(name)
    ax, ay, az = (math.atan2(c.imag, c.real) for c in e)
    return PhaseDifferences(_wrap(ay - ax), _wrap(az - ay), _wrap(ax - az))


def _frame_rotation(axis, point):
    if axis == "radial":
        if point is None:
            raise ContractViolation("axis='radial' needs the observation point")
        if not isinstance(point, SpatialPoint):
            point = SpatialPoint.from_cartesian(point)
        return local_frame(point)
    if axis not in _AXES:
        raise ContractViolation(f"axis must be one of x, y, z, radial; got {axis!r}")
    # cyclic ordering keeps the frame right-handed with the propagation axis last
    order = {"x": (1, 2, 0), "y": (2, 0, 1), "z": (0, 1, 2)}[axis]
    return np.eye(3)[list(order)]


def reduce_to_conventional(sample, axis="z", point=None):
    """Reduce the GPM to the conventional 2x2 polarization matrix.

    Fields are expressed in a frame whose third axis is the propagation
    direction (``'x'``, ``'y'``, ``'z'``, or ``'radial'`` for the local
    spherical frame (e_theta, e_phi, r_hat) at ``point``). Returns the
    transverse block of P_E and the largest entry that has to vanish for a
    plane wave: the third row/column of P_E and the off-block entries of P_B.
    """
    rot = _frame_rotation(axis, point)
    e = rot @ sample.e_field
    b = rot @ sample.b_field
    pe = gpm_electric(e)
    pb = gpm_magnetic(b)
    residual = max(
        np.max(np.abs(pe[2, :])),
        np.max(np.abs(pe[:, 2])),
        np.max(np.abs(pb[:2, 2])),
        np.max(np.abs(pb[2, :2])),
    )
    return Reduction(pe[:2, :2].copy(), float(residual))


def invariants_report(sample):
    """E.B and |E|^2 - |B|^2, both divided by |E|^2 + |B|^2.

    E.B is the plain (unconjugated) bilinear product.
    """
    e, b = sample.e_field, sample.b_field
    e2 = float(np.vdot(e, e).real)
    b2 = float(np.vdot(b, b).real)
    total = e2 + b2
    if total == 0.0:
        return {"e_dot_b": 0j, "e2_minus_b2": 0.0}
    return {"e_dot_b": complex(e @ b) / total, "e2_minus_b2": (e2 - b2) / total}
