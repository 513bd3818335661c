"""
Special functions used to build multipole mode functions.

Spherical Bessel functions of the first kind, orthonormal spherical
harmonics (Condon-Shortley phase), Clebsch-Gordan coefficients for coupling
an orbital momentum ``l`` with spin 1, and the unitary map between the
helicity (spherical) basis and Cartesian components.

Helicity-basis vectors are stored as length-3 arrays ordered
``mu = +1, 0, -1``.
"""

from dataclasses import dataclass
import math

import numpy as np

from .exceptions import ContractViolation, DomainError

__all__ = [
    "HELICITY_VALUES",
    "AngularPoint",
    "ComplexVec3",
    "spherical_bessel_batch",
    "spherical_harmonic",
    "spherical_harmonics_table",
    "clebsch_gordan_spin1",
    "helicity_to_cartesian",
    "cartesian_to_helicity",
]

HELICITY_VALUES = (1, 0, -1)
L_MAX_LIMIT = 200

_SQRT_HALF = math.sqrt(0.5)
# columns are the helicity unit vectors chi_{+1}, chi_0, chi_{-1}
_HELICITY_TO_CART = np.array(
    [
        [-_SQRT_HALF, 0.0, _SQRT_HALF],
        [-1j * _SQRT_HALF, 0.0, -1j * _SQRT_HALF],
        [0.0, 1.0, 0.0],
    ],
    dtype=complex,
)
_CART_TO_HELICITY = _HELICITY_TO_CART.conj().T


@dataclass(frozen=True)
class AngularPoint:
    """Direction on the unit sphere; ``phi`` is wrapped into [0, 2pi)."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise DomainError("angles must be finite")
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta={self.theta} outside [0, pi]")
        object.__setattr__(self, "phi", float(self.phi) % (2.0 * math.pi))


@dataclass(frozen=True)
class ComplexVec3:
    """Three complex components with a basis tag ('cartesian' or 'helicity')."""

    components: np.ndarray
    basis: str = "cartesian"

    def __post_init__(self):
        comps = np.asarray(self.components, dtype=complex).reshape(3)
        if not np.all(np.isfinite(comps)):
            raise DomainError("vector components must be finite")
        if self.basis not in ("cartesian", "helicity"):
            raise ContractViolation(f"unknown basis tag {self.basis!r}")
        object.__setattr__(self, "components", comps)

    def __array__(self, dtype=None, copy=None):
        return self.components if dtype is None else self.components.astype(dtype)

    def norm(self):
        return float(np.linalg.norm(self.components))


# ---------------------------------------------------------------------------
# spherical Bessel functions


def _bessel_series(l_max, x):
    # j_l(x) = x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! prod_{i=1..k} (2l+2i+1))
    out = np.zeros(l_max + 1)
    half_x2 = 0.5 * x * x
    prefactor = 1.0
    for l in range(l_max + 1):
        if l > 0:
            prefactor *= x / (2 * l + 1)
        if prefactor == 0.0:
            break
        term = 1.0
        total = 1.0
        k = 0
        while abs(term) > 1e-17 * abs(total):
            k += 1
            term *= -half_x2 / (k * (2 * l + 2 * k + 1))
            total += term
        out[l] = prefactor * total
    return out


def spherical_bessel_batch(l_max, x):
    """Spherical Bessel functions j_0(x) ... j_{l_max}(x).

    Small arguments (x < 0.5) use the power series. Otherwise orders below
    ``x`` come from upward recurrence seeded with the closed forms of j_0
    and j_1 (stable in the oscillatory region), and orders above ``x`` from
    the ratios j_l/j_{l-1} obtained by Miller-type downward recurrence,
    which keeps full relative accuracy deep into the decaying tail.

    Parameters
    ----------
    l_max : int
        Highest order, 0 <= l_max <= 200.
    x : float
        Argument, finite and non-negative.

    Returns
    -------
    numpy.ndarray
        Array of length ``l_max + 1``.
    """
    if isinstance(l_max, bool) or int(l_max) != l_max or not 0 <= l_max <= L_MAX_LIMIT:
        raise DomainError(f"l_max={l_max!r} outside 0..{L_MAX_LIMIT}")
    l_max = int(l_max)
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"x={x!r} must be finite and >= 0")

    if x == 0.0:
        out = np.zeros(l_max + 1)
        out[0] = 1.0
        return out
    if x < 0.5:
        return _bessel_series(l_max, x)

    out = np.empty(l_max + 1)
    s, c = math.sin(x), math.cos(x)
    out[0] = s / x
    if l_max == 0:
        return out
    out[1] = s / (x * x) - c / x

    # upward recurrence up to the turning point l ~ x
    l_anchor = min(l_max, max(1, int(x)))
    for l in range(1, l_anchor):
        out[l + 1] = (2 * l + 1) / x * out[l] - out[l - 1]
    if l_anchor == l_max:
        return out

    # rho_l = j_l / j_{l-1} from the downward recurrence, started well above
    # both l_max and x so the minimal solution dominates
    n_start = max(l_max, int(x)) + 40 + int(math.sqrt(x))
    rho = 0.0
    ratios = np.empty(l_max + 2)
    for l in range(n_start, l_anchor, -1):
        rho = x / (2 * l + 1 - x * rho)
        if l <= l_max:
            ratios[l] = rho
    for l in range(l_anchor + 1, l_max + 1):
        out[l] = out[l - 1] * ratios[l]
    return out


# ---------------------------------------------------------------------------
# spherical harmonics


def _check_lm(l, m):
    if l < 0 or abs(m) > l:
        raise DomainError(f"invalid (l, m) = ({l}, {m}); need l >= 0 and |m| <= l")


def spherical_harmonics_table(l_max, theta, phi):
    """All Y_lm(theta, phi) with l <= l_max.

    Returns a complex array ``Y`` of shape ``(l_max + 1, 2 * l_max + 1)``
    with ``Y[l, l_max + m]`` holding Y_lm; entries with ``|m| > l`` are zero.
    Uses the fully normalised associated Legendre recurrence, so it stays
    accurate for large l. At the poles sin(theta) = 0 makes every m != 0
    entry vanish exactly.
    """
    if l_max < 0:
        raise DomainError("l_max must be >= 0")
    ct = math.cos(theta)
    st = math.sin(theta)
    if theta == 0.0 or theta == math.pi:
        st = 0.0
    # pbar[l, m] for m >= 0, normalised so that Y_lm = pbar * e^{i m phi}
    pbar = np.zeros((l_max + 1, l_max + 1))
    pbar[0, 0] = 1.0 / math.sqrt(4.0 * math.pi)
    for m in range(1, l_max + 1):
        pbar[m, m] = -math.sqrt((2 * m + 1) / (2.0 * m)) * st * pbar[m - 1, m - 1]
    for m in range(0, l_max):
        pbar[m + 1, m] = math.sqrt(2 * m + 3) * ct * pbar[m, m]
        for l in range(m + 2, l_max + 1):
            a = math.sqrt((4.0 * l * l - 1.0) / (l * l - m * m))
            b = math.sqrt(((l - 1) ** 2 - m * m) / (4.0 * (l - 1) ** 2 - 1.0))
            pbar[l, m] = a * (ct * pbar[l - 1, m] - b * pbar[l - 2, m])

    table = np.zeros((l_max + 1, 2 * l_max + 1), dtype=complex)
    for m in range(0, l_max + 1):
        phase = complex(math.cos(m * phi), math.sin(m * phi))
        sign = -1.0 if m % 2 else 1.0
        for l in range(m, l_max + 1):
            y = pbar[l, m] * phase
            table[l, l_max + m] = y
            if m:
                table[l, l_max - m] = sign * y.conjugate()
    return table


def spherical_harmonic(l, m, theta, phi):
    """Orthonormal spherical harmonic Y_lm(theta, phi), Condon-Shortley phase."""
    _check_lm(l, m)
    return complex(spherical_harmonics_table(l, theta, phi)[l, l + m])


# ---------------------------------------------------------------------------
# Clebsch-Gordan coefficients <l, m - mu; 1, mu | j, m>


def clebsch_gordan_spin1(l, m_l, mu, j, m):
    """Clebsch-Gordan coefficient <l m_l; 1 mu | j m>.

    Closed-form rows for j = l + 1, l, l - 1. Inputs outside the coupling
    range (m != m_l + mu, |m_l| > l, |m| > j, triangle violated) give 0.
    """
    if mu not in HELICITY_VALUES:
        raise DomainError(f"mu={mu!r} must be one of {HELICITY_VALUES}")
    if l < 0 or j < 0 or m != m_l + mu or abs(m_l) > l or abs(m) > j:
        return 0.0
    if j == l + 1:
        den = (2 * l + 1) * (2 * l + 2)
        if mu == 1:
            num = (l + m) * (l + m + 1)
        elif mu == 0:
            num = 2 * (l - m + 1) * (l + m + 1)
        else:
            num = (l - m) * (l - m + 1)
        return math.sqrt(num / den)
    if j == l and l > 0:
        den = 2 * l * (l + 1)
        if mu == 1:
            return -math.sqrt((l + m) * (l - m + 1) / den)
        if mu == 0:
            return m / math.sqrt(l * (l + 1))
        return math.sqrt((l - m) * (l + m + 1) / den)
    if j == l - 1:
        den = 2 * l * (2 * l + 1)
        if mu == 1:
            return math.sqrt((l - m) * (l - m + 1) / den)
        if mu == 0:
            return -math.sqrt(2 * (l - m) * (l + m) / den)
        return math.sqrt((l + m + 1) * (l + m) / den)
    return 0.0


# ---------------------------------------------------------------------------
# basis transforms


def helicity_to_cartesian(v):
    """Map a helicity-basis ComplexVec3 to Cartesian components.

    v_cart = sum_mu v_mu chi_mu with chi_{+1} = -(e_x + i e_y)/sqrt2,
    chi_0 = e_z, chi_{-1} = (e_x - i e_y)/sqrt2.
    """
    if not isinstance(v, ComplexVec3) or v.basis != "helicity":
        raise ContractViolation("helicity_to_cartesian expects a ComplexVec3 tagged 'helicity'")
    return ComplexVec3(_HELICITY_TO_CART @ v.components, "cartesian")


def cartesian_to_helicity(v):
    """Inverse of :func:`helicity_to_cartesian`."""
    if not isinstance(v, ComplexVec3) or v.basis != "cartesian":
        raise ContractViolation("cartesian_to_helicity expects a ComplexVec3 tagged 'cartesian'")
    return ComplexVec3(_CART_TO_HELICITY @ v.components, "helicity")
