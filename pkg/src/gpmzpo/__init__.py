"""General polarization matrix and zero-point oscillations of multipole radiation."""

from .exceptions import ContractViolation, DomainError, UndefinedPhaseError
from .specfun import (
    AngularPoint,
    ComplexVec3,
    cartesian_to_helicity,
    clebsch_gordan_spin1,
    helicity_to_cartesian,
    spherical_bessel_batch,
    spherical_harmonic,
    spherical_harmonics_table,
)
from .fieldsrc import (
    FieldSample,
    MultipoleMode,
    SpatialPoint,
    local_frame,
    multipole_fields,
    multipole_potential,
    numerical_curl,
    plane_wave_fields,
)
from .gpmcore import (
    bilinear_form,
    extract_blocks,
    field_strength_tensor,
    gpm_electric,
    gpm_magnetic,
    gpm_total,
    invariants_report,
    phase_differences,
    reduce_to_conventional,
)
from .zpo import (
    ModeFilter,
    completeness_total,
    plane_wave_homogeneity,
    radial_profile,
    zpo_block_matrix,
    zpo_density_bruteforce,
    zpo_density_dimensionless,
    zpo_energy_ratio,
    zpo_polarization_matrix,
)

__version__ = "0.1.0"
