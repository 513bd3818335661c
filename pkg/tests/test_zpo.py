from fractions import Fraction
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpmzpo.exceptions import DomainError
from gpmzpo.fieldsrc import SpatialPoint, mode_vector
from gpmzpo.gpmcore import is_hermitian, is_psd
from gpmzpo.oracles import bessel_closed_form
from gpmzpo.zpo import (
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


def mp_jn(l, x):
    x = mpmath.mpf(x)
    return float(mpmath.sqrt(mpmath.pi / (2 * x)) * mpmath.besselj(l + mpmath.mpf(1) / 2, x))


# --- mode filters and energy ratio ----------------------------------------------


def test_parse_modes():
    assert ModeFilter.parse("E1, M1,E12").modes == (("E", 1), ("M", 1), ("E", 12))


@pytest.mark.parametrize("text", ["", "E0", "X1", "E1,,M1", "e1", "E-1"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        ModeFilter.parse(text)


def test_empty_filter_rejected():
    with pytest.raises(DomainError):
        ModeFilter(())


@pytest.mark.parametrize(
    "modes,expected",
    [("E1", Fraction(3, 2)), ("E1,M1", Fraction(3)), ("E1,E2", Fraction(4))],
)
def test_energy_ratio(modes, expected):
    got = zpo_energy_ratio(ModeFilter.parse(modes))
    assert isinstance(got, Fraction)
    assert got == expected


# --- densities ----------------------------------------------------------------------


def test_density_examples():
    assert zpo_density_dimensionless("E", 1, 0.0) == 2.0
    assert zpo_density_dimensionless("M", 1, 0.0) == 0.0
    expected = 2 * bessel_closed_form(0, 2.0) ** 2 + bessel_closed_form(2, 2.0) ** 2
    assert zpo_density_dimensionless("E", 1, 2.0) == pytest.approx(expected, rel=1e-13)
    assert zpo_density_dimensionless("E", 1, 2.0) == pytest.approx(0.4527925, abs=5e-8)


def test_density_bad_type():
    with pytest.raises(DomainError):
        zpo_density_dimensionless("Q", 1, 1.0)
    with pytest.raises(DomainError):
        zpo_density_dimensionless("E", 0, 1.0)


def test_bruteforce_examples():
    a = zpo_density_bruteforce("E", 1, 0.7, 0.3, 1.1)
    b = zpo_density_bruteforce("E", 1, 0.7, 1.2, 4.5)
    assert abs(a - b) <= 1e-10
    ref = 4 * mp_jn(2, 4.0) ** 2 + 3 * mp_jn(4, 4.0) ** 2
    assert abs(zpo_density_bruteforce("E", 3, 4.0, 0.9, 0.2) - ref) <= 1e-10
    ref = 5 * mp_jn(2, 1.0) ** 2
    assert abs(zpo_density_bruteforce("M", 2, 1.0, 2.0, 3.0) - ref) <= 1e-10


@pytest.mark.parametrize("kind", "EM")
@pytest.mark.parametrize("j", range(1, 7))
def test_analytic_matches_bruteforce(kind, j):
    rng = np.random.default_rng(j)
    for x in (0.1, 0.7, 2.0, 5.0, 10.0):
        ref = zpo_density_dimensionless(kind, j, x)
        for _ in range(5):
            theta, phi = math.acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * math.pi)
            assert abs(zpo_density_bruteforce(kind, j, x, theta, phi) - ref) <= 1e-10


@settings(max_examples=30)
@given(st.sampled_from("EM"), st.integers(1, 5), st.floats(0.0, 30.0), st.floats(0, math.pi), st.floats(0, 6.28))
def test_density_is_phase_invariant(kind, j, x, theta, phi):
    # per-mode phase changes leave the mode sum untouched
    rng = np.random.default_rng(0)
    total = 0.0
    for m in range(-j, j + 1):
        v = mode_vector(kind, j, m, x, theta, phi) * np.exp(1j * rng.uniform(0, 2 * math.pi))
        total += np.vdot(v, v).real
    assert abs(4 * math.pi * total - zpo_density_dimensionless(kind, j, x)) <= 1e-10


# --- completeness / homogeneity ------------------------------------------------------


@pytest.mark.parametrize("x,j_max", [(1.0, 40), (8.0, 45), (0.5, 40), (3.0, 40)])
def test_completeness(x, j_max):
    res = completeness_total(x, j_max)
    assert abs(res.total - 2.0) <= 1e-10
    assert res.warning is None


def test_completeness_small_argument():
    assert completeness_total(0.0, 5).total == 2.0
    assert zpo_density_dimensionless("E", 1, 0.0) == 2.0
    for j in range(2, 6):
        assert zpo_density_dimensionless("E", j, 0.0) == 0.0
        assert zpo_density_dimensionless("M", j, 0.0) == 0.0


def test_completeness_tail_warning():
    res = completeness_total(20.0, 10)
    assert res.warning is not None
    assert res.total < 2.0


def test_plane_wave_homogeneity():
    rng = np.random.default_rng(11)
    pts = rng.normal(size=(100, 3)) * 10
    for scale in (0.1, 1.0, 50.0):
        assert plane_wave_homogeneity(scale * np.array([0.3, -1.0, 2.0]), pts) <= 1e-14
    assert plane_wave_homogeneity([0, 0, 1.0], [[0, 0, 0], [0, 0, 0]]) == 0.0
    with pytest.raises(DomainError):
        plane_wave_homogeneity([0, 0, 1.0], [[0, 0, 0]])


# --- radial profile ------------------------------------------------------------------


def test_fig1_profile_shape():
    prof = radial_profile("E", 1, np.linspace(0.01, 20, 500))
    assert prof.z_values[0] == pytest.approx(2.0, abs=1e-3)
    assert 1.9 < prof.x_star < 2.0
    # the crossing brackets match the closed forms
    assert zpo_density_dimensionless("E", 1, 1.9) > 0.5 > zpo_density_dimensionless("E", 1, 2.0)
    tail = prof.x_values >= 10
    assert np.max(prof.x_values[tail] ** 2 * prof.z_values[tail]) <= 4.0
    assert np.max(prof.z_values[prof.x_values >= 15]) < 0.05


def test_profile_concentrated_near_source():
    prof = radial_profile("E", 1, np.linspace(2.0, 30.0, 400))
    assert zpo_density_dimensionless("E", 1, 0.0) > prof.z_values.max()


def test_magnetic_profile_vanishes_at_origin():
    prof = radial_profile("M", 1, np.linspace(1e-4, 5, 50))
    assert prof.z_values[0] <= 1e-8
    assert prof.x_star is None


@pytest.mark.parametrize("grid", [[], [1.0, 1.0], [0.0, 1.0], [2.0, 1.0]])
def test_profile_bad_grid(grid):
    with pytest.raises(DomainError):
        radial_profile("E", 1, grid)


# --- ZPO matrices -----------------------------------------------------------------------


def test_p0_trace_at_origin():
    mat = zpo_polarization_matrix("E", 1, 1.5, SpatialPoint(0.0))
    assert np.trace(mat).real == pytest.approx(1.5**2 * 2 / (4 * math.pi), rel=1e-14)


def test_p0_magnetic_dipole_trace():
    k = 1.0
    mat = zpo_polarization_matrix("M", 1, k, SpatialPoint(2.0, 0.4, 1.0))
    assert abs(np.trace(mat).real - k**2 * 3 * mp_jn(1, 2.0) ** 2 / (4 * math.pi)) <= 1e-10


@settings(max_examples=25)
@given(st.sampled_from("EM"), st.integers(1, 4), st.floats(0.1, 10), st.floats(0, math.pi), st.floats(0, 6.28))
def test_p0_hermitian_psd_and_trace(kind, j, x, theta, phi):
    k = 0.8
    mat = zpo_polarization_matrix(kind, j, k, SpatialPoint(x / k, theta, phi))
    assert np.max(np.abs(mat - mat.conj().T)) <= 1e-14
    assert is_psd(mat)
    ref = k * k * zpo_density_dimensionless(kind, j, x) / (4 * math.pi)
    assert abs(np.trace(mat).real - ref) <= 1e-10 * max(ref, 1e-300) + 1e-300


def test_p0_local_frame_is_angle_independent():
    a = zpo_polarization_matrix("E", 2, 1.0, SpatialPoint(1.5, 0.3, 1.1), basis="local")
    b = zpo_polarization_matrix("E", 2, 1.0, SpatialPoint(1.5, 2.2, 4.0), basis="local")
    assert np.max(np.abs(a - b)) <= 1e-14
    assert np.max(np.abs(a - np.diag(np.diag(a)))) <= 1e-15
    assert a[0, 0] == pytest.approx(a[1, 1], rel=1e-13)


def test_p0_helicity_elements_depend_on_direction():
    a = zpo_polarization_matrix("E", 1, 1.0, SpatialPoint(2.0, 0.4, 0.2))
    b = zpo_polarization_matrix("E", 1, 1.0, SpatialPoint(2.0, 2.0, 5.0))
    assert abs(np.trace(a) - np.trace(b)) <= 1e-14
    assert np.max(np.abs(a - b)) > 1e-3


def test_p0_bad_basis():
    with pytest.raises(DomainError):
        zpo_polarization_matrix("E", 1, 1.0, SpatialPoint(1.0), basis="polar")
    with pytest.raises(DomainError):
        zpo_polarization_matrix("E", 2, 1.0, SpatialPoint(0.0))


def test_block_matrix_consistency():
    k = 1.0
    f = ModeFilter((("E", 1),), k)
    ref = k * k * zpo_density_dimensionless("E", 1, 2.0) / (4 * math.pi)
    traces = []
    for theta, phi in [(0.4, 0.2), (2.0, 5.0)]:
        blocks = zpo_block_matrix(f, SpatialPoint(2.0 / k, theta, phi))
        assert abs(blocks.scalar - ref) <= 1e-10
        assert abs(np.trace(blocks.p0_electric).real - ref) <= 1e-10
        assert is_hermitian(blocks.p0) and is_psd(blocks.p0)
        traces.append(np.trace(blocks.p0).real)
    assert abs(traces[0] - traces[1]) <= 1e-10


def test_block_matrix_magnetic_trace_matches_dual_density():
    # B of the electric modes is k times the magnetic-mode potential
    k = 1.3
    blocks = zpo_block_matrix(ModeFilter((("E", 2),), k), SpatialPoint(1.1, 0.8, 0.5))
    w_b = (np.trace(blocks.p0).real - blocks.scalar) / 2
    assert w_b == pytest.approx(k * k * zpo_density_dimensionless("M", 2, k * 1.1) / (4 * math.pi), rel=1e-8)


def test_block_matrix_origin_rules():
    zpo_block_matrix(ModeFilter((("E", 1),)), SpatialPoint(0.0))
    with pytest.raises(DomainError):
        zpo_block_matrix(ModeFilter((("E", 1), ("M", 2))), SpatialPoint(0.0))
