"""
Seeded invariant suite behind ``gpmzpo validate``.

Every check looks library functions up through their modules at call time,
so a patched implementation is exercised by the suite.
"""

import math

import numpy as np

from . import fieldsrc, gpmcore, oracles, specfun, zpo

SEED = 20240601
_CHECKS = []


def check(name):
    def register(fn):
        _CHECKS.append((name, fn))
        return fn

    return register


def _random_complex(rng, *shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def _random_point(rng, x_min, x_max, k=1.0):
    x = rng.uniform(x_min, x_max)
    return fieldsrc.SpatialPoint(x / k, math.acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * math.pi))


@check("bessel-reference")
def _bessel_reference(rng):
    err = 0.0
    for x in (0.2, 0.6, 1.0, 2.0, 7.3):
        b = specfun.spherical_bessel_batch(2, x)
        for l in range(3):
            ref = oracles.bessel_closed_form(l, x) if x >= 0.5 else oracles.bessel_power_series(l, x)
            err = max(err, abs(b[l] - ref) / abs(ref))
    return err <= 1e-12, f"max rel err {err:.3e}"


@check("bessel-recurrence")
def _bessel_recurrence(rng):
    worst = 0.0
    for x in np.linspace(0.1, 50.0, 60):
        b = specfun.spherical_bessel_batch(51, x)
        for l in range(1, 51):
            res = abs(b[l - 1] + b[l + 1] - (2 * l + 1) * b[l] / x)
            worst = max(worst, res / max(1.0, abs(b[l])))
    return worst <= 1e-10, f"max residual {worst:.3e}"


@check("bessel-completeness")
def _bessel_completeness(rng):
    worst = 0.0
    for x in np.linspace(0.05, 10.0, 25):
        lmax = int(math.ceil(x)) + 30
        b = specfun.spherical_bessel_batch(lmax, x)
        worst = max(worst, abs(np.sum((2 * np.arange(lmax + 1) + 1) * b**2) - 1.0))
    return worst <= 1e-10, f"max deviation {worst:.3e}"


@check("ylm-unsold")
def _ylm_unsold(rng):
    worst = 0.0
    for _ in range(20):
        theta, phi = math.acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * math.pi)
        table = specfun.spherical_harmonics_table(10, theta, phi)
        for l in range(11):
            s = np.sum(np.abs(table[l]) ** 2)
            worst = max(worst, abs(s - (2 * l + 1) / (4 * math.pi)))
    return worst <= 1e-12, f"max deviation {worst:.3e}"


@check("ylm-orthonormality")
def _ylm_orthonormality(rng):
    theta, phi, w = oracles.sphere_quadrature(16, 24)
    lmax = 4
    cols = []
    for l in range(lmax + 1):
        for m in range(-l, l + 1):
            cols.append([specfun.spherical_harmonic(l, m, t, p) for t, p in zip(theta, phi)])
    y = np.array(cols)
    gram = (y.conj() * w) @ y.T
    err = float(np.max(np.abs(gram - np.eye(len(cols)))))
    return err <= 1e-10, f"max Gram deviation {err:.3e}"


@check("cg-orthonormality")
def _cg_orthonormality(rng):
    worst = 0.0
    for l in range(0, 7):
        js = [j for j in (l - 1, l, l + 1) if j >= 0 and (j != 0 or l == 1)]
        for j in js:
            for jp in js:
                for m in range(-min(j, jp), min(j, jp) + 1):
                    s = sum(
                        specfun.clebsch_gordan_spin1(l, m - mu, mu, j, m)
                        * specfun.clebsch_gordan_spin1(l, m - mu, mu, jp, m)
                        for mu in specfun.HELICITY_VALUES
                    )
                    worst = max(worst, abs(s - (1.0 if j == jp else 0.0)))
    return worst <= 1e-12, f"max deviation {worst:.3e}"


@check("cg-racah")
def _cg_racah(rng):
    worst = 0.0
    for l in range(0, 7):
        for j in range(max(0, l - 1), l + 2):
            for m in range(-j, j + 1):
                for mu in specfun.HELICITY_VALUES:
                    a = specfun.clebsch_gordan_spin1(l, m - mu, mu, j, m)
                    b = oracles.racah_clebsch_gordan(l, m - mu, 1, mu, j, m)
                    worst = max(worst, abs(a - b))
    return worst <= 1e-12, f"max deviation {worst:.3e}"


@check("helicity-unitary")
def _helicity_unitary(rng):
    worst = 0.0
    for _ in range(50):
        v = specfun.ComplexVec3(_random_complex(rng, 3), "helicity")
        c = specfun.helicity_to_cartesian(v)
        back = specfun.cartesian_to_helicity(c)
        worst = max(worst, abs(c.norm() ** 2 - v.norm() ** 2) / v.norm() ** 2)
        worst = max(worst, float(np.max(np.abs(back.components - v.components))))
    return worst <= 1e-15, f"max deviation {worst:.3e}"


@check("plane-wave-invariants")
def _plane_wave_invariants(rng):
    worst = 0.0
    for _ in range(50):
        k_vec = rng.normal(size=3)
        a = rng.normal(size=3)
        t1 = np.cross(k_vec, a)
        t1 /= np.linalg.norm(t1)
        t2 = np.cross(k_vec / np.linalg.norm(k_vec), t1)
        pol = _random_complex(rng, 2)
        pol /= np.linalg.norm(pol)
        pol_vec = pol[0] * t1 + pol[1] * t2
        s = fieldsrc.plane_wave_fields(complex(*rng.normal(size=2)), k_vec, pol_vec, rng.normal(size=3))
        rep = gpmcore.invariants_report(s)
        worst = max(worst, abs(rep["e_dot_b"]), abs(rep["e2_minus_b2"]))
    return worst <= 1e-14, f"max residual {worst:.3e}"


@check("multipole-transversality")
def _multipole_transversality(rng):
    worst_e = worst_m = 0.0
    for _ in range(50):
        j = int(rng.integers(1, 4))
        m = int(rng.integers(-j, j + 1))
        k = rng.uniform(0.5, 2.0)
        p = _random_point(rng, 0.5, 10.0, k)
        rhat = p.unit_radial()
        se = fieldsrc.multipole_fields(fieldsrc.MultipoleMode("E", k, j, m), p)
        sm = fieldsrc.multipole_fields(fieldsrc.MultipoleMode("M", k, j, m), p)
        worst_e = max(worst_e, abs(se.b_field @ rhat) / np.linalg.norm(se.b_field))
        worst_m = max(worst_m, abs(sm.e_field @ rhat) / np.linalg.norm(sm.e_field))
    ok = worst_e <= 1e-6 and worst_m <= 1e-12
    return ok, f"E-type |B.r|/|B| {worst_e:.3e}; M-type |E.r|/|E| {worst_m:.3e}"


@check("curl-curl")
def _curl_curl(rng):
    worst = 0.0
    for kind in ("E", "M"):
        for _ in range(3):
            j = int(rng.integers(1, 4))
            mode = fieldsrc.MultipoleMode(kind, 1.3, j, int(rng.integers(-j, j + 1)))
            p = _random_point(rng, 2.0, 2.0, mode.k)
            xyz = p.to_cartesian()

            def curl_a(q, mode=mode):
                return fieldsrc.numerical_curl(
                    lambda r: fieldsrc.multipole_vector_potential(mode, r), q, 1e-4 / mode.k
                )

            cc = fieldsrc.numerical_curl(curl_a, xyz, 1e-3 / mode.k)
            a = fieldsrc.multipole_vector_potential(mode, xyz)
            worst = max(worst, np.linalg.norm(cc - mode.k**2 * a) / np.linalg.norm(mode.k**2 * a))
    return worst <= 1e-6, f"max rel deviation {worst:.3e}"


def _random_samples(rng, n):
    return [fieldsrc.FieldSample(_random_complex(rng, 3), _random_complex(rng, 3)) for _ in range(n)]


@check("block-equivalence")
def _block_equivalence(rng):
    worst = worst00 = 0.0
    for s in _random_samples(rng, 200):
        r4 = gpmcore.bilinear_form(gpmcore.field_strength_tensor(s))
        p = gpmcore.gpm_electric(s.e_field) + gpmcore.gpm_magnetic(s.b_field)
        worst = max(worst, float(np.max(np.abs(r4[1:, 1:] - p))))
        worst00 = max(worst00, abs(r4[0, 0] - np.vdot(s.e_field, s.e_field)))
    ok = worst <= 1e-12 and worst00 <= 1e-14
    return ok, f"block max {worst:.3e}; R00 max {worst00:.3e}"


@check("gpm-structure")
def _gpm_structure(rng):
    bad = []
    worst_rank = worst_pb = 0.0
    for s in _random_samples(rng, 200):
        p = gpmcore.gpm_total(s)
        if not gpmcore.is_hermitian(p):
            bad.append("hermitian")
        if not gpmcore.is_psd(p):
            bad.append("psd")
        tr_err = abs(np.trace(p).real - (np.vdot(s.e_field, s.e_field).real + 2 * np.vdot(s.b_field, s.b_field).real))
        if tr_err > 1e-12 * max(1.0, np.trace(p).real):
            bad.append("trace")
        ev_e = np.linalg.eigvalsh(gpmcore.gpm_electric(s.e_field))
        worst_rank = max(worst_rank, ev_e[1] / ev_e.sum())
        wb = np.vdot(s.b_field, s.b_field).real
        ev_b = np.linalg.eigvalsh(gpmcore.gpm_magnetic(s.b_field))
        worst_pb = max(worst_pb, float(np.max(np.abs(ev_b - [0.0, wb, wb]))) / max(1.0, wb))
    ok = not bad and worst_rank <= 1e-12 and worst_pb <= 1e-12
    detail = f"P_E 2nd eig/trace {worst_rank:.3e}; P_B eig dev {worst_pb:.3e}"
    if bad:
        detail += "; failed: " + ",".join(sorted(set(bad)))
    return ok, detail


@check("phase-wrap-sum")
def _phase_wrap(rng):
    worst = 0.0
    for _ in range(200):
        d = gpmcore.phase_differences(_random_complex(rng, 3))
        total = sum(d.as_tuple())
        worst = max(worst, abs(total - 2 * math.pi * round(total / (2 * math.pi))))
        if not all(-math.pi < v <= math.pi for v in d.as_tuple()):
            return False, "phase outside (-pi, pi]"
    return worst <= 1e-12, f"max wrap-sum {worst:.3e}"


@check("plane-wave-reduction")
def _plane_wave_reduction(rng):
    worst = 0.0
    for axis, k_hat in zip("xyz", np.eye(3)):
        order = {"x": (1, 2, 0), "y": (2, 0, 1), "z": (0, 1, 2)}[axis]
        for _ in range(20):
            t = _random_complex(rng, 2)
            t /= np.linalg.norm(t)
            pol = np.zeros(3, dtype=complex)
            pol[order[0]], pol[order[1]] = t
            s = fieldsrc.plane_wave_fields(1.0, 2.0 * k_hat, pol, rng.normal(size=3))
            e_t = s.e_field[list(order[:2])]
            conventional = np.outer(e_t.conj(), e_t)
            idx = list(order)
            pe = gpmcore.gpm_electric(s.e_field)[np.ix_(idx, idx)]
            pb = gpmcore.gpm_magnetic(s.b_field)[np.ix_(idx, idx)]
            w_e = np.vdot(s.e_field, s.e_field).real
            target_e = np.zeros((3, 3), dtype=complex)
            target_e[:2, :2] = conventional
            target_b = target_e.copy()
            target_b[2, 2] = w_e
            red = gpmcore.reduce_to_conventional(s, axis)
            worst = max(
                worst,
                float(np.max(np.abs(pe - target_e))),
                float(np.max(np.abs(pb - target_b))),
                float(np.max(np.abs(red.p2 - conventional))),
                red.residual,
            )
    return worst <= 1e-14, f"max residual {worst:.3e}"


@check("zpo-angle-independence")
def _zpo_angles(rng):
    worst = 0.0
    angles = [(math.acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * math.pi)) for _ in range(5)]
    for kind in ("E", "M"):
        for j in range(1, 7):
            for x in (0.1, 0.7, 2.0, 5.0, 10.0):
                ref = zpo.zpo_density_dimensionless(kind, j, x)
                for t, p in angles:
                    worst = max(worst, abs(zpo.zpo_density_bruteforce(kind, j, x, t, p) - ref))
    return worst <= 1e-10, f"max deviation {worst:.3e}"


@check("zpo-completeness")
def _zpo_completeness(rng):
    worst = max(abs(zpo.completeness_total(x, 40).total - 2.0) for x in (0.5, 1.0, 3.0, 8.0))
    return worst <= 1e-10, f"max deviation {worst:.3e}"


@check("zpo-energy-ratio")
def _zpo_ratio(rng):
    from fractions import Fraction

    got = zpo.zpo_energy_ratio(zpo.ModeFilter((("E", 1),)))
    return got == Fraction(3, 2), f"E1 ratio {got}"


@check("fig1-profile")
def _fig1(rng):
    prof = zpo.radial_profile("E", 1, np.linspace(0.01, 20.0, 500))
    z0 = prof.z_values[0]
    far = float(np.max(prof.z_values[prof.x_values >= 15.0]))
    xs = prof.x_star
    ok = abs(z0 - 2.0) <= 1e-3 and xs is not None and 1.9 < xs < 2.0 and far < 0.05
    return ok, f"Z(0.01)={z0:.6f}; x*={xs:.6f}; max Z(x>=15)={far:.3e}"


@check("plane-wave-homogeneity")
def _homogeneity(rng):
    dev = zpo.plane_wave_homogeneity(rng.normal(size=3) * 5, rng.normal(size=(100, 3)) * 10)
    return dev <= 1e-14, f"max deviation {dev:.3e}"


@check("p0-trace-consistency")
def _p0_trace(rng):
    worst = 0.0
    for kind in ("E", "M"):
        for j in (1, 2, 3):
            p = _random_point(rng, 0.5, 8.0, 1.7)
            mat = zpo.zpo_polarization_matrix(kind, j, 1.7, p)
            ref = 1.7**2 * zpo.zpo_density_dimensionless(kind, j, 1.7 * p.r) / (4 * math.pi)
            worst = max(worst, abs(np.trace(mat).real - ref) / ref)
            if not (gpmcore.is_hermitian(mat) and gpmcore.is_psd(mat)):
                return False, "P0 not Hermitian PSD"
    return worst <= 1e-10, f"max rel deviation {worst:.3e}"


def run_validation():
    """Run every registered check; returns a list of (name, passed, detail)."""
    results = []
    for name, fn in _CHECKS:
        rng = np.random.default_rng(SEED)
        try:
            ok, detail = fn(rng)
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    return results


def format_report(results):
    lines = [f"{'check':<26} {'status':<6} detail"]
    for name, ok, detail in results:
        lines.append(f"{name:<26} {'PASS' if ok else 'FAIL':<6} {detail}")
    n_fail = sum(not ok for _, ok, _ in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
