"""Independent reference computations used by the validation suite and tests."""

from fractions import Fraction
import math

import numpy as np


def racah_clebsch_gordan(j1, m1, j2, m2, j, m):
    """<j1 m1; j2 m2 | j m> for integer momenta from the Racah formula.

    The square of the coefficient is accumulated exactly as a Fraction;
    only the final square root is taken in floating point.
    """
    if m1 + m2 != m or abs(m1) > j1 or abs(m2) > j2 or abs(m) > j:
        return 0.0
    if j < abs(j1 - j2) or j > j1 + j2:
        return 0.0
    f = math.factorial
    pref = Fraction(
        (2 * j + 1) * f(j1 + j2 - j) * f(j1 - j2 + j) * f(-j1 + j2 + j),
        f(j1 + j2 + j + 1),
    )
    pref *= f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(j + m) * f(j - m)
    total = Fraction(0)
    for k in range(0, j1 + j2 + j + 1):
        args = (k, j1 + j2 - j - k, j1 - m1 - k, j2 + m2 - k, j - j2 + m1 + k, j - j1 - m2 + k)
        if min(args) < 0:
            continue
        den = 1
        for a in args:
            den *= f(a)
        total += Fraction((-1) ** k, den)
    if total == 0:
        return 0.0
    sign = 1.0 if total > 0 else -1.0
    return sign * math.sqrt(pref * total * total)


def bessel_closed_form(l, x):
    """j_0, j_1, j_2 from their elementary expressions."""
    s, c = math.sin(x), math.cos(x)
    if l == 0:
        return s / x
    if l == 1:
        return s / x**2 - c / x
    if l == 2:
        return (3 / x**3 - 1 / x) * s - 3 / x**2 * c
    raise ValueError("closed form only for l <= 2")


def bessel_power_series(l, x, terms=60):
    """j_l(x) from its Taylor series with exact rational coefficients."""
    x = Fraction(x)
    dfact = 1
    for i in range(1, 2 * l + 2, 2):
        dfact *= i
    total = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        if k:
            term *= -x * x / (2 * k * (2 * l + 2 * k + 1))
        total += term
    return float(x**l / dfact * total)


def bilinear_form_loops(f):
    """F^H F by explicit index loops."""
    out = np.zeros((4, 4), dtype=complex)
    for a in range(4):
        for b in range(4):
            acc = 0j
            for c in range(4):
                acc += f[c][a].conjugate() * f[c][b]
            out[a, b] = acc
    return out


def sphere_quadrature(n_theta, n_phi):
    """Gauss-Legendre in cos(theta) times uniform phi; returns (theta, phi, weight) arrays."""
    nodes, weights = np.polynomial.legendre.leggauss(n_theta)
    theta = np.arccos(nodes)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    ww = np.outer(weights, np.full(n_phi, 2 * np.pi / n_phi))
    return tt.ravel(), pp.ravel(), ww.ravel()
