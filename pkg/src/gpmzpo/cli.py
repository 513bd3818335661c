"""Command-line front end: tabulate GPM and ZPO quantities as CSV or JSON."""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import fieldsrc, gpmcore, validate, zpo
from .exceptions import DomainError, UndefinedPhaseError

EXIT_OK, EXIT_VALIDATION, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3
SCHEMA_VERSION = 1
_AXES = "xyz"
_HELICITY_LABELS = ("p", "z", "m")


class ConfigError(Exception):
    pass


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input


def _parse_triple(text, what):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"{what} needs three comma-separated values")
    return parts


def read_points(path):
    """Read "r,theta,phi" rows; '#' starts a comment line."""
    try:
        with open(path, newline="") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InputError(f"cannot read points file {path!r}: {exc.strerror}") from exc
    points = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            r, theta, phi = (float(v) for v in _parse_triple(stripped, "point"))
            if not all(math.isfinite(v) for v in (r, theta, phi)):
                raise ValueError("non-finite value")
        except ValueError as exc:
            raise InputError(f"{path}: line {lineno}: {exc}") from exc
        points.append((r, theta, phi))
    if not points:
        raise InputError(f"{path}: no points")
    return points


def _points(args):
    if args.points and args.point:
        raise ConfigError("give either --points or --point, not both")
    if args.points:
        return read_points(args.points)
    if args.point:
        try:
            return [tuple(float(v) for v in _parse_triple(args.point, "--point"))]
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError("this command needs --points FILE or --point r,theta,phi")


def _spatial_point(r_scaled, theta, phi, k):
    # radii in point files are in units of 1/k
    try:
        return fieldsrc.SpatialPoint(r_scaled / k, theta, phi)
    except DomainError as exc:
        raise ConfigError(f"invalid point ({r_scaled}, {theta}, {phi}): {exc}") from exc


def _multipole_args(args):
    if args.lam is None or args.j is None:
        raise ConfigError("multipole quantities need --lambda and --j")
    if args.j < 1:
        raise ConfigError("--j must be >= 1")


# ---------------------------------------------------------------------------
# output


class Table:
    def __init__(self, schema, columns):
        self.schema = schema
        self.columns = columns
        self.rows = []
        self.metadata = {}

    def add(self, row):
        if len(row) != len(self.columns):
            raise AssertionError("row width does not match header")
        self.rows.append(row)


def _round(value, precision):
    return float(f"{value:.{precision}g}")


def _fmt(value, precision):
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return repr(_round(float(value), precision))


def render(table, fmt, precision):
    if fmt == "json":
        records = [
            {
                col: (v if isinstance(v, str) else _round(float(v), precision))
                for col, v in zip(table.columns, row)
            }
            for row in table.rows
        ]
        doc = {
            "schema": table.schema,
            "version": SCHEMA_VERSION,
            "records": records,
            "metadata": {
                key: (v if isinstance(v, str) else _round(float(v), precision))
                for key, v in table.metadata.items()
            },
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(f"# schema={table.schema} version={SCHEMA_VERSION}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_fmt(v, precision) for v in row])
    if table.metadata:
        meta = " ".join(f"{k}={_fmt(v, precision)}" for k, v in table.metadata.items())
        buf.write(f"# {meta}\n")
    return buf.getvalue()


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {out!r}: {exc.strerror}") from exc


def _complex_columns(name):
    return [f"{name}_re", f"{name}_im"]


# ---------------------------------------------------------------------------
# commands


def _plane_source(args):
    axis = args.axis
    k_hat = np.eye(3)[_AXES.index(axis)]
    if args.pol is None:
        pol = np.eye(3)[_AXES.index({"x": "y", "y": "z", "z": "x"}[axis])].astype(complex)
    else:
        try:
            pol = np.array([complex(v.replace(" ", "")) for v in _parse_triple(args.pol, "--pol")])
        except ValueError as exc:
            raise ConfigError(f"invalid --pol: {exc}") from exc
        norm = np.linalg.norm(pol)
        if norm == 0:
            raise ConfigError("--pol must be nonzero")
        pol = pol / norm
    if abs(pol @ k_hat) > 1e-12:
        raise ConfigError("--pol is not transverse to the propagation axis")

    def sample(point):
        return fieldsrc.plane_wave_fields(1.0, args.k * k_hat, pol, point)

    return sample


def _multipole_source(args):
    _multipole_args(args)
    if args.m is None:
        raise ConfigError("multipole source needs --m")
    try:
        mode = fieldsrc.MultipoleMode(args.lam, args.k, args.j, args.m)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc

    def sample(point):
        return fieldsrc.multipole_fields(mode, point)

    return sample


def gpm_table(args):
    if args.source == "plane":
        sampler = _plane_source(args)
    elif args.source == "multipole":
        sampler = _multipole_source(args)
    else:
        raise ConfigError("gpm needs --source plane|multipole")
    columns = ["r", "theta", "phi", "W_E"]
    for c in _AXES:
        columns += _complex_columns(f"S_{c}")
    for a in _AXES:
        for b in _AXES:
            columns += _complex_columns(f"P_{a}{b}")
    columns += ["d_xy", "d_yz", "d_zx"]
    columns += _complex_columns("e_dot_b") + ["e2_minus_b2"]
    table = Table("gpm", columns)
    for r, theta, phi in _points(args):
        point = _spatial_point(r, theta, phi, args.k)
        try:
            sample = sampler(point)
        except DomainError as exc:
            raise ConfigError(f"point ({r}, {theta}, {phi}): {exc}") from exc
        blocks = gpmcore.extract_blocks(gpmcore.bilinear_form(gpmcore.field_strength_tensor(sample)))
        p = gpmcore.gpm_total(sample)
        row = [r, theta, phi, blocks.w_e.real]
        for v in blocks.s_vec:
            row += [v.real, v.imag]
        for v in p.ravel():
            row += [v.real, v.imag]
        try:
            row += list(gpmcore.phase_differences(sample.e_field).as_tuple())
        except UndefinedPhaseError:
            row += ["undefined"] * 3
        rep = gpmcore.invariants_report(sample)
        row += [rep["e_dot_b"].real, rep["e_dot_b"].imag, rep["e2_minus_b2"]]
        table.add(row)
    return table


def zpo_profile_table(args):
    _multipole_args(args)
    if args.x_min is None or args.x_max is None or args.samples is None:
        raise ConfigError("zpo-profile needs --x-min, --x-max and --samples")
    if args.samples < 2:
        raise ConfigError("--samples must be >= 2")
    if not 0 < args.x_min < args.x_max:
        raise ConfigError("need 0 < --x-min < --x-max")
    grid = np.linspace(args.x_min, args.x_max, args.samples)
    prof = zpo.radial_profile(args.lam, args.j, grid)
    table = Table("zpo-profile", ["x", "Z", "baseline"])
    for x, z in zip(prof.x_values, prof.z_values):
        table.add([x, z, args.baseline])
    table.metadata = {
        "lambda": args.lam,
        "j": args.j,
        "baseline": args.baseline,
        "baseline_convention": "configurable-constant",
        "x_star": "none" if prof.x_star is None else prof.x_star,
    }
    return table


def zpo_matrix_table(args):
    _multipole_args(args)
    labels = _HELICITY_LABELS if args.basis == "helicity" else (
        ("t", "f", "r") if args.basis == "local" else tuple(_AXES)
    )
    columns = ["r", "theta", "phi"]
    for a in labels:
        for b in labels:
            columns += _complex_columns(f"P0_{a}{b}")
    columns.append("trace")
    table = Table("zpo-matrix", columns)
    for r, theta, phi in _points(args):
        point = _spatial_point(r, theta, phi, args.k)
        try:
            mat = zpo.zpo_polarization_matrix(args.lam, args.j, args.k, point, basis=args.basis)
        except DomainError as exc:
            raise ConfigError(f"point ({r}, {theta}, {phi}): {exc}") from exc
        row = [r, theta, phi]
        for v in mat.ravel():
            row += [v.real, v.imag]
        row.append(np.trace(mat).real)
        table.add(row)
    table.metadata = {"lambda": args.lam, "j": args.j, "k": args.k, "basis": args.basis}
    return table


def zpo_ratio_text(args):
    if args.modes is None:
        raise ConfigError("zpo-ratio needs --modes (e.g. E1,M1)")
    try:
        ratio = zpo.zpo_energy_ratio(zpo.ModeFilter.parse(args.modes))
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    if args.format == "json":
        doc = {
            "schema": "zpo-ratio",
            "version": SCHEMA_VERSION,
            "modes": args.modes,
            "ratio": f"{ratio.numerator}/{ratio.denominator}",
            "decimal": float(ratio),
        }
        return json.dumps(doc, indent=2) + "\n"
    return f"{ratio.numerator}/{ratio.denominator} = {float(ratio)!r}\n"


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gpmzpo",
        description="General polarization matrix and zero-point oscillations of multipole fields.",
        epilog=(
            "Point files hold 'r,theta,phi' rows (radians; r in units of 1/k, i.e. r is kr). "
            "Exit codes: 0 ok, 1 validation failure, 2 configuration error, 3 I/O error."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, points=True):
        p.add_argument("--k", type=float, default=1.0, help="wavenumber (default 1)")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--precision", type=int, default=12, help="significant digits, 6..17")
        if points:
            p.add_argument("--points", help="CSV file of r,theta,phi rows")
            p.add_argument("--point", help="single point 'r,theta,phi'")

    def multipole(p, with_m=False):
        p.add_argument("--lambda", dest="lam", choices=("E", "M"), help="multipole type")
        p.add_argument("--j", type=int, help="angular momentum j >= 1")
        if with_m:
            p.add_argument("--m", type=int, help="projection |m| <= j")

    p = sub.add_parser("gpm", help="tabulate the general polarization matrix at points")
    common(p)
    multipole(p, with_m=True)
    p.add_argument("--source", choices=("plane", "multipole"), required=True)
    p.add_argument("--axis", choices=tuple(_AXES), default="z", help="plane-wave propagation axis")
    p.add_argument("--pol", help="plane-wave polarization 'ex,ey,ez' (complex, normalised)")

    p = sub.add_parser("zpo-profile", help="dimensionless ZPO radial profile Z(x)")
    common(p, points=False)
    multipole(p)
    p.set_defaults(lam="E", j=1)
    p.add_argument("--x-min", type=float, dest="x_min")
    p.add_argument("--x-max", type=float, dest="x_max")
    p.add_argument("--samples", type=int)
    p.add_argument("--baseline", type=float, default=2.0 / 3.0,
                   help="constant reference level drawn next to Z (a display convention)")

    p = sub.add_parser("zpo-ratio", help="exact vacuum-energy ratio for a mode filter")
    common(p, points=False)
    p.add_argument("--modes", help="comma-separated families, e.g. 'E1,M1,E2'")

    p = sub.add_parser("zpo-matrix", help="ZPO polarization matrix at points")
    common(p)
    multipole(p)
    p.add_argument("--basis", choices=("helicity", "local", "cartesian"), default="helicity")

    p = sub.add_parser("validate", help="run the seeded invariant suite")
    p.add_argument("--out", help="write the report here as well")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            results = validate.run_validation()
            report = validate.format_report(results)
            sys.stdout.write(report)
            if args.out:
                _emit(report, args.out)
            return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_VALIDATION

        if not 6 <= args.precision <= 17:
            raise ConfigError("--precision must be between 6 and 17")
        if not (math.isfinite(args.k) and args.k > 0):
            raise ConfigError("--k must be positive")
        if args.command == "zpo-ratio":
            _emit(zpo_ratio_text(args), args.out)
            return EXIT_OK
        builders = {"gpm": gpm_table, "zpo-profile": zpo_profile_table, "zpo-matrix": zpo_matrix_table}
        table = builders[args.command](args)
        _emit(render(table, args.format, args.precision), args.out)
        return EXIT_OK
    except ConfigError as exc:
        print(f"gpmzpo: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InputError as exc:
        print(f"gpmzpo: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
