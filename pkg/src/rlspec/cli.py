"""Command line front end.

Subcommands load operator/symbol JSON files, run the library analyses, and
emit JSON/CSV/SVG artifacts.  Outputs are deterministic: identical inputs
and options produce byte-identical files.  Exit codes: 0 success, 2 input
validation failure, 3 numerical failure.  The RLSPEC_THREADS environment
variable caps internal parallelism.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import serialize as ser
from .charpoly import coeff_matrix, emptiness_certificates
from .errors import NumericalFailure, ValidationError
from .numfun import range_and_coverage, ray_extrema
from .operators import operator_norm, schatten_norm
from .spectrum import spectrum_sweep
from .traceclass import charfun_convergence, disk_truncation, hankel_truncation

__all__ = ["main", "RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the analysis commands."""

    tol_imag: float = 1e-8
    tol_residual: float = 1e-8
    pd_threshold: float = 1e-10
    validate_tol: float = 1e-6
    n_rays: int = 64
    seed: int = 0

    def __post_init__(self):
        for name in ("tol_imag", "tol_residual", "pd_threshold", "validate_tol"):
            if not getattr(self, name) > 0:
                raise ValidationError(f"{name} must be positive")
        if self.n_rays < 1:
            raise ValidationError("n_rays must be >= 1")


def _out(path: str, content: str) -> None:
    if path == "-":
        sys.stdout.write(content)
    else:
        ser.write_text(path, content)


def _cmd_info(args) -> int:
    cfg = RunConfig(pd_threshold=args.pd_threshold, validate_tol=args.validate_tol, seed=args.seed)
    R = ser.load_operator(args.opfile)
    cm = coeff_matrix(R, validate_tol=cfg.validate_tol)
    cert = emptiness_certificates(R, pd_threshold=cfg.pd_threshold, coeff=cm)
    eigs = np.linalg.eigvalsh(cm.H)

    if cert.pd_certificate is not None:
        classification = "positive definite (spectrum empty)"
    elif cert.real_axis_zero is not None:
        classification = "indefinite (real-axis spectral point found: spectrum nonempty)"
    else:
        classification = "indefinite (certificates inconclusive)"

    payload = {
        "n": R.n,
        "operator_norm": operator_norm(R),
        "schatten_1": schatten_norm(R, 1.0),
        "schatten_2": schatten_norm(R, 2.0),
        "det_complexification": cert.det_complexification,
        "h_eigenvalues": [float(x) for x in eigs],
        "h_asymmetry": cm.asymmetry,
        "classification": classification,
        "real_axis_zero": cert.real_axis_zero,
    }
    if args.json:
        sys.stdout.write(ser.dump_json(payload))
        return 0
    lines = [
        f"operator dimension: {R.n}",
        f"operator norm: {payload['operator_norm']:.12g}",
        f"schatten p=1: {payload['schatten_1']:.12g}",
        f"schatten p=2: {payload['schatten_2']:.12g}",
        f"det of complexification: {payload['det_complexification']:.12g}",
        "H eigenvalues: " + ", ".join(f"{x:.12g}" for x in eigs),
        f"classification: {classification}",
    ]
    if cert.real_axis_zero is not None:
        lines.append(f"real-axis spectral point: r = {cert.real_axis_zero:.12g}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_charpoly(args) -> int:
    cfg = RunConfig(validate_tol=args.validate_tol, seed=args.seed)
    R = ser.load_operator(args.opfile)
    mode = "exact" if args.exact else "interpolation"
    cm = coeff_matrix(R, mode=mode, validate_tol=cfg.validate_tol)
    _out(args.out, ser.dump_json(ser.coeff_to_dict(cm)))
    if args.sos is not None:
        from .charpoly import sos_decompose

        _out(args.sos, ser.dump_json(ser.sos_to_dict(sos_decompose(cm))))
    return 0


def _cmd_spectrum(args) -> int:
    cfg = RunConfig(tol_imag=args.tol, tol_residual=args.tol, n_rays=args.rays, seed=args.seed)
    R = ser.load_operator(args.opfile)
    cloud = spectrum_sweep(R, cfg.n_rays, tol_imag=cfg.tol_imag, tol_residual=cfg.tol_residual)
    _out(args.out, ser.spectrum_csv(cloud))
    if args.svg is not None:
        ser.write_text(args.svg, ser.spectrum_svg(cloud, operator_norm(R)))
    return 0


def _cmd_numfun(args) -> int:
    cfg = RunConfig(n_rays=args.rays, validate_tol=args.validate_tol, seed=args.seed)
    R = ser.load_operator(args.opfile)
    cm = coeff_matrix(R, validate_tol=cfg.validate_tol)
    if args.out.endswith(".csv"):
        rows = []
        for k in range(cfg.n_rays):
            theta = 2.0 * math.pi * k / cfg.n_rays
            ext = ray_extrema(cm, theta)
            r_min, f_min = min(ext, key=lambda t: t[1])
            rows.append((theta, r_min, f_min))
        _out(args.out, ser.ray_minima_csv(rows))
    else:
        rep = range_and_coverage(cm, n_rays=cfg.n_rays)
        _out(args.out, ser.dump_json(ser.report_to_dict(rep)))
    return 0


def _cmd_friedrichs(args) -> int:
    sym = ser.load_symbol(args.symbol)
    build = hankel_truncation if sym.kind == "circle-hankel" else disk_truncation
    R = build(sym, args.n)
    _out(args.out, ser.dump_json(ser.operator_to_dict(R)))
    return 0


def _parse_grid(spec: str) -> np.ndarray:
    try:
        rmin_s, rmax_s, nr_s, na_s = spec.split(":")
        rmin, rmax = float(rmin_s), float(rmax_s)
        nr, na = int(nr_s), int(na_s)
    except ValueError:
        raise ValidationError(
            f"grid spec must look like 'rmin:rmax:nr:nangles', got {spec!r}"
        )
    if not (0 < rmin <= rmax) or nr < 1 or na < 1:
        raise ValidationError(f"grid spec values out of range: {spec!r}")
    radii = np.linspace(rmin, rmax, nr)
    angles = 2.0 * np.pi * np.arange(na) / na
    return np.array([r * np.exp(1j * t) for r in radii for t in angles])


def _cmd_charfun(args) -> int:
    sym = ser.load_symbol(args.symbol)
    if args.nmax < 1:
        raise ValidationError(f"--nmax must be >= 1, got {args.nmax}")
    sizes = []
    n = 1
    while n <= args.nmax:
        sizes.append(n)
        n *= 2
    if sizes[-1] != args.nmax:
        sizes.append(args.nmax)
    grid = _parse_grid(args.grid)
    table = charfun_convergence(sym, grid, sizes, lam_min=args.lam_min)
    _out(args.out, ser.charfun_csv(table))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlspec",
        description="Spectral analyses of finite-rank real linear operators z -> Cz + B conj(z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0, help="seed recorded in the run config")
        p.add_argument(
            "--error-json",
            action="store_true",
            help="on failure, print a machine-readable error object to stdout",
        )

    p = sub.add_parser("info", help="norms, determinant, coefficient spectrum, certificates")
    p.add_argument("opfile")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--pd-threshold", type=float, default=1e-10)
    p.add_argument("--validate-tol", type=float, default=1e-6)
    common(p)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("charpoly", help="extract the coefficient matrix (and optional SOS)")
    p.add_argument("opfile")
    p.add_argument("--exact", action="store_true", help="use the exact minor-expansion oracle")
    p.add_argument("--out", default="-", help="coefficient JSON path ('-' for stdout)")
    p.add_argument("--sos", default=None, help="also write the eigen-kind SOS JSON here")
    p.add_argument("--validate-tol", type=float, default=1e-6)
    common(p)
    p.set_defaults(fn=_cmd_charpoly)

    p = sub.add_parser("spectrum", help="ray-sweep the spectrum into CSV (and optional SVG)")
    p.add_argument("opfile")
    p.add_argument("--rays", type=int, default=64, help="ray directions on the full circle")
    p.add_argument("--tol", type=float, default=1e-8, help="eigenvalue realness / residual tolerance")
    p.add_argument("--out", default="-", help="CSV path ('-' for stdout)")
    p.add_argument("--svg", default=None, help="optional scatter SVG path")
    common(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("numfun", help="numerical function range and field-of-values coverage")
    p.add_argument("opfile")
    p.add_argument("--rays", type=int, default=128)
    p.add_argument(
        "--out",
        default="-",
        help="report path: *.csv emits per-ray minima, anything else the JSON report",
    )
    p.add_argument("--validate-tol", type=float, default=1e-6)
    common(p)
    p.set_defaults(fn=_cmd_numfun)

    p = sub.add_parser("friedrichs", help="materialize a symbol truncation as an operator file")
    p.add_argument("--symbol", required=True, help="symbol JSON path")
    p.add_argument("--n", type=int, required=True, help="truncation size")
    p.add_argument("--out", default="-", help="operator JSON path ('-' for stdout)")
    common(p)
    p.set_defaults(fn=_cmd_friedrichs)

    p = sub.add_parser(
        "charfun",
        aliases=["phi"],
        help="characteristic function table over doubling truncation sizes",
    )
    p.add_argument("--symbol", required=True)
    p.add_argument("--nmax", type=int, required=True, help="largest truncation size")
    p.add_argument("--grid", default="0.5:3.0:6:8", help="lambda grid as rmin:rmax:nr:nangles")
    p.add_argument("--lam-min", type=float, default=None, help="override the near-origin cutoff")
    p.add_argument("--out", default="-", help="CSV path ('-' for stdout)")
    common(p)
    p.set_defaults(fn=_cmd_charfun)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as exc:
        return _fail(args, exc, 2)
    except (NumericalFailure, np.linalg.LinAlgError) as exc:
        return _fail(args, exc, 3)
    except OSError as exc:
        return _fail(args, exc, 2)


def _fail(args, exc: Exception, code: int) -> int:
    if getattr(args, "error_json", False):
        sys.stdout.write(
            ser.dump_json({"error": str(exc), "type": type(exc).__name__, "exit_code": code})
        )
    print(f"error: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
