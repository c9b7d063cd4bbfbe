"""Wire formats: operator/symbol/report JSON, spectrum and table CSV, scatter SVG.

All floats are written with 17 significant digits in lowercase scientific
notation, and every container is emitted in a fixed order, so identical
inputs produce byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .charpoly import CoeffMatrix, SosDecomposition
from .errors import ValidationError
from .numfun import NumFunReport
from .operators import RealLinearOperator
from .spectrum import SpectrumCloud
from .traceclass import CharFunTable, DecaySpec, SymbolSeries

__all__ = [
    "fmt_float",
    "dump_json",
    "read_json",
    "write_text",
    "operator_to_dict",
    "operator_from_dict",
    "load_operator",
    "coeff_to_dict",
    "coeff_from_dict",
    "sos_to_dict",
    "symbol_to_dict",
    "symbol_from_dict",
    "load_symbol",
    "report_to_dict",
    "spectrum_csv",
    "ray_minima_csv",
    "charfun_csv",
    "spectrum_svg",
]


def fmt_float(x: float) -> str:
    """17 significant digits, lowercase scientific; round-trips exactly."""
    return format(float(x), ".16e")


def dump_json(obj) -> str:
    """Deterministic JSON with the package's float convention."""
    pieces: list[str] = []
    _emit(obj, pieces)
    return "".join(pieces) + "\n"


def _emit(obj, out: list[str]) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(k))
            out.append(": ")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    elif isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(fmt_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise ValidationError(f"cannot serialize value of type {type(obj).__name__}")


def read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc


def write_text(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(content)


def _mat_rows(M: np.ndarray, part: str) -> list[list[float]]:
    A = M.real if part == "re" else M.imag
    return [[float(x) for x in row] for row in A]


def _mat_from(d: dict, key_re: str, key_im: str, shape: tuple, what: str) -> np.ndarray:
    try:
        re = np.asarray(d[key_re], dtype=float)
        im = np.asarray(d[key_im], dtype=float)
    except KeyError as exc:
        raise ValidationError(f"{what}: missing field {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{what}: fields {key_re}/{key_im} are not numeric arrays") from exc
    if re.shape != shape or im.shape != shape:
        raise ValidationError(
            f"{what}: {key_re}/{key_im} must have shape {shape}, got {re.shape} and {im.shape}"
        )
    return re + 1j * im


def operator_to_dict(R: RealLinearOperator) -> dict:
    return {
        "n": R.n,
        "C_re": _mat_rows(R.C, "re"),
        "C_im": _mat_rows(R.C, "im"),
        "B_re": _mat_rows(R.B, "re"),
        "B_im": _mat_rows(R.B, "im"),
    }


def operator_from_dict(d: dict) -> RealLinearOperator:
    if not isinstance(d, dict):
        raise ValidationError("operator JSON must be an object")
    try:
        n = int(d["n"])
    except (KeyError, TypeError, ValueError):
        raise ValidationError("operator JSON: field 'n' must be a positive integer")
    if n < 1:
        raise ValidationError(f"operator JSON: dimension must be >= 1, got {n}")
    C = _mat_from(d, "C_re", "C_im", (n, n), "operator JSON")
    B = _mat_from(d, "B_re", "B_im", (n, n), "operator JSON")
    return RealLinearOperator(C, B)


def load_operator(path: str) -> RealLinearOperator:
    return operator_from_dict(read_json(path))


def coeff_to_dict(cm: CoeffMatrix) -> dict:
    return {
        "n": cm.n,
        "H_re": _mat_rows(cm.H, "re"),
        "H_im": _mat_rows(cm.H, "im"),
        "asymmetry": cm.asymmetry,
    }


def coeff_from_dict(d: dict) -> CoeffMatrix:
    if not isinstance(d, dict):
        raise ValidationError("coefficient JSON must be an object")
    try:
        n = int(d["n"])
    except (KeyError, TypeError, ValueError):
        raise ValidationError("coefficient JSON: field 'n' must be an integer")
    H = _mat_from(d, "H_re", "H_im", (n + 1, n + 1), "coefficient JSON")
    return CoeffMatrix(n=n, H=H, asymmetry=float(d.get("asymmetry", 0.0)))


def sos_to_dict(sos: SosDecomposition) -> dict:
    return {
        "d": [float(x) for x in sos.d],
        "U_re": _mat_rows(sos.U, "re"),
        "U_im": _mat_rows(sos.U, "im"),
        "kind": sos.kind,
    }


def symbol_to_dict(sym: SymbolSeries) -> dict:
    coeffs = sym.coeffs if sym.coeffs is not None else np.zeros(0)
    return {
        "kind": sym.kind,
        "coeffs_re": [float(x) for x in coeffs.real],
        "coeffs_im": [float(x) for x in coeffs.imag],
        "m": sym.m,
        "decay": {"tag": sym.decay.tag, "param": sym.decay.param},
    }


def symbol_from_dict(d: dict) -> SymbolSeries:
    if not isinstance(d, dict):
        raise ValidationError("symbol JSON must be an object")
    kind = d.get("kind")
    decay_d = d.get("decay", {"tag": "finite", "param": None})
    if not isinstance(decay_d, dict) or "tag" not in decay_d:
        raise ValidationError("symbol JSON: field 'decay' must be an object with a 'tag'")
    param = decay_d.get("param")
    decay = DecaySpec(tag=decay_d["tag"], param=None if param is None else float(param))
    if kind == "circle-hankel":
        re = np.asarray(d.get("coeffs_re", []), dtype=float)
        im = np.asarray(d.get("coeffs_im", []), dtype=float)
        if re.shape != im.shape or re.ndim != 1:
            raise ValidationError("symbol JSON: coeffs_re/coeffs_im must be equal-length lists")
        return SymbolSeries(kind=kind, coeffs=re + 1j * im, decay=decay)
    if kind == "disk-monomial":
        m = d.get("m")
        if m is None:
            raise ValidationError("symbol JSON: disk-monomial requires field 'm'")
        return SymbolSeries(kind=kind, m=int(m), decay=decay)
    raise ValidationError(f"symbol JSON: unknown kind {kind!r}")


def load_symbol(path: str) -> SymbolSeries:
    return symbol_from_dict(read_json(path))


def report_to_dict(rep: NumFunReport) -> dict:
    return {
        "f0": rep.f0,
        "f_inf": rep.f_inf,
        "range_est": [rep.range_est[0], rep.range_est[1]],
        "fov": [rep.fov[0], rep.fov[1]],
        "uncovered_low": rep.uncovered_low,
        "uncovered_high": rep.uncovered_high,
        "grid": {"n_rays": rep.n_rays, "max_critical_radius": rep.max_critical_radius},
    }


def spectrum_csv(cloud: SpectrumCloud) -> str:
    lines = ["theta,r,re,im,residual"]
    for p in cloud.points:
        lines.append(
            ",".join(
                (
                    fmt_float(p.theta),
                    fmt_float(p.r),
                    fmt_float(p.lam.real),
                    fmt_float(p.lam.imag),
                    fmt_float(p.residual),
                )
            )
        )
    return "\n".join(lines) + "\n"


def ray_minima_csv(rows) -> str:
    """Rows of (theta, radius of the ray minimum, minimal value)."""
    lines = ["theta,r_min_F,F_min"]
    for theta, r, val in rows:
        lines.append(",".join((fmt_float(theta), fmt_float(r), fmt_float(val))))
    return "\n".join(lines) + "\n"


def charfun_csv(table: CharFunTable) -> str:
    header = ["lambda_re", "lambda_im"] + [f"n{n}" for n in table.n_list]
    lines = [",".join(header)]
    for j, lam in enumerate(table.lambdas):
        row = [fmt_float(lam.real), fmt_float(lam.imag)]
        row += [fmt_float(table.values[i, j]) for i in range(len(table.n_list))]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def spectrum_svg(cloud: SpectrumCloud, bounding_radius: float, size: int = 640) -> str:
    """Scatter of spectral points with the |lambda| = ||R|| bounding circle."""
    half = size / 2.0
    rmax = max(bounding_radius, max((p.r for p in cloud.points), default=0.0), 1e-12)
    scl = 0.45 * size / rmax

    def x(v: float) -> str:
        return f"{half + scl * v:.2f}"

    def y(v: float) -> str:
        return f"{half - scl * v:.2f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="0" y1="{half:.2f}" x2="{size}" y2="{half:.2f}" stroke="#cccccc"/>',
        f'<line x1="{half:.2f}" y1="0" x2="{half:.2f}" y2="{size}" stroke="#cccccc"/>',
        f'<circle cx="{half:.2f}" cy="{half:.2f}" r="{scl * bounding_radius:.2f}" '
        f'fill="none" stroke="#888888" stroke-dasharray="4 4"/>',
    ]
    for p in cloud.points:
        parts.append(
            f'<circle cx="{x(p.lam.real)}" cy="{y(p.lam.imag)}" r="2.5" fill="#c0392b"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
