"""Trace-class extensions: Hankel/Bergman symbol families and determinant limits.

Antilinear operators arising from multiplication-and-project constructions
have explicit matrix truncations: on the circle the matrix against Fourier
modes is a Hankel matrix of symbol coefficients, and on the unit disk with
a monomial symbol it is a single weighted antidiagonal.  For a trace-class
operator the normalized characteristic polynomials of its truncations
converge to a characteristic function ``det[I - (1/r)(e^{-i theta} C + A)]``
on the punctured plane, whose zeros are the eigenvalues.  This module
builds the truncations, evaluates the characteristic function, tabulates
its convergence, and checks the determinant continuity bound that drives
the limit.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .charpoly import _real_part
from .errors import ValidationError
from .operators import RealLinearOperator, complexify

__all__ = [
    "DecaySpec",
    "SymbolSeries",
    "symbol_scale",
    "hankel_truncation",
    "disk_truncation",
    "charfun_eval",
    "CharFunTable",
    "charfun_convergence",
    "trace_norm",
    "det_continuity_check",
]

_KINDS = ("circle-hankel", "disk-monomial")
_DECAY_TAGS = ("finite", "geometric", "polynomial")


@dataclass(frozen=True)
class DecaySpec:
    """Declared decay class of a coefficient sequence.

    ``geometric`` with ratio q in (0, 1): |a_k| = O(q**k).
    ``polynomial`` with exponent s > 2: |a_k| = O((k+1)**-s); s > 2 keeps
    the weighted tail sum ``sum (k+1) |a_k|`` finite.
    ``finite``: finitely many nonzero coefficients (the stored ones).
    """

    tag: str
    param: float | None = None

    def __post_init__(self):
        if self.tag not in _DECAY_TAGS:
            raise ValidationError(f"unknown decay tag {self.tag!r}, expected one of {_DECAY_TAGS}")
        if self.tag == "geometric":
            if self.param is None or not 0.0 < self.param < 1.0:
                raise ValidationError("geometric decay requires a ratio in (0, 1)")
        if self.tag == "polynomial":
            if self.param is None or not self.param > 2.0:
                raise ValidationError(
                    "polynomial decay requires exponent > 2 for a trace-class tail"
                )


@dataclass(frozen=True, eq=False)
class SymbolSeries:
    """Symbol data generating an antilinear operator family.

    ``circle-hankel``: coefficients a_k, truncation matrix B[l, k] = a_{k+l}
    against Fourier modes.  ``disk-monomial``: monomial degree m, truncation
    against normalized monomials sqrt(k+1) z**k on the unit disk.
    """

    kind: str
    coeffs: np.ndarray | None = None
    m: int | None = None
    decay: DecaySpec = field(default_factory=lambda: DecaySpec("finite"))

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValidationError(f"unknown symbol kind {self.kind!r}, expected one of {_KINDS}")
        if self.kind == "circle-hankel":
            if self.coeffs is None:
                raise ValidationError("circle-hankel symbol requires coefficients")
            a = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
            if a.ndim != 1 or a.size < 1:
                raise ValidationError("coefficients must form a nonempty one-dimensional sequence")
            a.setflags(write=False)
            object.__setattr__(self, "coeffs", a)
        else:
            if self.m is None or int(self.m) != self.m or self.m < 0:
                raise ValidationError("disk-monomial symbol requires a nonnegative integer degree m")
            object.__setattr__(self, "m", int(self.m))

    @classmethod
    def circle_hankel(cls, coeffs, decay: DecaySpec | None = None) -> "SymbolSeries":
        return cls(kind="circle-hankel", coeffs=coeffs, decay=decay or DecaySpec("finite"))

    @classmethod
    def disk_monomial(cls, m: int) -> "SymbolSeries":
        return cls(kind="disk-monomial", m=m)


def symbol_scale(sym: SymbolSeries) -> float:
    """Operator-norm scale of the symbol family (used for grid validation)."""
    if sym.kind == "circle-hankel":
        return max(float(np.sum(np.abs(sym.coeffs))), 1e-300)
    full = disk_truncation(sym, sym.m + 1)
    return max(float(np.linalg.norm(full.B, 2)), 1e-300)


def tail_weight(sym: SymbolSeries, start: int) -> float:
    """Weighted tail ``sum_{k >= start} (k+1) |a_k|`` over the stored coefficients.

    ``sum (k+1) |a_k|`` bounds the trace norm of the full Hankel operator
    (the k-th antidiagonal is a rank <= k+1 piece of unit singular values),
    so small tails certify that truncations are trace-norm Cauchy.
    """
    if sym.kind != "circle-hankel":
        return 0.0
    a = np.abs(sym.coeffs[start:])
    k = np.arange(start, start + a.size)
    return float(np.sum((k + 1) * a))


def _check_decay(sym: SymbolSeries) -> None:
    if sym.kind != "circle-hankel":
        return
    a = np.abs(sym.coeffs)
    base = max(float(a[0]), 1e-300)
    if sym.decay.tag == "geometric":
        q = float(sym.decay.param)
        ratios = a / (base * q ** np.arange(a.size))
        if float(np.max(ratios)) > 1e6:
            warnings.warn(
                f"coefficients violate the declared geometric({q}) decay "
                f"(worst ratio {float(np.max(ratios)):.2e}); trace-class tail bound unreliable"
            )
    elif sym.decay.tag == "polynomial":
        s = float(sym.decay.param)
        ratios = a * (np.arange(1, a.size + 1) ** s) / base
        if float(np.max(ratios)) > 1e6:
            warnings.warn(
                f"coefficients violate the declared polynomial({s}) decay "
                f"(worst ratio {float(np.max(ratios)):.2e}); trace-class tail bound unreliable"
            )


def hankel_truncation(sym: SymbolSeries, n: int) -> RealLinearOperator:
    """n x n Hankel truncation of a circle symbol: ``B[l, k] = a[k + l]``, C = 0.

    Needs coefficients a_0 .. a_{2n-2}; self-adjoint whenever they are real.
    """
    if sym.kind != "circle-hankel":
        raise ValidationError(f"hankel_truncation requires a circle-hankel symbol, got {sym.kind!r}")
    if n < 1:
        raise ValidationError(f"truncation size must be >= 1, got {n}")
    if sym.coeffs.size < 2 * n - 1:
        raise ValidationError(
            f"insufficient coefficients: truncation of size {n} needs a_0..a_{2 * n - 2} "
            f"({2 * n - 1} values), only {sym.coeffs.size} stored"
        )
    _check_decay(sym)
    idx = np.add.outer(np.arange(n), np.arange(n))
    B = sym.coeffs[idx]
    return RealLinearOperator(np.zeros((n, n), dtype=complex), B)


def disk_truncation(sym: SymbolSeries, n: int) -> RealLinearOperator:
    """n x n truncation of the disk operator with monomial symbol z**m.

    Against the orthonormal monomials ``sqrt(k+1) z**k`` the matrix has the
    single antidiagonal ``B[l, k] = sqrt((k+1)(l+1)) / (m+1)`` on k + l = m
    (zero matrix once m >= 2n - 1, when the antidiagonal leaves the block).
    """
    if sym.kind != "disk-monomial":
        raise ValidationError(f"disk_truncation requires a disk-monomial symbol, got {sym.kind!r}")
    if n < 1:
        raise ValidationError(f"truncation size must be >= 1, got {n}")
    m = sym.m
    k = np.arange(n)
    B = np.zeros((n, n), dtype=complex)
    mask = np.add.outer(k, k) == m
    weights = np.sqrt(np.outer(k + 1.0, k + 1.0)) / (m + 1.0)
    B[mask] = weights[mask]
    return RealLinearOperator(np.zeros((n, n), dtype=complex), B)


def charfun_eval(R: RealLinearOperator, lam: complex) -> float:
    """Characteristic function of a truncation: ``p(lam, conj(lam)) / |lam|**(2n)``.

    Equals ``det[I - (1/r)(e^{-i theta} C + A)]`` of the complexification at
    ``lam = r e^{i theta}``; computed through a log-determinant so very
    large truncations neither overflow nor underflow.  Not defined at 0.
    """
    lam = complex(lam)
    if lam == 0:
        raise ValidationError("the characteristic function is defined on the punctured plane only")
    n = R.n
    M = complexify(R)
    idx = np.arange(n)
    M[idx, idx] -= lam
    M[n + idx, n + idx] -= np.conj(lam)
    sign, logabs = np.linalg.slogdet(M)
    if sign == 0:
        return 0.0
    val = sign * np.exp(logabs - 2 * n * math.log(abs(lam)))
    return _real_part(complex(val), "characteristic function value")


@dataclass(frozen=True, eq=False)
class CharFunTable:
    """Characteristic function values across truncation sizes.

    ``values[i, j]`` is the function of the ``n_list[i]`` truncation at
    ``lambdas[j]``; ``diffs[i]`` is the sup over the grid of
    ``|values[i+1] - values[i]|`` and ``stalls`` lists the steps where that
    difference failed to decrease.
    """

    lambdas: np.ndarray
    n_list: tuple[int, ...]
    values: np.ndarray
    diffs: np.ndarray
    stalls: tuple[int, ...]


def charfun_convergence(
    sym: SymbolSeries,
    lambdas,
    n_list,
    *,
    lam_min: float | None = None,
) -> CharFunTable:
    """Tabulate characteristic function convergence over truncation sizes.

    The grid must stay away from the origin (default cutoff: one tenth of
    the symbol scale) since the inverse radius amplifies truncation error
    there.  Successive sup-norm differences should decay for a trace-class
    symbol; steps where they do not are flagged in ``stalls``.
    """
    grid = np.atleast_1d(np.asarray(lambdas, dtype=complex))
    if grid.ndim != 1 or grid.size == 0:
        raise ValidationError("lambda grid must be a nonempty one-dimensional array")
    cutoff = lam_min if lam_min is not None else 0.1 * symbol_scale(sym)
    small = np.abs(grid) < cutoff
    if np.any(small):
        raise ValidationError(
            f"{int(np.sum(small))} grid points lie inside |lambda| < {cutoff:.3g}; "
            "the characteristic function is unreliable near the origin"
        )
    sizes = tuple(int(n) for n in n_list)
    if not sizes or any(n < 1 for n in sizes) or list(sizes) != sorted(sizes):
        raise ValidationError("truncation sizes must be a nondecreasing list of integers >= 1")

    build = hankel_truncation if sym.kind == "circle-hankel" else disk_truncation
    values = np.empty((len(sizes), grid.size))
    for i, n in enumerate(sizes):
        op = build(sym, n)
        values[i] = [charfun_eval(op, lam) for lam in grid]

    diffs = np.array([
        float(np.max(np.abs(values[i + 1] - values[i]))) for i in range(len(sizes) - 1)
    ])
    stalls = tuple(i for i in range(1, diffs.size) if diffs[i] > diffs[i - 1])
    return CharFunTable(
        lambdas=grid, n_list=sizes, values=values, diffs=diffs, stalls=stalls
    )


def trace_norm(M) -> float:
    """Sum of singular values (Schatten-1 norm) of a matrix."""
    A = np.asarray(M)
    return float(np.sum(np.linalg.svd(A, compute_uv=False)))


def det_continuity_check(C1, C2) -> bool:
    """Check the determinant continuity bound on a pair of matrices.

    ``|det(I + C1) - det(I + C2)| <= ||C1 - C2||_1 exp(1 + ||C1||_1 + ||C2||_1)``
    is the inequality that makes the truncation limit well defined; this
    verifies it numerically for the given pair.
    """
    A1 = np.asarray(C1, dtype=complex)
    A2 = np.asarray(C2, dtype=complex)
    if A1.shape != A2.shape or A1.ndim != 2 or A1.shape[0] != A1.shape[1]:
        raise ValidationError("both matrices must be square and of equal size")
    I = np.eye(A1.shape[0])
    lhs = abs(np.linalg.det(I + A1) - np.linalg.det(I + A2))
    rhs = trace_norm(A1 - A2) * math.exp(1.0 + trace_norm(A1) + trace_norm(A2))
    return bool(lhs <= rhs + 1e-12 * (1.0 + abs(lhs)))
