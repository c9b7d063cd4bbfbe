"""The numerical function: a normalized characteristic polynomial.

Dividing ``p(lam, conj(lam))`` by ``sum_j |lam|**(2j)`` yields a bounded
real function whose values are convex combinations of the eigenvalues of
the coefficient matrix H, hence contained in the field of values
``[min eig H, max eig H]``.  It vanishes exactly on the spectrum, equals
``det`` of the complexification at the origin, and tends to 1 at infinity.
Along a fixed ray the function is a rational function of the radius, so
range computation is a family of one-dimensional critical point problems.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from ._threads import ordered_map
from .charpoly import SosDecomposition, _coeff_array, sos_decompose
from .errors import ValidationError

__all__ = [
    "NumFunReport",
    "numfun_eval",
    "convex_weights",
    "ray_extrema",
    "range_and_coverage",
]


def numfun_eval(H, lam: complex) -> float:
    """Evaluate ``v* H v / ||v||**2`` with ``v = (1, lam, ..., lam**n)``."""
    A = _coeff_array(H)
    v = np.asarray(lam, dtype=complex) ** np.arange(A.shape[0])
    num = float(np.real(v.conj() @ A @ v))
    den = float(np.sum(np.abs(v) ** 2))
    return num / den


def convex_weights(H, lam: complex, sos: SosDecomposition | None = None) -> np.ndarray:
    """Barycentric weights expressing the value as a convex combination.

    With the eigen-kind sum of squares ``p = sum d_i |p_i|**2`` and unitary
    coefficient rows, the weights ``|p_i(lam)|**2 / sum_j |p_j(lam)|**2``
    are nonnegative, sum to one, and satisfy ``sum_i d_i w_i`` equal to the
    numerical function value.  Order matches ``sos.d`` (ascending
    eigenvalues of H).
    """
    if sos is None:
        sos = sos_decompose(H)
    if sos.kind != "eigen":
        raise ValidationError("convex weights require an eigen-kind decomposition")
    v = np.asarray(lam, dtype=complex) ** np.arange(sos.U.shape[1])
    sq = np.abs(sos.U @ v) ** 2
    return sq / np.sum(sq)


def _ray_numerator(A: np.ndarray, theta: float) -> np.ndarray:
    # coefficients in r of p(r e^{i theta}, r e^{-i theta}), degree 0..2n
    n = A.shape[0] - 1
    ph = np.exp(1j * theta * np.arange(n + 1))
    W = np.outer(ph.conj(), ph) * A  # Hermitian; antidiagonal sums are real
    coeffs = np.zeros(2 * n + 1)
    for d in range(2 * n + 1):
        i0 = max(0, d - n)
        i1 = min(d, n)
        val = sum(W[i, d - i] for i in range(i0, i1 + 1))
        coeffs[d] = float(np.real(val))
    return coeffs


def ray_extrema(H, theta: float, r_max: float | None = None) -> list[tuple[float, float]]:
    """Critical points of the numerical function along one ray.

    On the ray ``lam = r exp(i theta)`` the function is the rational
    function ``N(r) / (1 + r**2 + ... + r**(2n))``; its interior critical
    radii are the nonnegative real roots of ``N' D - N D'``.  Returns
    ``(r, value)`` pairs sorted by radius, always including the endpoint
    ``r = 0`` and the limit at infinity (radius ``inf``, value ``H[n][n]``).
    ``r_max`` optionally discards critical radii beyond a cutoff.
    """
    A = _coeff_array(H)
    n = A.shape[0] - 1
    num = _ray_numerator(A, theta)
    den = np.zeros(2 * n + 1)
    den[::2] = 1.0

    E = npoly.polysub(npoly.polymul(npoly.polyder(num), den), npoly.polymul(num, npoly.polyder(den)))
    scaleE = max(float(np.max(np.abs(E))), 1e-300)
    E = np.trim_zeros(np.where(np.abs(E) > 1e-14 * scaleE, E, 0.0), "b")

    crit: list[float] = []
    if E.size > 1:
        try:
            roots = npoly.polyroots(E)
        except np.linalg.LinAlgError as exc:
            warnings.warn(f"critical point solve failed on ray theta={theta:.6g}: {exc}")
            roots = np.array([])
        for rt in roots:
            if abs(rt.imag) > 1e-8 * (1.0 + abs(rt)):
                continue
            r = float(rt.real)
            if r <= 0.0:
                continue
            if r_max is not None and r > r_max:
                continue
            if not crit or abs(r - crit[-1]) > 1e-10 * (1.0 + r):
                crit.append(r)

    out = [(0.0, float(np.real(A[0, 0])))]
    for r in sorted(crit):
        out.append((r, float(npoly.polyval(r, num) / npoly.polyval(r, den))))
    out.append((math.inf, float(np.real(A[n, n]))))
    return out


@dataclass(frozen=True)
class NumFunReport:
    """Range of the numerical function versus the field of values of H.

    ``range_est`` comes from exact per-ray critical points united over the
    angle grid; ``fov`` is the interval between the extreme eigenvalues of
    H.  The uncovered margins are the (clamped) gaps between the two
    intervals at each end -- how much of the field of values the function
    provably never reaches at the sampled angles.
    """

    f0: float
    f_inf: float
    range_est: tuple[float, float]
    fov: tuple[float, float]
    uncovered_low: float
    uncovered_high: float
    n_rays: int
    max_critical_radius: float


def range_and_coverage(H, n_rays: int = 128, *, workers: int | None = None) -> NumFunReport:
    """Estimate the range of the numerical function and its field-of-values coverage.

    The range over the plane is the union of per-ray ranges, each obtained
    exactly from polynomial critical points, so the only discretization is
    the angle grid (default 128 rays over the full circle).
    """
    if n_rays < 1:
        raise ValidationError(f"n_rays must be >= 1, got {n_rays}")
    A = _coeff_array(H)
    n = A.shape[0] - 1

    thetas = [2.0 * math.pi * k / n_rays for k in range(n_rays)]
    per_ray = ordered_map(lambda th: ray_extrema(A, th), thetas, workers)

    lo = math.inf
    hi = -math.inf
    rmax = 0.0
    for ext in per_ray:
        for r, val in ext:
            lo = min(lo, val)
            hi = max(hi, val)
            if math.isfinite(r):
                rmax = max(rmax, r)

    eigs = np.linalg.eigvalsh((A + A.conj().T) / 2.0)
    fov = (float(eigs[0]), float(eigs[-1]))
    return NumFunReport(
        f0=float(np.real(A[0, 0])),
        f_inf=float(np.real(A[n, n])),
        range_est=(lo, hi),
        fov=fov,
        uncovered_low=max(0.0, lo - fov[0]),
        uncovered_high=max(0.0, fov[1] - hi),
        n_rays=n_rays,
        max_critical_radius=rmax,
    )
