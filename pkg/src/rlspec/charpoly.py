"""Characteristic polynomials of real linear operators and their coefficient matrices.

For an operator ``z -> C z + B conj(z)`` on C^n the characteristic
polynomial is the real-valued bivariate polynomial ::

    p(lam, conj(lam)) = det [[C - lam I, B], [conj(B), conj(C) - conj(lam) I]]

whose zero set is exactly the spectrum.  Collecting coefficients gives a
Hermitian (n+1) x (n+1) matrix H with ``p = v* H v`` against the monomial
vector ``v = (1, lam, ..., lam**n)``.  This module extracts H (fast polar
interpolation, or an exact minor-expansion oracle), produces weighted and
Cholesky sum-of-squares decompositions, and derives spectrum
emptiness/nonemptiness certificates from H.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite, NumericalFailure, ValidationError
from .operators import RealLinearOperator, adjoint, complexify, operator_norm

__all__ = [
    "CoeffMatrix",
    "SosDecomposition",
    "charpoly_eval",
    "coeff_matrix",
    "coeff_poly_eval",
    "sos_decompose",
    "cholesky_sos",
    "sos_eval",
    "common_zero_free",
    "EmptinessCertificates",
    "emptiness_certificates",
    "adjoint_coeff_check",
]


def _shifted_complexification(R: RealLinearOperator, lam: complex) -> np.ndarray:
    n = R.n
    M = complexify(R)
    idx = np.arange(n)
    M[idx, idx] -= lam
    M[n + idx, n + idx] -= np.conj(lam)
    return M


def _real_part(value: complex, what: str, tol: float = 1e-6) -> float:
    if abs(value.imag) > tol * (1.0 + abs(value.real)):
        raise NumericalFailure(
            f"{what} should be real but has imaginary part {value.imag:.3e} "
            f"(real part {value.real:.3e})"
        )
    return float(value.real)


def charpoly_eval(R: RealLinearOperator, lam: complex) -> float:
    """Evaluate the characteristic polynomial at ``lam``.

    Computed as the determinant of the shifted 2n x 2n complexification;
    the result is real up to roundoff and returned as a float.
    """
    det = complex(np.linalg.det(_shifted_complexification(R, lam)))
    return _real_part(det, "characteristic polynomial value")


@dataclass(frozen=True, eq=False)
class CoeffMatrix:
    """Hermitian coefficient matrix of a characteristic polynomial.

    Entry ``H[i, j]`` multiplies ``lam**j * conj(lam)**i``.  ``asymmetry``
    records the maximum entrywise deviation from Hermitian symmetry before
    the final symmetrizing projection (a roundoff diagnostic; the stored
    matrix itself is exactly Hermitian).
    """

    n: int
    H: np.ndarray
    asymmetry: float

    def __post_init__(self):
        H = np.asarray(self.H, dtype=complex)
        if H.shape != (self.n + 1, self.n + 1):
            raise ValidationError(
                f"coefficient matrix must be {(self.n + 1, self.n + 1)}, got {H.shape}"
            )
        H = H.copy()
        H.setflags(write=False)
        object.__setattr__(self, "H", H)


def _coeff_array(H) -> np.ndarray:
    """Accept a CoeffMatrix or a plain Hermitian matrix."""
    if isinstance(H, CoeffMatrix):
        return H.H
    A = np.asarray(H, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError(f"square coefficient matrix expected, got shape {A.shape}")
    return A


def coeff_poly_eval(H, lam: complex) -> float:
    """Evaluate ``v* H v`` with ``v = (1, lam, ..., lam**n)``."""
    A = _coeff_array(H)
    v = np.asarray(lam, dtype=complex) ** np.arange(A.shape[0])
    return float(np.real(v.conj() @ A @ v))


def _interp_radii(n: int, s: float) -> np.ndarray:
    # n+3 Chebyshev-spaced radii in [0.5 s, 2 s], s = 1 + operator norm
    k = np.arange(n + 3)
    return 1.25 * s + 0.75 * s * np.cos(np.pi * (2 * k + 1) / (2 * (n + 3)))


def _coeff_interpolation(R: RealLinearOperator, cond_limit: float) -> np.ndarray:
    n = R.n
    s = 1.0 + operator_norm(R)
    radii = _interp_radii(n, s)
    N = 2 * n + 1
    thetas = 2.0 * np.pi * np.arange(N) / N

    P = np.empty((radii.size, N), dtype=complex)
    for a, r in enumerate(radii):
        for t, th in enumerate(thetas):
            P[a, t] = np.linalg.det(_shifted_complexification(R, r * np.exp(1j * th)))

    # Angular DFT isolates the diagonals k = j - i of H (frequencies -n..n
    # are exactly resolved by 2n+1 angles); the factor r**|k| is then
    # stripped and each diagonal solved as a Vandermonde system in (r/s)^2.
    G = np.fft.fft(P, axis=1) / N
    pmax = np.max(np.abs(P), axis=1)  # roundoff scale of each radius row
    xs = (radii / s) ** 2

    H = np.zeros((n + 1, n + 1), dtype=complex)
    for q in range(-n, n + 1):
        aq = abs(q)
        ncoef = n - aq + 1
        A = np.vander(xs, ncoef, increasing=True)
        rhs = G[:, q % N] / radii**aq
        # Rows are whitened by their determinant roundoff scale so the huge
        # outer-radius samples cannot contaminate the small coefficients;
        # columns are equilibrated before the solve.
        sigma = pmax / radii**aq
        Aw = A / sigma[:, None]
        cn = np.linalg.norm(Aw, axis=0)
        Aw = Aw / cn
        cond = np.linalg.cond(Aw)
        if cond > cond_limit:
            raise NumericalFailure(
                f"radial interpolation system for diagonal {q} is ill-conditioned "
                f"(cond estimate {cond:.3e} > limit {cond_limit:.1e})"
            )
        c, *_ = np.linalg.lstsq(Aw, rhs / sigma, rcond=None)
        c = c / cn / s ** (2 * np.arange(ncoef))
        if q >= 0:
            for i in range(ncoef):
                H[i, i + q] = c[i]
        else:
            for i in range(ncoef):
                H[i + aq, i] = c[i]
    return H


def _coeff_exact(R: RealLinearOperator) -> np.ndarray:
    """Minor-expansion determinant with lam and conj(lam) independent.

    Entries of the shifted complexification are degree <= 1 bivariate
    polynomials; the determinant is expanded row by row over column
    subsets (division-free), with coefficients kept as (n+1) x (n+1)
    arrays indexed by the powers of conj(lam) and lam.  Cost grows like
    2**(2n), which is fine at oracle scale.
    """
    from itertools import combinations

    n = R.n
    if n > 8:
        raise ValidationError(f"exact mode is an oracle for small n (n <= 8), got n={n}")
    m = 2 * n
    M = complexify(R)

    one = np.zeros((n + 1, n + 1), dtype=complex)
    one[0, 0] = 1.0
    level = {0: one}
    for row in range(m):
        nxt = {}
        for T in combinations(range(m), row + 1):
            mask = 0
            for c in T:
                mask |= 1 << c
            acc = np.zeros((n + 1, n + 1), dtype=complex)
            for t, c in enumerate(T):
                sub = level[mask ^ (1 << c)]
                sgn = -1.0 if (row + t) % 2 else 1.0
                acc += (sgn * M[row, c]) * sub
                if c == row:
                    # diagonal entries carry -lam (top block) or -conj(lam)
                    if row < n:
                        acc[:, 1:] -= sgn * sub[:, :-1]
                    else:
                        acc[1:, :] -= sgn * sub[:-1, :]
            nxt[mask] = acc
        level = nxt
    return level[(1 << m) - 1]


def _validate_coeff(R: RealLinearOperator, H: np.ndarray, tol: float) -> None:
    n = R.n
    s = 1.0 + operator_norm(R)
    radii = np.linspace(0.6 * s, 1.9 * s, n + 2)
    thetas = 2.0 * np.pi * (np.arange(2 * n + 3) + 0.37) / (2 * n + 3)
    for r in radii:
        for th in thetas:
            lam = r * np.exp(1j * th)
            got = coeff_poly_eval(H, lam)
            ref = charpoly_eval(R, lam)
            if abs(got - ref) > tol * (s + r) ** (2 * n):
                raise NumericalFailure(
                    f"extracted coefficients disagree with the determinant at lam={lam:.4g}: "
                    f"|{got:.6e} - {ref:.6e}| exceeds tolerance"
                )


def coeff_matrix(
    R: RealLinearOperator,
    mode: str = "interpolation",
    *,
    validate: bool = True,
    validate_tol: float = 1e-6,
    herm_tol: float = 1e-6,
    cond_limit: float = 1e12,
) -> CoeffMatrix:
    """Extract the Hermitian coefficient matrix of the characteristic polynomial.

    Parameters
    ----------
    R : RealLinearOperator
    mode : str
        ``"interpolation"`` evaluates the determinant on a polar grid
        (2n+1 angles, n+3 radii) and solves for the coefficients; it is the
        fast production path.  ``"exact"`` expands the determinant symbolically
        with ``lam`` and ``conj(lam)`` treated as independent indeterminates;
        exponential in n, intended as an independent oracle for small n.
    validate : bool
        Compare ``v* H v`` against fresh determinant evaluations on an
        off-grid set of points and fail loudly on disagreement.
    validate_tol, herm_tol, cond_limit : float
        Tolerances for the validation grid, the pre-projection Hermitian
        asymmetry, and the radial solve conditioning.

    Returns
    -------
    CoeffMatrix
        With ``H[n][n] = 1`` (monic leading term ``|lam|**(2n)``) and
        ``H[0][0] = det`` of the complexification.
    """
    if mode == "interpolation":
        Hraw = _coeff_interpolation(R, cond_limit)
    elif mode == "exact":
        Hraw = _coeff_exact(R)
    else:
        raise ValidationError(f"unknown mode {mode!r}, expected 'interpolation' or 'exact'")

    asym = float(np.max(np.abs(Hraw - Hraw.conj().T)))
    hscale = max(1.0, float(np.max(np.abs(Hraw))))
    if asym > herm_tol * hscale:
        raise NumericalFailure(
            f"coefficient matrix violates Hermitian symmetry by {asym:.3e} "
            f"(scale {hscale:.3e}); extraction is unreliable"
        )
    H = (Hraw + Hraw.conj().T) / 2.0
    if validate:
        _validate_coeff(R, H, validate_tol)
    return CoeffMatrix(n=R.n, H=H, asymmetry=asym)


@dataclass(frozen=True, eq=False)
class SosDecomposition:
    """Weighted sum of squares ``p(lam, conj(lam)) = sum_i d[i] |p_i(lam)|**2``.

    Row i of ``U`` holds the coefficients of ``p_i`` (constant term first).
    ``kind == "eigen"``: U is unitary and d are the eigenvalues of H.
    ``kind == "cholesky"``: all weights are 1 and ``deg p_i = i``.
    """

    d: np.ndarray
    U: np.ndarray
    kind: str

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float).copy()
        U = np.asarray(self.U, dtype=complex).copy()
        if U.ndim != 2 or U.shape[0] != U.shape[1] or d.shape != (U.shape[0],):
            raise ValidationError("weights and polynomial rows have inconsistent shapes")
        if self.kind not in ("eigen", "cholesky"):
            raise ValidationError(f"unknown decomposition kind {self.kind!r}")
        d.setflags(write=False)
        U.setflags(write=False)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "U", U)


def sos_decompose(H) -> SosDecomposition:
    """Eigendecomposition-based sum of squares of the coefficient matrix.

    Diagonalizing ``H = U* D U`` with unitary U turns ``v* H v`` into
    ``sum d_i |p_i(lam)|**2`` where ``p_i`` has coefficient row ``U[i]``.
    Weights are returned in ascending order (eigenvalue order).
    """
    A = _coeff_array(H)
    w, V = np.linalg.eigh((A + A.conj().T) / 2.0)
    return SosDecomposition(d=w, U=V.conj().T, kind="eigen")


def cholesky_sos(H, *, pd_threshold: float = 1e-10) -> SosDecomposition:
    """Unit-weight sum of squares from a Cholesky factorization.

    Requires ``H`` positive definite (smallest eigenvalue above
    ``pd_threshold * ||H||``).  Reversing the monomial order makes the
    triangular factor produce polynomials of exact degree i, which have no
    common zero; a successful decomposition therefore certifies that the
    characteristic polynomial is strictly positive and the spectrum empty.
    """
    A = _coeff_array(H)
    w = np.linalg.eigvalsh((A + A.conj().T) / 2.0)
    scale = max(float(np.max(np.abs(w))), 1e-300)
    if w[0] <= pd_threshold * scale:
        raise NotPositiveDefinite(
            f"coefficient matrix is not positive definite: smallest eigenvalue {w[0]:.6e}",
            min_eigenvalue=float(w[0]),
        )
    Arev = A[::-1, ::-1]
    L = np.linalg.cholesky((Arev + Arev.conj().T) / 2.0)
    T = L.conj().T
    U = T[::-1, ::-1]
    return SosDecomposition(d=np.ones(A.shape[0]), U=U, kind="cholesky")


def sos_eval(sos: SosDecomposition, lam: complex) -> float:
    """Reconstruct ``p(lam, conj(lam))`` from a decomposition."""
    v = np.asarray(lam, dtype=complex) ** np.arange(sos.U.shape[1])
    vals = sos.U @ v
    return float(np.sum(sos.d * np.abs(vals) ** 2))


def common_zero_free(sos: SosDecomposition, tol: float = 1e-10) -> bool:
    """True when the squared polynomials can have no common zero.

    A common zero ``mu`` would put the monomial vector ``v_mu != 0`` in the
    kernel of the coefficient row matrix, so full column rank rules it out.
    """
    s = np.linalg.svd(sos.U, compute_uv=False)
    return bool(s[-1] > tol * max(s[0], 1e-300))


@dataclass(frozen=True)
class EmptinessCertificates:
    """Outcome of the two spectrum emptiness/nonemptiness criteria.

    ``pd_certificate`` is a Cholesky sum of squares proving the spectrum
    empty; ``real_axis_zero`` is a radius r with ``p(r, r) = 0`` proving it
    nonempty.  Both may be absent: the criteria are one-sided.
    """

    pd_certificate: SosDecomposition | None
    real_axis_zero: float | None
    det_complexification: float
    h_min_eigenvalue: float

    @property
    def verdict(self) -> str:
        if self.pd_certificate is not None:
            return "empty"
        if self.real_axis_zero is not None:
            return "nonempty"
        return "inconclusive"


def emptiness_certificates(
    R: RealLinearOperator,
    *,
    mode: str = "interpolation",
    pd_threshold: float = 1e-10,
    bisect_tol: float = 1e-10,
    coeff: CoeffMatrix | None = None,
) -> EmptinessCertificates:
    """Run both spectrum certificates on ``R``.

    If the coefficient matrix is positive definite, return the Cholesky sum
    of squares (spectrum empty).  If the determinant of the complexification
    is <= 0, the restriction ``f(r) = p(r, r)`` starts nonpositive and grows
    like ``r**(2n)``, so bisection on ``[0, 1 + ||R||]`` locates a real-axis
    spectral point (spectral points cannot exceed the operator norm).
    """
    cm = coeff if coeff is not None else coeff_matrix(R, mode=mode)
    det0 = charpoly_eval(R, 0.0)
    w = np.linalg.eigvalsh(cm.H)

    pd_cert = None
    scale = max(float(np.max(np.abs(w))), 1e-300)
    if w[0] > pd_threshold * scale:
        pd_cert = cholesky_sos(cm, pd_threshold=pd_threshold)

    zero = None
    if det0 <= 0.0:
        if det0 == 0.0:
            zero = 0.0
        else:
            lo = 0.0
            hi = 1.0 + operator_norm(R)
            fhi = charpoly_eval(R, hi)
            for _ in range(64):
                if fhi > 0.0:
                    break
                hi *= 2.0
                fhi = charpoly_eval(R, hi)
            else:
                raise NumericalFailure("could not bracket a positive value of p(r, r)")
            while hi - lo > bisect_tol:
                mid = 0.5 * (lo + hi)
                if charpoly_eval(R, mid) <= 0.0:
                    lo = mid
                else:
                    hi = mid
            zero = 0.5 * (lo + hi)

    return EmptinessCertificates(
        pd_certificate=pd_cert,
        real_axis_zero=zero,
        det_complexification=det0,
        h_min_eigenvalue=float(w[0]),
    )


def adjoint_coeff_check(R: RealLinearOperator, tol: float = 1e-9, mode: str = "interpolation") -> bool:
    """Verify that the adjoint's coefficients are the complex conjugates.

    ``p_adj(lam, conj(lam)) = p(conj(lam), lam)`` entrywise conjugates the
    coefficient matrix; in particular a self-adjoint operator has a real
    one.  Returns True when the identity holds within ``tol`` (absolute,
    entrywise).
    """
    Ha = coeff_matrix(adjoint(R), mode=mode).H
    Hr = coeff_matrix(R, mode=mode).H
    return bool(np.max(np.abs(Ha - Hr.conj())) <= tol)
