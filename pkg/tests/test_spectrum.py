"""Ray sweeps, eigenvectors, eigenvalue-free certificates, invariant structure."""

import numpy as np
import pytest

from randops import crandn, random_antilinear, random_operator
from rlspec import (
    RealLinearOperator,
    ValidationError,
    apply,
    charpoly_eval,
    common_invariant_1d,
    conjugation,
    eigenvector,
    emptiness_certificates,
    identity,
    krylov_cspan,
    no_eigenvalue_certificate,
    operator_norm,
    ray_spectrum,
    scale,
    spectrum_sweep,
)


def skew_operator():
    return RealLinearOperator(np.zeros((2, 2)), [[0.0, 1.0], [-1.0, 0.0]])


def eps_operator(eps):
    a = np.sqrt((1 + eps) / 2)
    b = np.sqrt((1 - eps) / 2)
    return RealLinearOperator(np.zeros((2, 2)), [[a, b], [-b, a]])


def no_invariant_example():
    return RealLinearOperator([[1.0, 1.0], [0.0, 1.0]], [[0.0, 0.0], [1.0, 0.0]])


# --------------------------------------------------------------- ray_spectrum

def test_ray_spectrum_conjugation_full_circle():
    # the complexification [[0, 1], [1, 0]] has eigenvalues +-1 at every angle
    tau = conjugation(1)
    for th in np.linspace(0, np.pi, 9):
        hits = ray_spectrum(tau, th)
        assert [round(r, 12) for r, _ in hits] == [-1.0, 1.0]


def test_ray_spectrum_complex_linear_point():
    R = identity(1)
    hits = ray_spectrum(R, 0.0)
    assert len(hits) == 1 and abs(hits[0][0] - 1.0) < 1e-12
    assert ray_spectrum(R, np.pi / 2) == []


def test_ray_spectrum_skew_empty_everywhere():
    # p = (1 + |lam|^2)^2 > 0, so no line meets the spectrum
    R = skew_operator()
    for th in np.linspace(0, np.pi, 11):
        assert ray_spectrum(R, th) == []


# ------------------------------------------------------------- spectrum_sweep

def test_sweep_conjugation_unit_circle():
    cloud = spectrum_sweep(conjugation(1), 64)
    assert cloud.n_rays == 64
    assert len(cloud.points) == 64
    assert max(abs(p.r - 1.0) for p in cloud.points) < 1e-10
    thetas = sorted(p.theta for p in cloud.points)
    assert np.allclose(thetas, 2 * np.pi * np.arange(64) / 64, atol=1e-12)


def test_sweep_complex_linear_aimed_rays():
    C = np.diag([1.0 + 0j, 2j])
    R = RealLinearOperator(C, np.zeros((2, 2)))
    cloud = spectrum_sweep(R, thetas=[0.0, np.pi / 2])
    lams = cloud.lambdas()
    assert len(lams) == 2
    assert min(abs(lams - 1.0)) < 1e-10
    assert min(abs(lams - 2j)) < 1e-10


def test_sweep_eps_example_empty():
    cloud = spectrum_sweep(eps_operator(0.5), 32)
    assert cloud.points == ()


def test_sweep_residuals_satisfy_bound():
    rng = np.random.default_rng(3)
    A = random_antilinear(rng, 4)
    cloud = spectrum_sweep(A, 16)
    n = 4
    for p in cloud.points:
        assert p.residual <= cloud.tol_residual * (1 + p.r) ** (2 * n)
        assert abs(charpoly_eval(A, p.lam)) == p.residual


def test_sweep_antilinear_circle_symmetry():
    # with no complex linear part the radii are independent of the angle
    rng = np.random.default_rng(4)
    A = random_antilinear(rng, 4)
    cloud = spectrum_sweep(A, 32)
    by_theta = {}
    for p in cloud.points:
        by_theta.setdefault(round(p.theta, 12), []).append(p.r)
    radii = [np.array(sorted(v)) for v in by_theta.values()]
    assert len({len(r) for r in radii}) == 1
    base = radii[0]
    assert max(float(np.max(np.abs(r - base))) for r in radii) < 1e-8


def test_sweep_points_bounded_by_norm():
    rng = np.random.default_rng(5)
    for _ in range(5):
        A = random_antilinear(rng, 4)
        nrm = operator_norm(A)
        cloud = spectrum_sweep(A, 16)
        for p in cloud.points:
            assert p.r <= nrm + 1e-8


def test_sweep_consistent_with_bisection_zero():
    rng = np.random.default_rng(6)
    found = 0
    for _ in range(20):
        R = random_operator(rng, 3)
        cert = emptiness_certificates(R)
        if cert.real_axis_zero is None:
            continue
        found += 1
        hits = [r for r, _ in ray_spectrum(R, 0.0)]
        assert hits and min(abs(r - cert.real_axis_zero) for r in hits) < 1e-6
    assert found >= 3


def test_sweep_rejects_bad_ray_count():
    with pytest.raises(ValidationError):
        spectrum_sweep(conjugation(1), 0)


def test_sweep_deterministic_under_threads(monkeypatch):
    monkeypatch.setenv("RLSPEC_THREADS", "4")
    rng = np.random.default_rng(7)
    A = random_antilinear(rng, 5)
    c1 = spectrum_sweep(A, 32)
    monkeypatch.setenv("RLSPEC_THREADS", "1")
    c2 = spectrum_sweep(A, 32)
    assert c1.points == c2.points


# ---------------------------------------------------------------- eigenvector

def test_eigenvector_identity():
    x = eigenvector(identity(2), 1.0)
    assert x is not None
    assert np.linalg.norm(apply(identity(2), x) - x) < 1e-12


def test_eigenvector_conjugation_real():
    x = eigenvector(conjugation(2), 1.0)
    assert x is not None
    assert np.linalg.norm(x.imag) < 1e-10
    assert np.linalg.norm(apply(conjugation(2), x) - x) < 1e-12


def test_eigenvector_conjugation_phase_circle():
    # antilinear phase relation: for lam = e^{i phi}, e^{i phi/2} x is real
    tau = conjugation(2)
    for phi in (0.4, 1.7, -2.0):
        lam = np.exp(1j * phi)
        x = eigenvector(tau, lam)
        assert x is not None
        assert np.linalg.norm(apply(tau, x) - lam * x) < 1e-10
        y = np.exp(1j * phi / 2) * x
        assert np.linalg.norm(y.imag) < 1e-8


def test_eigenvector_absent_off_spectrum():
    assert eigenvector(conjugation(2), 2.0) is None
    assert eigenvector(skew_operator(), 1.0) is None


# --------------------------------------------------- no-eigenvalue certificate

def test_certificate_skew_margin_one():
    res = no_eigenvalue_certificate(skew_operator())
    assert res.certified
    assert abs(res.margin - 1.0) < 1e-12
    assert res.rest_norm < 1e-12


def test_certificate_identity_inconclusive():
    res = no_eigenvalue_certificate(identity(2))
    assert not res.certified
    assert res.skew_min_modulus == 0.0


def test_certified_operators_have_empty_sweeps():
    rng = np.random.default_rng(8)
    checked = 0
    for _ in range(30):
        n = 4
        S = crandn(rng, n, n)
        skew = (S - S.T) / 2
        R = RealLinearOperator(0.05 * crandn(rng, n, n), skew + 0.02 * crandn(rng, n, n))
        res = no_eigenvalue_certificate(R)
        if not res.certified:
            continue
        checked += 1
        assert spectrum_sweep(R, 16).points == ()
    assert checked >= 5


# --------------------------------------------------------- invariant subspaces

def test_no_invariant_line_example():
    res = common_invariant_1d(no_invariant_example())
    assert res.lines == ()
    assert res.partial  # defective complex linear part


def test_invariant_lines_identity_all_degenerate():
    res = common_invariant_1d(identity(3))
    assert len(res.lines) == 3
    assert not res.partial
    assert any("eigenspace-degenerate" in f for f in res.flags)


def test_invariant_lines_distinct_diagonal():
    R = RealLinearOperator(np.diag([1.0 + 0j, 2.0]), np.zeros((2, 2)))
    res = common_invariant_1d(R)
    assert len(res.lines) == 2
    dirs = sorted(int(np.argmax(np.abs(x))) for x in res.lines)
    assert dirs == [0, 1]


def test_invariant_lines_antilinear_diagonal():
    # B conj(x) parallel to x forces the axes when the moduli differ
    R = RealLinearOperator(np.zeros((2, 2)), np.diag([1.0, 2.0]))
    res = common_invariant_1d(R)
    assert len(res.lines) == 2
    for x in res.lines:
        bx = R.B @ x.conj()
        assert np.linalg.norm(bx - (x.conj() @ bx) * x) < 1e-10


def test_invariant_lines_verified_against_action():
    # every certified line must absorb both parts of the operator
    rng = np.random.default_rng(9)
    for _ in range(10):
        n = int(rng.integers(2, 5))
        R = random_operator(rng, n)
        res = common_invariant_1d(R)
        for x in res.lines:
            cx = R.C @ x
            bx = R.B @ x.conj()
            assert np.linalg.norm(cx - (x.conj() @ cx) * x) < 1e-6
            assert np.linalg.norm(bx - (x.conj() @ bx) * x) < 1e-6


def test_invariant_lines_mixed_construction():
    # C shares the eigenvector e1 with the antilinear part
    C = np.array([[1.0, 0.3], [0.0, 2.0]])
    B = np.array([[0.5, 0.0], [0.0, 0.0]])
    res = common_invariant_1d(RealLinearOperator(C, B))
    assert any(abs(x[0]) > 1 - 1e-8 for x in res.lines)


# --------------------------------------------------------------------- krylov

def test_krylov_conjugation_stops_at_one():
    span = krylov_cspan(conjugation(3), np.array([1.0, 0, 0]))
    assert span.basis.shape == (3, 1)
    assert span.residuals[0] < 1e-12


def test_krylov_antilinear_spans_are_invariant():
    # the complex span of antilinear powers absorbs the operator; verify by
    # projecting the image of random span elements with an independent projector
    rng = np.random.default_rng(10)
    for _ in range(20):
        n = int(rng.integers(2, 7))
        A = random_antilinear(rng, n)
        y = crandn(rng, n)
        span = krylov_cspan(A, y)
        assert np.max(span.residuals) < 1e-10
        Q = span.basis
        P = Q @ Q.conj().T
        for _ in range(5):
            v = Q @ crandn(rng, Q.shape[1])
            img = apply(A, v)
            assert np.linalg.norm(img - P @ img) < 1e-9 * (1 + np.linalg.norm(img))


def test_krylov_general_operator_saturates():
    span = krylov_cspan(no_invariant_example(), np.array([1.0, 0.0]))
    assert span.basis.shape == (2, 2)


def test_krylov_max_dim_cap():
    rng = np.random.default_rng(11)
    R = random_operator(rng, 5)
    span = krylov_cspan(R, crandn(rng, 5), max_dim=2)
    assert span.basis.shape[1] <= 2


def test_krylov_rejects_zero_vector():
    with pytest.raises(ValidationError):
        krylov_cspan(conjugation(2), np.zeros(2))


def test_krylov_nilpotent_power_chain():
    # B shifts and conjugates: powers die after two steps
    B = np.array([[0.0, 1.0], [0.0, 0.0]])
    A = RealLinearOperator(np.zeros((2, 2)), B)
    span = krylov_cspan(A, np.array([0.0, 1.0]))
    assert span.basis.shape == (2, 2)
    assert np.max(span.residuals) < 1e-12
