"""Tour of the operator algebra: representation, composition, norms.

A real linear operator on C^n is additive and homogeneous under real
scalars only.  It splits uniquely into a complex linear matrix C and an
antilinear part acting through a matrix B as z -> B conj(z); this script
walks through the basic calculus of such pairs.
"""

import numpy as np

import rlspec as rl

rng = np.random.default_rng(0)

# The two extremes: a complex linear map and plain conjugation.
I3 = rl.identity(3)
tau = rl.conjugation(3)
z = np.array([1.0 + 2.0j, -0.5j, 3.0])
print("tau z     =", rl.apply(tau, z))
print("||tau||   =", rl.operator_norm(tau), " (conjugation is an isometry)")

# Conjugation breaks complex linearity: scaling by i anticommutes.
print("tau(i z)  =", rl.apply(tau, 1j * z))
print("i tau(z)  =", 1j * rl.apply(tau, z))

# Any real linear black box can be sampled back into (C, B) form.
def mystery(v):
    return 2.0 * v + np.array([v[1].conjugate(), 0.0, 0.0])

R = rl.parts_from_action(mystery, 3)
print("\nrecovered C:\n", np.round(R.C.real, 12))
print("recovered B:\n", np.round(R.B.real, 12))

# Composition follows the conjugation-aware product rule; it is associative
# but far from commutative.
A = rl.RealLinearOperator(rng.standard_normal((3, 3)), rng.standard_normal((3, 3)))
print("\n||A tau - tau A|| =", rl.operator_norm(rl.add(rl.compose(A, tau), rl.scale(-1, rl.compose(tau, A)))))

# The adjoint pairs through the real inner product Re <x, y>.
x, y = rng.standard_normal(3) + 1j * rng.standard_normal(3), rng.standard_normal(3)
lhs = np.real(np.vdot(y, rl.apply(A, x)))
rhs = np.real(np.vdot(rl.apply(rl.adjoint(A), y), x))
print("adjoint pairing residual:", abs(lhs - rhs))

# Complexification doubles the space and the Schatten content: the 2n x 2n
# block matrix of a pure part carries each singular value twice.
Conly = rl.RealLinearOperator(A.C, np.zeros((3, 3)))
sC = np.linalg.svd(A.C, compute_uv=False)
sCc = np.linalg.svd(rl.complexify(Conly), compute_uv=False)
print("\nsingular values of C       :", np.round(sC, 6))
print("singular values of C^C     :", np.round(sCc, 6))
print("schatten-1 of the operator :", rl.schatten_norm(A, 1.0))

# Polynomials in an antilinear operator obey the conjugated-coefficient
# rule A p(A) = pbar(A) A -- the antilinear factor conjugates what follows.
Anti = rl.RealLinearOperator(np.zeros((2, 2)), rng.standard_normal((2, 2)) * 0.5)
p = [0.3, 1j, -0.7 + 0.2j]
left = rl.compose(Anti, rl.poly_apply(p, Anti))
right = rl.compose(rl.poly_apply(np.conj(p), Anti), Anti)
print("\nconjugated-coefficient identity residual:",
      max(np.max(np.abs(left.C - right.C)), np.max(np.abs(left.B - right.B))))
