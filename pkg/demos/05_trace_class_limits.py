"""Trace-class families: Hankel truncations and determinant limits.

Multiplication-and-project operators on the circle have Hankel coefficient
matrices; truncating to n Fourier modes gives a finite-rank family whose
normalized characteristic polynomials converge, for summable symbols, to a
characteristic function on the punctured plane whose zeros are the
eigenvalues of the limit operator.
"""

import os

import numpy as np

import rlspec as rl
from rlspec import serialize as ser

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

# A geometrically decaying symbol: trace class with an explicit tail bound.
sym = rl.SymbolSeries.circle_hankel(0.5 ** np.arange(140), rl.DecaySpec("geometric", 0.5))
print("symbol scale:", rl.symbol_scale(sym))
print("weighted tail beyond k = 16:", rl.tail_weight(sym, 16))

op4 = rl.hankel_truncation(sym, 4)
print("\n4 x 4 Hankel block:\n", np.round(op4.B.real, 6))

# The characteristic function of each truncation, tabulated over a grid and
# doubling sizes: the sup differences collapse geometrically.
grid = np.array([r * np.exp(1j * t)
                 for r in np.linspace(0.5, 3.0, 6)
                 for t in np.linspace(0, 2 * np.pi, 8, endpoint=False)])
table = rl.charfun_convergence(sym, grid, [2, 4, 8, 16, 32, 64])
print("\nsup |phi_next - phi| per doubling:", [f"{d:.3e}" for d in table.diffs])
print("stalls:", table.stalls)
path = os.path.join(OUT, "phi_convergence.csv")
ser.write_text(path, ser.charfun_csv(table))
print("wrote", path)

# A rank-one symbol has the closed form phi = 1 - |c|^2/|lam|^2 at every
# truncation size, with the zero circle |lam| = |c| visible to the ray solver.
c = 0.7 - 0.2j
coeffs = np.zeros(30, dtype=complex)
coeffs[0] = c
rank1 = rl.SymbolSeries.circle_hankel(coeffs)
op = rl.hankel_truncation(rank1, 6)
lam = 1.1 * np.exp(0.4j)
print("\nrank-1 phi:", rl.charfun_eval(op, lam), " closed form:", 1 - abs(c) ** 2 / abs(lam) ** 2)
print("ray hits (signed radii):", [round(r, 9) for r, _ in rl.ray_spectrum(op, 0.4)])

# The disk counterpart: a monomial symbol z^m produces one weighted
# antidiagonal against the normalized monomial basis.
disk = rl.SymbolSeries.disk_monomial(2)
print("\ndisk truncation (m = 2, n = 4):\n", np.round(rl.disk_truncation(disk, 4).B.real, 6))

# The determinant continuity bound that makes the limit well defined.
M1 = rl.complexify(rl.hankel_truncation(sym, 8))
M2 = rl.complexify(rl.hankel_truncation(sym, 8)) + 0.01 * np.eye(16)
print("\ndeterminant continuity holds:", rl.det_continuity_check(M1, M2))

# Trace-norm Cauchy behaviour of the truncations themselves.
for n in (4, 8, 16, 32):
    small = rl.hankel_truncation(sym, n).B
    big = rl.hankel_truncation(sym, 2 * n).B
    pad = np.zeros_like(big)
    pad[:n, :n] = small
    print(f"||R_{2*n} - R_{n}||_1 = {rl.trace_norm(big - pad):.3e}")
