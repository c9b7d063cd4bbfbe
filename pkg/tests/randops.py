"""Shared random generators for the test suite.

Operators are scaled so the operator norm stays O(scale): complex Gaussian
entries of variance 1/(4n) give spectral norm about 1, which keeps
characteristic polynomial coefficients at desk scale where the absolute
tolerances of the suite are meaningful.
"""

import numpy as np

from rlspec import RealLinearOperator


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_operator(rng, n, scale=1.0):
    div = 2.0 * np.sqrt(2.0 * n) / scale
    return RealLinearOperator(crandn(rng, n, n) / div, crandn(rng, n, n) / div)


def random_antilinear(rng, n, scale=1.0):
    div = 2.0 * np.sqrt(2.0 * n) / scale
    return RealLinearOperator(np.zeros((n, n), dtype=complex), crandn(rng, n, n) / div)


def random_unit_vector(rng, n):
    v = crandn(rng, n)
    return v / np.linalg.norm(v)


def op_maxdiff(R1, R2):
    return max(
        float(np.max(np.abs(R1.C - R2.C))),
        float(np.max(np.abs(R1.B - R2.B))),
    )
