"""Slow, exact reference paths used by tests and as small-N fallbacks.

Everything here trades speed for transparency: barycentric weights by the
defining product, Lagrange bases expanded into monomials, Green-matrix
entries by direct piecewise integration of polynomials, and the DCT as a
literal cosine sum.  Monomial expansion destroys double-precision accuracy
as the degree grows, so the oracles refuse degrees where they would stop
being trustworthy.
"""

import numpy as np
from numpy.polynomial import polynomial as P

from .core import cheb_grid
from .green import GreenMatrix

__all__ = [
    "barycentric_weights_general",
    "lagrange_monomial_coeffs",
    "green_matrix_dense_oracle",
    "dct1_naive",
]

_MAX_GENERAL_POINTS = 40  # product magnitudes leave the safe range beyond this
_MAX_MONOMIAL_DEGREE = 12
_MAX_GREEN_DEGREE = 10


def barycentric_weights_general(points):
    """Barycentric weights of arbitrary distinct points by the defining product."""
    x = np.asarray(points, dtype=np.float64)
    if x.ndim != 1 or x.size < 2:
        raise ValueError("need at least two points")
    if x.size > _MAX_GENERAL_POINTS:
        raise ValueError(f"product formula limited to {_MAX_GENERAL_POINTS} points")
    d = x[:, None] - x[None, :]
    np.fill_diagonal(d, 1.0)
    if np.any(d == 0.0):
        raise ValueError("points must be pairwise distinct")
    return 1.0 / d.prod(axis=1)


def lagrange_monomial_coeffs(i, grid):
    """Monomial coefficients (ascending) of the i-th Lagrange basis polynomial."""
    N = grid.degree
    if N > _MAX_MONOMIAL_DEGREE:
        raise ValueError(f"monomial expansion limited to degree {_MAX_MONOMIAL_DEGREE}")
    if not 0 <= i <= N:
        raise ValueError(f"basis index {i} out of range for degree {N}")
    roots = np.delete(grid.points, i)
    numer = P.polyfromroots(roots)
    denom = np.prod(grid.points[i] - roots)
    return numer / denom


def _poly_integral(coeffs, a, b):
    # exact integral of an ascending-coefficient polynomial over [a, b]
    k = np.arange(1, coeffs.size + 1)
    return float(np.sum(coeffs * (b**k - a**k) / k))


def green_matrix_dense_oracle(N):
    """Green matrix by direct piecewise integration in the monomial basis.

    Entry (k, i) splits the integral of the kernel against l_i at x_k and
    integrates each polynomial piece exactly.  Boundary rows are zero by the
    kernel's boundary values and are written as exact zeros.
    """
    if N < 1:
        raise ValueError("grid degree must be >= 1")
    if N > _MAX_GREEN_DEGREE:
        raise ValueError(f"dense oracle limited to degree {_MAX_GREEN_DEGREE}")
    grid = cheb_grid(N)
    x = grid.points
    G = np.zeros((N + 1, N + 1))
    for i in range(N + 1):
        li = lagrange_monomial_coeffs(i, grid)
        below = P.polymul([1.0, 1.0], li)  # (xi + 1) l_i, for xi <= x_k
        above = P.polymul([-1.0, 1.0], li)  # (xi - 1) l_i, for xi >= x_k
        for k in range(1, N):
            G[k, i] = 0.5 * (x[k] - 1.0) * _poly_integral(below, -1.0, x[k]) + 0.5 * (
                x[k] + 1.0
            ) * _poly_integral(above, x[k], 1.0)
    return GreenMatrix(N, G)


def dct1_naive(v):
    """Direct O(n^2) cosine-sum DCT-I; the cross-check for the FFT path."""
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1 or v.size < 2:
        raise ValueError("need a 1-d vector with at least two entries")
    n = v.size
    w = v.copy()
    w[0] *= 0.5
    w[-1] *= 0.5
    jk = np.outer(np.arange(n), np.arange(n))
    return np.sqrt(2.0 / (n - 1)) * (np.cos(np.pi * jk / (n - 1)) @ w)
