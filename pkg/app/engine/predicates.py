"""Orientation and lifted incircle determinants, vectorized over leading axes.

Both are polynomial in the coordinates: along a linear motion orient2d has
degree 2 in time and incircle degree 4.
"""

from math import comb

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]

ORIENT_DEGREE = 2
INCIRCLE_DEGREE = 4


def orient2d(a: FloatArray, b: FloatArray, c: FloatArray) -> FloatArray:
    """Twice the signed area of abc; positive for counter-clockwise order."""
    return (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0])


def incircle(a: FloatArray, b: FloatArray, c: FloatArray, d: FloatArray) -> FloatArray:
    """Positive when d lies inside the circle through a, b, c taken counter-clockwise."""
    adx, ady = a[..., 0] - d[..., 0], a[..., 1] - d[..., 1]
    bdx, bdy = b[..., 0] - d[..., 0], b[..., 1] - d[..., 1]
    cdx, cdy = c[..., 0] - d[..., 0], c[..., 1] - d[..., 1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady)


def evaluate(points: FloatArray, tuples: npt.NDArray[np.int_]) -> FloatArray:
    """Predicate of every index tuple; ``points`` has shape (..., n, 2), ``tuples`` (M, 3) or (M, 4)."""
    gathered = points[..., tuples, :]
    if tuples.shape[1] == 3:
        return orient2d(gathered[..., 0, :], gathered[..., 1, :], gathered[..., 2, :])
    return incircle(gathered[..., 0, :], gathered[..., 1, :], gathered[..., 2, :], gathered[..., 3, :])


def degree_of(tuples: npt.NDArray[np.int_]) -> int:
    return ORIENT_DEGREE if tuples.shape[1] == 3 else INCIRCLE_DEGREE


def bernstein_matrix(degree: int) -> FloatArray:
    """Maps power-basis coefficients on [0, 1] to Bernstein coefficients."""
    matrix = np.zeros((degree + 1, degree + 1))
    for k in range(degree + 1):
        for i in range(k + 1):
            matrix[k, i] = comb(k, i) / comb(degree, i)
    return matrix


def circumcircle(a: FloatArray, b: FloatArray, c: FloatArray) -> tuple[FloatArray, float]:
    d = 2 * float(orient2d(a, b, c))
    a2, b2, c2 = a @ a, b @ b, c @ c
    ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    center = np.array([ux, uy])
    return center, float(np.linalg.norm(a - center))
