"""Hyperplane loops used for demonstrations and as fixed test inputs.

Loops on the moment curve keep every m+2 covectors linearly independent for
free: the determinant is a Vandermonde product, nonzero while the nodes stay
distinct.
"""

from collections.abc import Sequence

import numpy as np

from app.engine.moduli import HyperplaneLoop

DEMO_SAMPLES = 129


def _circle(center: complex, radius: float, samples: int) -> tuple[np.ndarray, np.ndarray]:
    times = np.linspace(0.0, 1.0, samples)
    path = center + radius * np.exp(2j * np.pi * times)
    path[-1] = path[0]
    return times, path


def m4_1_loop(samples: int = DEMO_SAMPLES) -> HyperplaneLoop:
    """Four lines in CP^2: e1, e2, e3 and (1, 1 + e^{2 pi i t}/2, 1)."""
    times, path = _circle(1.0, 0.5, samples)
    covectors = np.zeros((4, samples, 3), dtype=complex)
    for h in range(3):
        covectors[h, :, h] = 1
    covectors[3, :, 0] = 1
    covectors[3, :, 1] = path
    covectors[3, :, 2] = 1
    return HyperplaneLoop(times, covectors)


def moment_covectors(nodes: np.ndarray, m: int) -> np.ndarray:
    """(1, x, x^2, ..., x^{m+1}) for every node, along the last axis."""
    return np.power.outer(nodes, np.arange(m + 2))


def moment_curve_loop(
    nodes: Sequence[complex],
    m: int,
    *,
    moving: int,
    center: complex,
    radius: float,
    samples: int = DEMO_SAMPLES,
) -> HyperplaneLoop:
    """Hyperplanes dual to moment-curve points; node ``moving`` (1-based) runs once around a circle."""
    times, path = _circle(center, radius, samples)
    grid = np.repeat(np.asarray(nodes, dtype=complex)[:, None], samples, axis=1)
    grid[moving - 1] = path
    return HyperplaneLoop(times, moment_covectors(grid, m))


def m5_2_loop(samples: int = DEMO_SAMPLES) -> HyperplaneLoop:
    """Five planes in CP^3; plane 5 circles around the node of plane 4."""
    nodes = [0.0, 1.0, 2.0 + 1.0j, -1.0 + 1.5j, 0.0]
    return moment_curve_loop(nodes, 2, moving=5, center=-1.0 + 1.5j, radius=0.6, samples=samples)


def m6_1_loop(samples: int = DEMO_SAMPLES) -> HyperplaneLoop:
    """Six lines in CP^2; line 6 circles around the nodes of lines 2 and 3."""
    nodes = [0.0, 1.0, 1.5 + 0.5j, -1.0 + 1.0j, 2.0 - 1.5j, 0.0]
    return moment_curve_loop(nodes, 1, moving=6, center=1.2 + 0.2j, radius=0.9, samples=samples)


DEMOS = {"m4_1": m4_1_loop, "m5_2": m5_2_loop, "m6_1": m6_1_loop}
