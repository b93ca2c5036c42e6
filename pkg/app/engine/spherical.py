"""Reduction of spherical loops of n points to planar loops of n-1 points.

At every sample the last point is carried to the north pole by the smallest
rotation doing so, then the other points are projected stereographically from
the pole. Any other choice of rotation family differs by turns about the polar
axis, which only changes the planar braid by full twists.
"""

import numpy as np

from app.api.exceptions import MalformedInputError, ProjectionSingularityError
from app.api.models import TrajectoryMode
from app.engine.predicates import FloatArray
from app.engine.tracker import Trajectory
from app.settings import settings

NORTH = np.array([0.0, 0.0, 1.0])


def rotation_to_pole(v: FloatArray, t: float, point: int) -> FloatArray:
    """Rodrigues rotation taking the unit vector v to the north pole along the great circle."""
    c = float(v @ NORTH)
    if c < -1 + settings.antipode_tolerance:
        raise ProjectionSingularityError("pinned point at the south pole", t, point)
    axis = np.cross(v, NORTH)
    k = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return np.eye(3) + k + (k @ k) / (1 + c)


def stereographic(points: FloatArray) -> FloatArray:
    """Projection from the north pole onto the equatorial plane."""
    scale = 1 - points[..., 2]
    return points[..., :2] / scale[..., None]


def inverse_stereographic(points: FloatArray) -> FloatArray:
    x, y = points[..., 0], points[..., 1]
    r2 = x * x + y * y
    return np.stack([2 * x, 2 * y, r2 - 1], axis=-1) / (r2 + 1)[..., None]


def spherical_reduce(tr: Trajectory, refinements: int | None = None) -> Trajectory:
    """Planar loop of the first n-1 points with the last one pinned at the pole.

    The planar samples are joined by straight segments, while the spherical
    path between two samples is a great-circle arc whose image bends under the
    rotation and the projection. The planar braid equals the spherical one only
    when no such bend carries a point across another strand between samples.
    Each refinement inserts the great-circle midpoints before projecting.
    """
    if tr.mode is not TrajectoryMode.SPHERE:
        raise MalformedInputError("spherical reduction needs a spherical trajectory")
    for _ in range(settings.spherical_refinements if refinements is None else refinements):
        tr = tr.refine()
    planar = np.empty((tr.samples, tr.n - 1, 2))
    for s in range(tr.samples):
        t = float(tr.times[s])
        rotation = rotation_to_pole(tr.points[s, -1], t, tr.n)
        rotated = tr.points[s, :-1] @ rotation.T
        near_pole = np.flatnonzero(rotated[:, 2] > 1 - settings.pole_tolerance)
        if len(near_pole):
            raise ProjectionSingularityError("point reaches the projection pole", t, int(near_pole[0]) + 1)
        planar[s] = stereographic(rotated)
    return Trajectory(tr.times.copy(), planar, TrajectoryMode.PLANE, tr.loop)
