"""Loops of hyperplane arrangements in CP^{m+1} and their descent to points on the Riemann sphere.

A hyperplane is a complex covector up to scale. The restriction to hyperplane i
is realized by central projection from a fixed point p off it: every other
covector is corrected to vanish on p and read on the quotient by p, in the
coordinates left after dropping the coordinate where p is largest.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Self

import numpy as np
import numpy.typing as npt

from app.api.exceptions import MalformedInputError, ModuliValidationError, ProjectionPointError
from app.api.models import HyperplaneLoopDocument, TrajectoryMode
from app.custom_logging import get_logger
from app.engine.tracker import Trajectory
from app.settings import settings

ComplexArray = npt.NDArray[np.complex128]

logger = get_logger(__name__)


def projective_distance(a: ComplexArray, b: ComplexArray) -> npt.NDArray[np.float64]:
    """Sine of the Fubini-Study angle between the lines spanned by a and b (last axis).

    Taken as the residual of a after projecting onto b, both normalized, so it stays accurate near 0.
    """
    a_hat = a / np.linalg.norm(a, axis=-1, keepdims=True)
    b_hat = b / np.linalg.norm(b, axis=-1, keepdims=True)
    overlap = np.sum(a_hat * np.conj(b_hat), axis=-1, keepdims=True)
    return np.linalg.norm(a_hat - overlap * b_hat, axis=-1)


@dataclass(frozen=True)
class HyperplaneLoop:
    """``covectors`` has shape (n, samples, m+2)."""

    times: npt.NDArray[np.float64]
    covectors: ComplexArray
    loop: bool = True

    @classmethod
    def from_document(cls, document: HyperplaneLoopDocument) -> Self:
        raw = np.asarray(document.covectors, dtype=float)
        return cls(np.asarray(document.times, dtype=float), raw[..., 0] + 1j * raw[..., 1], document.loop)

    @classmethod
    def static(cls, covectors: npt.ArrayLike, samples: int = 2) -> Self:
        fixed = np.asarray(covectors, dtype=complex)
        return cls(np.linspace(0.0, 1.0, samples), np.repeat(fixed[:, None, :], samples, axis=1))

    def to_document(self) -> HyperplaneLoopDocument:
        pairs = np.stack([self.covectors.real, self.covectors.imag], axis=-1)
        return HyperplaneLoopDocument(n=self.n, m=self.m, times=self.times.tolist(), covectors=pairs.tolist(), loop=self.loop)

    @property
    def n(self) -> int:
        return int(self.covectors.shape[0])

    @property
    def m(self) -> int:
        return int(self.covectors.shape[2]) - 2

    @property
    def samples(self) -> int:
        return int(self.covectors.shape[1])

    def check_well_formed(self) -> None:
        norms = np.linalg.norm(self.covectors, axis=-1)
        if np.any(norms == 0):
            h, s = np.argwhere(norms == 0)[0]
            raise MalformedInputError("zero covector", hyperplane=int(h) + 1, time=float(self.times[s]))
        steps = projective_distance(self.covectors[:, 1:], self.covectors[:, :-1])
        if steps.size and float(steps.max()) > settings.max_projective_step:
            h, s = np.unravel_index(int(np.argmax(steps)), steps.shape)
            raise MalformedInputError("step too large", hyperplane=int(h) + 1, time=float(self.times[s + 1]))
        if self.loop:
            gaps = projective_distance(self.covectors[:, -1], self.covectors[:, 0])
            if float(gaps.max()) > settings.closure_tolerance:
                raise MalformedInputError("loop does not close", hyperplane=int(np.argmax(gaps)) + 1)

    def closure_deviation(self) -> float:
        return float(projective_distance(self.covectors[:, -1], self.covectors[:, 0]).max())

    def concatenate(self, other: "HyperplaneLoop") -> "HyperplaneLoop":
        if self.covectors.shape[0] != other.covectors.shape[0] or self.m != other.m:
            raise MalformedInputError("loops differ in shape")
        if float(projective_distance(self.covectors[:, -1], other.covectors[:, 0]).max()) > settings.closure_tolerance:
            raise MalformedInputError("loops do not meet")
        # rescale the second loop so the junction matches exactly
        end, start = self.covectors[:, -1], other.covectors[:, 0]
        scale = np.sum(end * np.conj(start), axis=-1) / np.sum(np.abs(start) ** 2, axis=-1)
        matched = other.covectors * scale[:, None, None]
        first = (self.times - self.times[0]) / (self.times[-1] - self.times[0]) / 2
        second = 0.5 + (other.times - other.times[0]) / (other.times[-1] - other.times[0]) / 2
        return HyperplaneLoop(
            np.concatenate([first, second[1:]]),
            np.concatenate([self.covectors, matched[:, 1:]], axis=1),
            self.loop and other.loop,
        )

    def repeat(self, count: int) -> "HyperplaneLoop":
        result = self
        for _ in range(count - 1):
            result = result.concatenate(self)
        return result


@dataclass(frozen=True)
class Violation:
    time: float
    subset: tuple[int, ...]


@dataclass(frozen=True)
class ModuliCertificate:
    min_margin: float
    violated: Violation | None = None

    @property
    def valid(self) -> bool:
        return self.violated is None


def validate(loop: HyperplaneLoop, tol: float | None = None) -> ModuliCertificate:
    """General position of every m+2 hyperplanes plus pairwise distinctness, at every sample."""
    tol = settings.moduli_tolerance if tol is None else tol
    loop.check_well_formed()
    unit = loop.covectors / np.linalg.norm(loop.covectors, axis=-1, keepdims=True)
    margins: list[tuple[float, float, tuple[int, ...]]] = []

    size = loop.m + 2
    for subset in combinations(range(loop.n), size):
        matrices = np.transpose(unit[list(subset)], (1, 0, 2))
        dets = np.abs(np.linalg.det(matrices))
        s = int(np.argmin(dets))
        margins.append((float(dets[s]), float(loop.times[s]), tuple(h + 1 for h in subset)))
    for a, b in combinations(range(loop.n), 2):
        distances = projective_distance(unit[a], unit[b])
        s = int(np.argmin(distances))
        margins.append((float(distances[s]), float(loop.times[s]), (a + 1, b + 1)))

    if not margins:
        return ModuliCertificate(1.0)
    violations = sorted((time, subset) for margin, time, subset in margins if margin <= tol)
    min_margin = min(margin for margin, _, _ in margins)
    if violations:
        time, subset = violations[0]
        return ModuliCertificate(min_margin, Violation(time, subset))
    return ModuliCertificate(min_margin)


def require_valid(loop: HyperplaneLoop, tol: float | None = None, level: int | None = None) -> ModuliCertificate:
    certificate = validate(loop, tol)
    if certificate.violated is not None:
        raise ModuliValidationError(
            "general position violated", certificate.violated.time, certificate.violated.subset, level
        )
    return certificate


def _index(loop: HyperplaneLoop, i: int) -> int:
    if not 1 <= i <= loop.n:
        raise MalformedInputError("hyperplane index out of range", hyperplane=i, n=loop.n)
    return i - 1


def projection_margin(loop: HyperplaneLoop, i: int, p: ComplexArray) -> float:
    alpha = loop.covectors[_index(loop, i)]
    values = np.abs(alpha @ p) / (np.linalg.norm(alpha, axis=-1) * np.linalg.norm(p))
    return float(values.min())


def choose_projection_point(
    loop: HyperplaneLoop, i: int, rng: np.random.Generator, level: int | None = None
) -> ComplexArray:
    for _ in range(settings.projection_attempts):
        p = rng.standard_normal(loop.m + 2) + 1j * rng.standard_normal(loop.m + 2)
        if projection_margin(loop, i, p) > settings.projection_margin:
            return p
    raise ProjectionPointError(i, settings.projection_attempts, level)


def quotient_coordinate(p: ComplexArray) -> int:
    """The coordinate dropped on the quotient by p."""
    return int(np.argmax(np.abs(p)))


def restrict(loop: HyperplaneLoop, i: int, p: ComplexArray) -> HyperplaneLoop:
    """The n-1 hyperplanes cut on hyperplane i, as a loop in CP^m."""
    index = _index(loop, i)
    if loop.m < 1:
        raise MalformedInputError("nothing to restrict below CP^1")
    if projection_margin(loop, i, p) <= settings.projection_margin:
        raise ModuliValidationError("projection point lies on the hyperplane", subset=(i,))
    alpha_i = loop.covectors[index]
    dropped = quotient_coordinate(p)
    keep = [c for c in range(loop.m + 2) if c != dropped]
    others = [h for h in range(loop.n) if h != index]
    beta = np.empty((len(others), loop.samples, loop.m + 1), dtype=complex)
    for slot, h in enumerate(others):
        beta[slot] = correct(loop.covectors[h], alpha_i, p)[:, keep]
    return HyperplaneLoop(loop.times.copy(), beta, loop.loop)


def correct(alpha_j: ComplexArray, alpha_i: ComplexArray, p: ComplexArray) -> ComplexArray:
    """alpha_j - (alpha_j·p / alpha_i·p) alpha_i, which vanishes on p and on alpha_i ∩ alpha_j."""
    ratio = (alpha_j @ p) / (alpha_i @ p)
    return alpha_j - np.asarray(ratio)[..., None] * alpha_i


def kernel_points(covectors: ComplexArray) -> ComplexArray:
    """[u:v] = [-b2 : b1], the zero of the covector (b1, b2) on CP^1."""
    return np.stack([-covectors[..., 1], covectors[..., 0]], axis=-1)


def riemann_sphere(uv: ComplexArray) -> npt.NDArray[np.float64]:
    u, v = uv[..., 0], uv[..., 1]
    w = u * np.conj(v)
    norm = np.abs(u) ** 2 + np.abs(v) ** 2
    return np.stack([2 * w.real, 2 * w.imag, np.abs(u) ** 2 - np.abs(v) ** 2], axis=-1) / norm[..., None]


def base_points(loop: HyperplaneLoop, i: int, p: ComplexArray) -> Trajectory:
    if loop.m != 1:
        raise MalformedInputError("base points need lines in CP^2", m=loop.m)
    restricted = restrict(loop, i, p)
    sphere = riemann_sphere(kernel_points(restricted.covectors))
    points = np.transpose(sphere, (1, 0, 2))
    for a, b in combinations(range(points.shape[1]), 2):
        chords = np.linalg.norm(points[:, a] - points[:, b], axis=-1)
        s = int(np.argmin(chords))
        if chords[s] <= settings.projection_margin:
            raise ModuliValidationError("coincident base points", float(loop.times[s]), (a + 1, b + 1))
    return Trajectory(loop.times.copy(), points, TrajectoryMode.SPHERE, loop.loop)


def intersection_oracle(loop: HyperplaneLoop, i: int, j: int, p: ComplexArray) -> ComplexArray:
    """The point where lines i and j meet, via the cross product, read on the quotient by p."""
    x = np.cross(loop.covectors[_index(loop, i)], loop.covectors[_index(loop, j)])
    dropped = quotient_coordinate(p)
    reduced = x - (x[:, dropped] / p[dropped])[:, None] * p
    return np.delete(reduced, dropped, axis=-1)


def oracle_deviation(loop: HyperplaneLoop, i: int, p: ComplexArray) -> float:
    """Largest projective disagreement between restrict-then-kernel and the cross-product oracle."""
    restricted = kernel_points(restrict(loop, i, p).covectors)
    others = [h + 1 for h in range(loop.n) if h + 1 != i]
    worst = 0.0
    for slot, j in enumerate(others):
        worst = max(worst, float(projective_distance(restricted[slot], intersection_oracle(loop, i, j, p)).max()))
    return worst


@dataclass(frozen=True)
class DescentLevel:
    level: int
    n: int
    m: int
    hyperplane: int
    min_margin: float
    projection_point: list[complex]


@dataclass(frozen=True)
class Descent:
    trajectory: Trajectory
    levels: list[DescentLevel] = field(default_factory=list)


def descend(loop: HyperplaneLoop, route: list[int], seed: int | None = None, tol: float | None = None) -> Descent:
    """Restricts along ``route`` down to lines in CP^2, then takes base points on the sphere.

    Route entries index hyperplanes in the numbering of the level they apply to.
    """
    if len(route) != loop.m:
        raise MalformedInputError("route length must equal m", route=list(route), m=loop.m)
    rng = np.random.default_rng(settings.projection_seed if seed is None else seed)
    levels = []
    current = loop
    for level, i in enumerate(route):
        certificate = require_valid(current, tol, level)
        p = choose_projection_point(current, i, rng, level)
        levels.append(DescentLevel(level, current.n, current.m, i, certificate.min_margin, p.tolist()))
        logger.info("level %d: n=%d m=%d restrict on %d (margin %.3g)", level, current.n, current.m, i, certificate.min_margin)
        if current.m == 1:
            return Descent(base_points(current, i, p), levels)
        current = restrict(current, i, p)
    msg = "unreachable: route exhausted above CP^2"
    raise AssertionError(msg)
