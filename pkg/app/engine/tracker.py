"""Turns sampled motions of labelled points into group words.

Between samples every point moves linearly (planar mode) or along a great
circle (spherical mode). A codimension-one event is a sign change of a
predicate along that motion; events are located on the predicate polynomial
and refined by bisection. Degenerate situations raise ``GenericityError``.
"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import combinations
from math import pi
from typing import Self

import numpy as np
from numpy.polynomial import polynomial

from app.api.exceptions import GenericityError, MalformedInputError
from app.api.models import TrajectoryDocument, TrajectoryMode
from app.custom_logging import get_logger
from app.engine.braids import LinkingNumbers, sigma_alphabet
from app.engine.gamma import canonicalize, gamma_alphabet
from app.engine.gnk import gnk_alphabet
from app.engine.predicates import FloatArray, bernstein_matrix, circumcircle, degree_of, evaluate, orient2d
from app.engine.words import Alphabet, GroupWord, Letter
from app.settings import settings

ROOT_IMAGINARY_TOLERANCE = 1e-9


class EventKind(StrEnum):
    COLLINEAR3 = "collinear3"
    COCIRCULAR4 = "cocircular4"
    DELAUNAY_FLIP4 = "delaunay_flip4"
    STRAND_SWAP = "strand_swap"


@dataclass(frozen=True)
class Event:
    t: float
    kind: EventKind
    participants: tuple[int, ...]
    letter: Letter | None


@dataclass(frozen=True)
class EventWord:
    word: GroupWord
    events: tuple[Event, ...] = ()


@dataclass(frozen=True)
class BraidExtraction:
    word: GroupWord
    strand_labels: tuple[int, ...]
    axis_angle: float
    events: tuple[Event, ...] = ()

    def point_linking_numbers(self, numbers: LinkingNumbers) -> LinkingNumbers:
        """Re-keys linking numbers of strand positions at t=0 by point labels."""
        relabelled: LinkingNumbers = {}
        for (p, q), value in numbers.items():
            a, b = self.strand_labels[p - 1], self.strand_labels[q - 1]
            relabelled[(min(a, b), max(a, b))] = value
        return dict(sorted(relabelled.items()))


def _great_circle(a: FloatArray, b: FloatArray, u: float | FloatArray) -> FloatArray:
    u = np.asarray(u, dtype=float)[..., None, None] if np.ndim(u) else np.asarray(u)
    mixed = (1 - u) * a + u * b
    return mixed / np.linalg.norm(mixed, axis=-1, keepdims=True)


@dataclass(frozen=True)
class Trajectory:
    """``points`` has shape (samples, n, 2) in planar mode and (samples, n, 3) on the unit sphere."""

    times: FloatArray
    points: FloatArray
    mode: TrajectoryMode = TrajectoryMode.PLANE
    loop: bool = False

    @classmethod
    def from_document(cls, document: TrajectoryDocument) -> Self:
        points = np.asarray(document.points, dtype=float)
        if document.mode is TrajectoryMode.SPHERE:
            points = points / np.linalg.norm(points, axis=-1, keepdims=True)
        return cls(np.asarray(document.times, dtype=float), points, document.mode, document.loop)

    @classmethod
    def static(cls, positions: FloatArray, mode: TrajectoryMode = TrajectoryMode.PLANE) -> Self:
        positions = np.asarray(positions, dtype=float)
        return cls(np.array([0.0, 1.0]), np.stack([positions, positions]), mode, loop=True)

    def to_document(self) -> TrajectoryDocument:
        return TrajectoryDocument(
            mode=self.mode, n=self.n, times=self.times.tolist(), points=self.points.tolist(), loop=self.loop
        )

    @property
    def n(self) -> int:
        return int(self.points.shape[1])

    @property
    def samples(self) -> int:
        return int(self.points.shape[0])

    def segment(self, s: int, u: float | FloatArray) -> FloatArray:
        a, b = self.points[s], self.points[s + 1]
        if self.mode is TrajectoryMode.SPHERE:
            return _great_circle(a, b, u)
        u_arr = np.asarray(u, dtype=float)
        if u_arr.ndim:
            u_arr = u_arr[:, None, None]
        return a + u_arr * (b - a)

    def at(self, t: float) -> FloatArray:
        s = int(np.clip(np.searchsorted(self.times, t, side="right") - 1, 0, self.samples - 2))
        u = (t - self.times[s]) / (self.times[s + 1] - self.times[s])
        return self.segment(s, float(np.clip(u, 0.0, 1.0)))

    def time_of(self, s: int, u: float) -> float:
        return float(self.times[s] + u * (self.times[s + 1] - self.times[s]))

    def reverse(self) -> "Trajectory":
        times = self.times[0] + self.times[-1] - self.times[::-1]
        return Trajectory(times, self.points[::-1].copy(), self.mode, self.loop)

    def refine(self) -> "Trajectory":
        """Inserts the midpoint of every segment."""
        mids = np.stack([self.segment(s, 0.5) for s in range(self.samples - 1)])
        points = np.empty((2 * self.samples - 1, *self.points.shape[1:]))
        points[0::2] = self.points
        points[1::2] = mids
        times = np.empty(2 * self.samples - 1)
        times[0::2] = self.times
        times[1::2] = (self.times[:-1] + self.times[1:]) / 2
        return Trajectory(times, points, self.mode, self.loop)

    def concatenate(self, other: "Trajectory") -> "Trajectory":
        if self.mode != other.mode or self.n != other.n:
            raise MalformedInputError("trajectories differ in mode or point count")
        if np.max(np.abs(self.points[-1] - other.points[0])) > settings.closure_tolerance:
            raise MalformedInputError("trajectories do not meet")
        first = (self.times - self.times[0]) / (self.times[-1] - self.times[0]) / 2
        second = 0.5 + (other.times - other.times[0]) / (other.times[-1] - other.times[0]) / 2
        times = np.concatenate([first, second[1:]])
        points = np.concatenate([self.points, other.points[1:]])
        return Trajectory(times, points, self.mode, self.loop and other.loop)

    def repeat(self, count: int) -> "Trajectory":
        result = self
        for _ in range(count - 1):
            result = result.concatenate(self)
        return result

    def perturb(self, magnitude: float, seed: int) -> "Trajectory":
        rng = np.random.default_rng(seed)
        points = self.points + magnitude * rng.standard_normal(self.points.shape)
        if self.loop:
            points[-1] = points[0]
        if self.mode is TrajectoryMode.SPHERE:
            points = points / np.linalg.norm(points, axis=-1, keepdims=True)
        return Trajectory(self.times.copy(), points, self.mode, self.loop)

    def check(self) -> None:
        if self.loop and np.max(np.abs(self.points[-1] - self.points[0])) > settings.closure_tolerance:
            raise GenericityError("loop does not close", float(self.times[-1]))
        for s in range(self.samples):
            for i, j in combinations(range(self.n), 2):
                if np.linalg.norm(self.points[s, i] - self.points[s, j]) < settings.coincidence_tolerance:
                    raise GenericityError("coincident points", float(self.times[s]), (i + 1, j + 1))


@dataclass
class _Crossing:
    t: float
    s: int
    u: float
    tuple_index: int


@dataclass
class EventScanner:
    """Finds sign changes of orient2d (triples) or incircle (quadruples) along a planar trajectory."""

    trajectory: Trajectory
    size: int
    tuples: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        self.logger = get_logger(self.__class__.__name__)
        if self.trajectory.mode is not TrajectoryMode.PLANE:
            raise MalformedInputError("event extraction needs a planar trajectory")
        self.trajectory.check()
        self.tuples = np.array(list(combinations(range(self.trajectory.n), self.size)), dtype=int).reshape(-1, self.size)

    def predicate(self, s: int, m: int, u: float) -> float:
        return float(evaluate(self.trajectory.segment(s, u), self.tuples[m : m + 1])[0])

    def _check_samples(self) -> None:
        values = evaluate(self.trajectory.points, self.tuples)
        bad = np.argwhere(np.abs(values) <= settings.sample_zero_tolerance)
        if len(bad):
            s, m = bad[0]
            raise GenericityError("degenerate predicate at a sample", float(self.trajectory.times[s]), self._labels(m))

    def _labels(self, m: int) -> tuple[int, ...]:
        return tuple(int(x) + 1 for x in self.tuples[m])

    def _bisect(self, s: int, m: int, lo: float, hi: float) -> float:
        sign_lo = np.sign(self.predicate(s, m, lo))
        for _ in range(settings.event_bisections):
            mid = (lo + hi) / 2
            if np.sign(self.predicate(s, m, mid)) == sign_lo:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2

    def _segment_crossings(self, s: int, degree: int, to_bernstein: FloatArray) -> Iterator[_Crossing]:
        nodes = np.linspace(0.0, 1.0, degree + 1)
        values = evaluate(self.trajectory.segment(s, nodes), self.tuples)
        coefficients = polynomial.polyfit(nodes, values, degree)
        bernstein = to_bernstein @ coefficients
        candidates = np.flatnonzero(~(np.all(bernstein > 0, axis=0) | np.all(bernstein < 0, axis=0)))
        for m in candidates:
            roots = polynomial.polyroots(coefficients[:, m])
            real = sorted(
                float(r.real) for r in np.atleast_1d(roots) if abs(r.imag) < ROOT_IMAGINARY_TOLERANCE and 0 < r.real < 1
            )
            if not real:
                continue
            cuts = [0.0, *real, 1.0]
            mids = [(a + b) / 2 for a, b in zip(cuts, cuts[1:], strict=False)]
            signs = [np.sign(self.predicate(s, int(m), u)) for u in mids]
            for r, (left, right), (mid_left, mid_right) in zip(
                real, zip(signs, signs[1:], strict=False), zip(mids, mids[1:], strict=False), strict=False
            ):
                if left == right:
                    t = self.trajectory.time_of(s, r)
                    raise GenericityError("tangential contact", t, self._labels(int(m)))
                u = self._bisect(s, int(m), mid_left, mid_right)
                yield _Crossing(self.trajectory.time_of(s, u), s, u, int(m))

    def crossings(self) -> list[_Crossing]:
        self._check_samples()
        degree = degree_of(self.tuples)
        to_bernstein = bernstein_matrix(degree)
        found: list[_Crossing] = []
        for s in range(self.trajectory.samples - 1):
            found.extend(self._segment_crossings(s, degree, to_bernstein))
        found.sort(key=lambda c: (c.t, tuple(self.tuples[c.tuple_index])))
        for a, b in zip(found, found[1:], strict=False):
            if b.t - a.t < settings.event_resolution:
                raise GenericityError("simultaneous events", b.t, self._labels(a.tuple_index) + self._labels(b.tuple_index))
        self.logger.debug("%d crossings of %d-point predicates", len(found), self.size)
        return found


def _event_word(alphabet: Alphabet, events: list[Event]) -> EventWord:
    letters = tuple(e.letter for e in events if e.letter is not None)
    return EventWord(GroupWord(alphabet, letters), tuple(events))


def g3_word(tr: Trajectory) -> EventWord:
    scanner = EventScanner(tr, 3)
    events = []
    for c in scanner.crossings():
        labels = scanner._labels(c.tuple_index)  # noqa: SLF001
        events.append(Event(c.t, EventKind.COLLINEAR3, labels, Letter(labels)))
    return _event_word(gnk_alphabet(tr.n, 3), events)


def g4_word(tr: Trajectory) -> EventWord:
    scanner = EventScanner(tr, 4)
    events = []
    for c in scanner.crossings():
        labels = scanner._labels(c.tuple_index)  # noqa: SLF001
        events.append(Event(c.t, EventKind.COCIRCULAR4, labels, Letter(labels)))
    return _event_word(gnk_alphabet(tr.n, 4), events)


def flip_generator(positions: FloatArray, quad: tuple[int, ...], t: float) -> tuple[int, int, int, int] | None:
    """The Delaunay flip letter of a cocircular quadruple, or None when another point lies inside the circle."""
    indices = [q - 1 for q in quad]
    triples = list(combinations(indices, 3))
    best = max(triples, key=lambda tri: abs(float(orient2d(*(positions[i] for i in tri)))))
    center, radius = circumcircle(*(positions[i] for i in best))
    inside = False
    for other in range(len(positions)):
        if other in indices:
            continue
        distance = float(np.linalg.norm(positions[other] - center))
        if abs(distance - radius) <= settings.delaunay_tolerance * radius:
            raise GenericityError("fifth point on the circumcircle", t, (*quad, other + 1))
        if distance < radius:
            inside = True
    if inside:
        return None
    angles = {q: float(np.arctan2(*(positions[q - 1] - center)[::-1])) for q in quad}
    cycle = sorted(quad, key=lambda q: angles[q])
    return canonicalize(cycle)


def gamma4_word(tr: Trajectory) -> EventWord:
    scanner = EventScanner(tr, 4)
    events = []
    for c in scanner.crossings():
        labels = scanner._labels(c.tuple_index)  # noqa: SLF001
        generator = flip_generator(tr.segment(c.s, c.u), labels, c.t)
        kind = EventKind.DELAUNAY_FLIP4 if generator is not None else EventKind.COCIRCULAR4
        events.append(Event(c.t, kind, labels, Letter(generator) if generator is not None else None))
    return _event_word(gamma_alphabet(tr.n), events)


# braid extraction


def _axis_swaps(tr: Trajectory, angle: float) -> tuple[tuple[int, ...], list[Event]]:
    direction = np.array([np.cos(angle), np.sin(angle)])
    normal = np.array([-np.sin(angle), np.cos(angle)])
    x = tr.points @ direction
    y = tr.points @ normal
    resolution = settings.event_resolution

    for s in (0, tr.samples - 1):
        ordered = np.sort(x[s])
        if np.any(np.diff(ordered) < settings.coincidence_tolerance):
            raise GenericityError("shared projection coordinate at an endpoint", float(tr.times[s]))

    swaps: list[tuple[float, int, int, float]] = []
    for s in range(tr.samples - 1):
        for i, j in combinations(range(tr.n), 2):
            d0 = x[s, i] - x[s, j]
            d1 = x[s + 1, i] - x[s + 1, j]
            if d0 == 0 and s > 0:
                raise GenericityError("projection tie at a sample", float(tr.times[s]), (i + 1, j + 1))
            if d0 * d1 < 0:
                u = d0 / (d0 - d1)
                t = tr.time_of(s, u)
                dy = (1 - u) * (y[s, i] - y[s, j]) + u * (y[s + 1, i] - y[s + 1, j])
                if abs(dy) < settings.coincidence_tolerance:
                    raise GenericityError("collision during a swap", t, (i + 1, j + 1))
                swaps.append((t, i, j, dy))
    swaps.sort()
    for a, b in zip(swaps, swaps[1:], strict=False):
        if b[0] - a[0] < resolution:
            raise GenericityError("simultaneous swaps", b[0], (a[1] + 1, a[2] + 1, b[1] + 1, b[2] + 1))

    order = [int(p) for p in np.argsort(x[0])]
    labels = tuple(p + 1 for p in order)
    events = []
    for t, i, j, dy in swaps:
        pi_, pj = order.index(i), order.index(j)
        if abs(pi_ - pj) != 1:
            raise GenericityError("non-adjacent swap", t, (i + 1, j + 1))
        left = min(pi_, pj)
        mover = order[left + 1]
        # the point moving left is the right one before the swap; dy is y_i - y_j
        mover_y_higher = dy > 0 if mover == i else dy < 0
        exponent = 1 if mover_y_higher else -1
        events.append(Event(t, EventKind.STRAND_SWAP, (order[left] + 1, mover + 1), Letter(left + 1, exponent)))
        order[left], order[left + 1] = order[left + 1], order[left]
    return labels, events


def braid_word(tr: Trajectory) -> BraidExtraction:
    if tr.mode is not TrajectoryMode.PLANE:
        raise MalformedInputError("braid extraction needs a planar trajectory")
    tr.check()
    logger = get_logger("braid_word")
    error: GenericityError | None = None
    for attempt in range(settings.projection_axis_retries + 1):
        angle = attempt * pi / 17
        try:
            labels, events = _axis_swaps(tr, angle)
        except GenericityError as err:
            logger.warning("projection axis %.4f rejected: %s", angle, err.extra.get("reason"))
            error = err
            continue
        word = GroupWord(sigma_alphabet(tr.n), tuple(e.letter for e in events if e.letter is not None))
        return BraidExtraction(word, labels, angle, tuple(events))
    assert error is not None
    raise error


Extractor = Callable[[Trajectory], EventWord]
EXTRACTORS: dict[str, Extractor] = {"g3": g3_word, "g4": g4_word, "gamma4": gamma4_word}
