from collections.abc import Sequence
from typing import Any, TypedDict

import orjson

from app.engine.braids import LinkingNumbers
from app.engine.gf2 import F2Vector
from app.engine.moduli import DescentLevel, ModuliCertificate
from app.engine.notation import format_letter, format_word
from app.engine.pipeline import HomOutcome, PipelineReport, PlanarOutcome
from app.engine.tracker import BraidExtraction, Event, EventWord
from app.engine.words import GroupWord

OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_APPEND_NEWLINE | orjson.OPT_SERIALIZE_NUMPY


class EventOutput(TypedDict):
    t: float
    kind: str
    participants: list[int]
    letter: str | None


class WordOutput(TypedDict):
    alphabet: str
    word: list[str]
    length: int


class HomOutput(TypedDict):
    kind: str
    word: WordOutput | None
    abelianization: list[int] | None
    skipped_factors: int
    skipped_reason: str | None


class LevelOutput(TypedDict):
    level: int
    n: int
    m: int
    hyperplane: int
    min_margin: float
    projection_point: list[list[float]]


def dumps(document: Any) -> bytes:
    return orjson.dumps(document, option=OPTIONS)


def word_output(w: GroupWord) -> WordOutput:
    return {"alphabet": str(w.alphabet), "word": format_word(w), "length": len(w)}


def vector_output(v: F2Vector | None) -> list[int] | None:
    return None if v is None else v.to_list()


def pairs_output(numbers: LinkingNumbers) -> dict[str, int]:
    return {f"{i},{j}": value for (i, j), value in numbers.items()}


def event_output(event: Event, w: GroupWord) -> EventOutput:
    letter = None
    if event.letter is not None:
        letter = format_letter(event.letter, w.alphabet)
    return {"t": event.t, "kind": str(event.kind), "participants": list(event.participants), "letter": letter}


def event_word_output(events: EventWord) -> dict[str, Any]:
    return {**word_output(events.word), "events": [event_output(e, events.word) for e in events.events]}


def braid_output(extraction: BraidExtraction) -> dict[str, Any]:
    return {
        **word_output(extraction.word),
        "strand_labels": list(extraction.strand_labels),
        "axis_angle": extraction.axis_angle,
        "events": [event_output(e, extraction.word) for e in extraction.events],
    }


def hom_output(outcome: HomOutcome) -> HomOutput:
    return {
        "kind": str(outcome.kind),
        "word": None if outcome.word is None else word_output(outcome.word),
        "abelianization": vector_output(outcome.invariant),
        "skipped_factors": outcome.skipped_factors,
        "skipped_reason": outcome.skipped_reason,
    }


def planar_output(outcome: PlanarOutcome) -> dict[str, Any]:
    return {
        "target": outcome.target,
        "word": None if outcome.events is None else event_word_output(outcome.events),
        "abelianization": vector_output(outcome.invariant),
        "skipped_reason": outcome.skipped_reason,
    }


def complex_pairs(values: Sequence[complex]) -> list[list[float]]:
    return [[float(complex(z).real), float(complex(z).imag)] for z in values]


def level_output(level: DescentLevel) -> LevelOutput:
    return {
        "level": level.level,
        "n": level.n,
        "m": level.m,
        "hyperplane": level.hyperplane,
        "min_margin": level.min_margin,
        "projection_point": complex_pairs(level.projection_point),
    }


def certificate_output(certificate: ModuliCertificate) -> dict[str, Any]:
    violated = None
    if certificate.violated is not None:
        violated = {"time": certificate.violated.time, "subset": list(certificate.violated.subset)}
    return {"valid": certificate.valid, "min_margin": certificate.min_margin, "violated": violated}


def report_output(report: PipelineReport) -> dict[str, Any]:
    return {
        "source": report.source,
        "seed": report.seed,
        "tolerances": dict(report.tolerances),
        "route": list(report.route),
        "levels": [level_output(level) for level in report.levels],
        "closure_deviation": report.closure_deviation,
        "labels": list(report.labels),
        "braid": braid_output(report.braid),
        "combed": word_output(report.combed),
        "linking_numbers": pairs_output(report.linking_numbers),
        "linking_numbers_modulo_center": pairs_output(report.linking_numbers_modulo_center),
        "homs": [hom_output(h) for h in report.homs],
        "planar": [planar_output(p) for p in report.planar],
    }
