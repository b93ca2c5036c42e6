import argparse
from pathlib import Path
from typing import Any

import numpy as np

from app.api.commands import Subparsers, load_document
from app.api.exceptions import MalformedInputError
from app.api.models import RunConfig, TrajectoryDocument, TrajectoryMode
from app.api.tools.json_formatter import braid_output, event_word_output, pairs_output, vector_output, word_output
from app.custom_logging import get_logger
from app.engine.braids import comb, is_pure, linking_numbers, modulo_center
from app.engine.pipeline import planar_outcome
from app.engine.spherical import spherical_reduce
from app.engine.tracker import Trajectory, braid_word

logger = get_logger(__name__)

SVG_SIZE = 400
SVG_COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


def trajectory_svg(tr: Trajectory) -> str:
    """Static plot of planar point paths, one polyline per point."""
    lo = tr.points.min(axis=(0, 1))
    span = float(np.max(tr.points.max(axis=(0, 1)) - lo)) or 1.0
    scale = (SVG_SIZE - 20) / span
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}">']
    for i in range(tr.n):
        xy = (tr.points[:, i] - lo) * scale + 10
        path = " ".join(f"{x:.2f},{SVG_SIZE - y:.2f}" for x, y in xy)
        color = SVG_COLORS[i % len(SVG_COLORS)]
        lines.append(f'  <polyline points="{path}" fill="none" stroke="{color}"/>')
        x0, y0 = xy[0]
        lines.append(f'  <text x="{x0:.2f}" y="{SVG_SIZE - y0:.2f}" fill="{color}">{i + 1}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def planar_trajectory(document: TrajectoryDocument) -> Trajectory:
    tr = Trajectory.from_document(document)
    if tr.mode is TrajectoryMode.SPHERE:
        return spherical_reduce(tr)
    return tr


def emit_document(tr: Trajectory, emit: str) -> dict[str, Any]:
    if emit != "braid":
        outcome = planar_outcome(emit, tr)
        if outcome.events is None:
            raise MalformedInputError(outcome.skipped_reason or "too few points", emit=emit, n=tr.n)
        return {**event_word_output(outcome.events), "abelianization": vector_output(outcome.invariant)}
    extraction = braid_word(tr)
    document: dict[str, Any] = {"braid": braid_output(extraction)}
    if is_pure(extraction.word):
        combed = comb(extraction.word)
        numbers = linking_numbers(combed)
        document["combed"] = word_output(combed)
        document["linking_numbers"] = pairs_output(extraction.point_linking_numbers(numbers))
        document["linking_numbers_modulo_center"] = pairs_output(
            extraction.point_linking_numbers(modulo_center(numbers))
        )
    return document


def track(args: argparse.Namespace) -> dict[str, Any]:
    config = RunConfig(command="track", input=args.input, emit=args.emit)
    document = load_document(config.input)  # type: ignore[arg-type]
    if not isinstance(document, TrajectoryDocument):
        raise MalformedInputError("track needs a trajectory document", path=str(config.input))
    tr = planar_trajectory(document)
    if args.svg is not None:
        args.svg.write_text(trajectory_svg(tr))
        logger.info("wrote %s", args.svg)
    return {"mode": str(document.mode), "n": tr.n, "emit": config.emit, **emit_document(tr, config.emit or "braid")}


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser("track", help="words emitted by a trajectory of points")
    parser.add_argument("--input", type=Path, required=True)
    parser.add_argument("--emit", choices=["braid", "g3", "g4", "gamma4"], default="braid")
    parser.add_argument("--svg", type=Path, default=None, help="also write a static SVG of the planar paths")
    parser.set_defaults(handler=track)
