import argparse
from pathlib import Path
from typing import Any

from app.api.commands import Subparsers, add_run_arguments, load_document, route_argument
from app.api.commands.track import emit_document
from app.api.exceptions import MalformedInputError
from app.api.models import HyperplaneLoopDocument, RunConfig
from app.api.tools.json_formatter import certificate_output, level_output
from app.engine.demos import DEMOS
from app.engine.moduli import HyperplaneLoop, descend, validate
from app.engine.pipeline import default_route, surviving_labels
from app.engine.spherical import spherical_reduce


def load_loop(config: RunConfig, demo: str | None) -> HyperplaneLoop:
    if demo is not None:
        return DEMOS[demo]()
    if config.input is None:
        raise MalformedInputError("either --input or --demo is required")
    document = load_document(config.input)
    if not isinstance(document, HyperplaneLoopDocument):
        raise MalformedInputError("expected a hyperplane loop document", path=str(config.input))
    return HyperplaneLoop.from_document(document)


def _config(args: argparse.Namespace, command: str) -> RunConfig:
    values: dict[str, Any] = {"command": command, "input": args.input, "route": getattr(args, "route", None)}
    if getattr(args, "emit", None) is not None:
        values["emit"] = args.emit
    if args.seed is not None:
        values["seed"] = args.seed
    if args.tol is not None:
        values["tolerance"] = args.tol
    return RunConfig(**values)


def moduli_validate(args: argparse.Namespace) -> dict[str, Any]:
    config = _config(args, "moduli validate")
    loop = load_loop(config, args.demo)
    certificate = validate(loop, config.tolerance)
    return {"n": loop.n, "m": loop.m, "tolerance": config.tolerance, **certificate_output(certificate)}


def moduli_descend(args: argparse.Namespace) -> dict[str, Any]:
    config = _config(args, "moduli descend")
    loop = load_loop(config, args.demo)
    route = default_route(loop) if config.route is None else config.route
    descent = descend(loop, route, config.seed, config.tolerance)
    labels = surviving_labels(loop.n, route)
    document: dict[str, Any] = {
        "n": loop.n,
        "m": loop.m,
        "route": route,
        "seed": config.seed,
        "tolerance": config.tolerance,
        "levels": [level_output(level) for level in descent.levels],
        "labels": labels,
        "trajectory": descent.trajectory.to_document().model_dump(mode="json"),
    }
    if config.emit is not None:
        document["emit"] = config.emit
        document.update(emit_document(spherical_reduce(descent.trajectory), config.emit))
    return document


def register(subparsers: Subparsers) -> None:
    moduli = subparsers.add_parser("moduli", help="hyperplane loops")
    actions = moduli.add_subparsers(dest="action", required=True)

    check = actions.add_parser("validate", help="general-position certificate")
    check.add_argument("--input", type=Path, default=None)
    check.add_argument("--demo", choices=sorted(DEMOS), default=None)
    add_run_arguments(check)
    check.set_defaults(handler=moduli_validate)

    down = actions.add_parser("descend", help="restrict down to points on the sphere")
    down.add_argument("--input", type=Path, default=None)
    down.add_argument("--demo", choices=sorted(DEMOS), default=None)
    down.add_argument("--route", type=route_argument, default=None, help="hyperplane per level, e.g. 5,4")
    down.add_argument("--emit", choices=["braid", "g3", "g4", "gamma4"], default=None)
    add_run_arguments(down)
    down.set_defaults(handler=moduli_descend)
