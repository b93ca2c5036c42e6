import argparse
from pathlib import Path
from typing import Any

from app.api.commands import Subparsers, add_run_arguments, load_document, route_argument
from app.api.commands.moduli import load_loop
from app.api.models import HyperplaneLoopDocument, RunConfig
from app.api.tools.json_formatter import report_output
from app.engine.demos import DEMOS
from app.engine.homs import HomKind
from app.engine.moduli import HyperplaneLoop
from app.engine.pipeline import run_pipeline
from app.engine.tracker import Trajectory


def pipeline(args: argparse.Namespace) -> dict[str, Any]:
    values: dict[str, Any] = {"command": "pipeline", "input": args.input, "hom": args.hom, "route": args.route}
    if args.seed is not None:
        values["seed"] = args.seed
    if args.tol is not None:
        values["tolerance"] = args.tol
    if args.strict:
        values["strict"] = True
    config = RunConfig(**values)

    source: HyperplaneLoop | Trajectory
    if args.demo is not None or config.input is None:
        source = load_loop(config, args.demo)
    else:
        document = load_document(config.input)
        if isinstance(document, HyperplaneLoopDocument):
            source = HyperplaneLoop.from_document(document)
        else:
            source = Trajectory.from_document(document)

    homs = tuple(HomKind) if config.hom is None else (HomKind(config.hom),)
    report = run_pipeline(
        source, route=config.route, seed=config.seed, tol=config.tolerance, strict=config.strict, homs=homs
    )
    return report_output(report)


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser("pipeline", help="all invariants of a hyperplane loop or a trajectory")
    parser.add_argument("--input", type=Path, default=None)
    parser.add_argument("--demo", choices=sorted(DEMOS), default=None)
    parser.add_argument("--route", type=route_argument, default=None)
    parser.add_argument("--hom", choices=[str(k) for k in HomKind], default=None)
    parser.add_argument("--strict", action="store_true")
    add_run_arguments(parser)
    parser.set_defaults(handler=pipeline)
