import argparse
from typing import Any

from app.api.commands import Subparsers
from app.engine.gamma import get_gamma_presentation
from app.engine.gnk import check_parameters, get_presentation
from app.engine.presentation import Presentation


def _counts(presentation: Presentation) -> dict[str, Any]:
    return {
        "group": str(presentation.alphabet),
        "generators": presentation.generator_count,
        "relations": {str(kind): count for kind, count in presentation.relation_counts().items()},
    }


def groups_info(args: argparse.Namespace) -> dict[str, Any]:
    if args.gamma:
        presentation = get_gamma_presentation(args.n)
        return {**_counts(presentation), "n": args.n, "quotient_dimension": presentation.quotient_dimension}
    check_parameters(args.n, args.k)
    presentation = get_presentation(args.n, args.k)
    # tetrahedron relators use every generator twice, so nothing is killed over F2
    return {**_counts(presentation), "n": args.n, "k": args.k, "quotient_dimension": presentation.generator_count}


def register(subparsers: Subparsers) -> None:
    groups = subparsers.add_parser("groups", help="presentation summaries")
    actions = groups.add_subparsers(dest="action", required=True)
    info = actions.add_parser("info", help="generator and relation counts")
    info.add_argument("--n", type=int, required=True)
    info.add_argument("--k", type=int, default=3)
    info.add_argument("--gamma", action="store_true", help="summarize Gamma_n^4 instead of G_n^k")
    info.set_defaults(handler=groups_info)
