import argparse
from typing import Any

from app.api.commands import Subparsers, add_budget_arguments, parse_word_argument
from app.api.models import SearchBudget
from app.api.tools.json_formatter import vector_output, word_output
from app.engine.gamma import GammaPresentation, gamma_abelianize, get_gamma_presentation
from app.engine.gf2 import F2Vector
from app.engine.gnk import GnkPresentation, abelianize, check_parameters, get_presentation, parity
from app.engine.search import equivalent_bounded
from app.engine.words import GroupWord


def _presentation(args: argparse.Namespace) -> GnkPresentation | GammaPresentation:
    if args.gamma:
        return get_gamma_presentation(args.n)
    check_parameters(args.n, args.k)
    return get_presentation(args.n, args.k)


def _abelianization(w: GroupWord, presentation: GnkPresentation | GammaPresentation) -> F2Vector:
    if isinstance(presentation, GammaPresentation):
        return gamma_abelianize(w, presentation)
    return abelianize(w, presentation)


def word_normalize(args: argparse.Namespace) -> dict[str, Any]:
    presentation = _presentation(args)
    w = parse_word_argument(args.word, presentation.alphabet)
    return {"input": word_output(w), "normal_form": word_output(presentation.normalize(w))}


def word_abelianize(args: argparse.Namespace) -> dict[str, Any]:
    presentation = _presentation(args)
    w = parse_word_argument(args.word, presentation.alphabet)
    document: dict[str, Any] = {
        "word": word_output(w),
        "abelianization": vector_output(_abelianization(w, presentation)),
        "parity": parity(w),
    }
    if isinstance(presentation, GammaPresentation):
        document["quotient_dimension"] = presentation.quotient_dimension
    return document


def word_equiv(args: argparse.Namespace) -> dict[str, Any]:
    presentation = _presentation(args)
    budget = SearchBudget.build(args.max_states, args.max_depth, args.max_growth)
    left = parse_word_argument(args.word, presentation.alphabet)
    right = parse_word_argument(args.other, presentation.alphabet)
    result = equivalent_bounded(left, right, presentation, budget)
    return {
        "verdict": str(result.verdict),
        "explored": result.explored,
        "depth": result.depth,
        "abelianizations_agree": _abelianization(left, presentation) == _abelianization(right, presentation),
        "budget": budget.model_dump(),
    }


def register(subparsers: Subparsers) -> None:
    word = subparsers.add_parser("word", help="words in G_n^k or Gamma_n^4")
    actions = word.add_subparsers(dest="action", required=True)
    for name, handler, help_text in (
        ("normalize", word_normalize, "trace normal form"),
        ("abelianize", word_abelianize, "F2 abelianization"),
        ("equiv", word_equiv, "bounded relation search"),
    ):
        parser = actions.add_parser(name, help=help_text)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--k", type=int, default=3)
        parser.add_argument("--gamma", action="store_true")
        parser.add_argument("--word", required=True, help="JSON array of letters or a .json file")
        if name == "equiv":
            parser.add_argument("--other", required=True)
            add_budget_arguments(parser)
        parser.set_defaults(handler=handler)
